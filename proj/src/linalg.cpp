#include "kfinit/linalg.hpp"

#include <cmath>
#include <string>

namespace kfinit {

namespace {

std::string shape_of(const DenseMatrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    DenseMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != m.cols()) throw DimensionError("from_rows: ragged row " + std::to_string(i));
        std::size_t j = 0;
        for (double x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

DenseMatrix DenseMatrix::from_flat(std::size_t rows, std::size_t cols, Vector flat) {
    if (flat.size() != rows * cols) {
        throw DimensionError("from_flat: " + std::to_string(flat.size()) + " values cannot fill " +
                             std::to_string(rows) + "x" + std::to_string(cols));
    }
    DenseMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(flat);
    return m;
}

bool DenseMatrix::all_finite() const {
    return kfinit::all_finite(data_);
}

Vector matvec(const DenseMatrix& m, const Vector& v) {
    if (m.cols() != v.size()) {
        throw DimensionError("matvec: matrix " + shape_of(m) + " does not match vector of length " +
                             std::to_string(v.size()));
    }
    Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double* row = m.row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += row[j] * v[j];
        out[i] = acc;
    }
    return out;
}

Vector matvec_transpose(const DenseMatrix& m, const Vector& v) {
    if (m.rows() != v.size()) {
        throw DimensionError("matvec_transpose: matrix " + shape_of(m) +
                             " does not match vector of length " + std::to_string(v.size()));
    }
    Vector out(m.cols(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const double* row = m.row(i);
        const double vi = v[i];
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += row[j] * vi;
    }
    return out;
}

DenseMatrix outer(const Vector& u, const Vector& v) {
    DenseMatrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        double* row = m.row(i);
        for (std::size_t j = 0; j < v.size(); ++j) row[j] = u[i] * v[j];
    }
    return m;
}

Vector hadamard(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) {
        throw DimensionError("hadamard: lengths " + std::to_string(u.size()) + " and " +
                             std::to_string(v.size()) + " differ");
    }
    Vector out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] * v[i];
    return out;
}

void add_scaled_outer(DenseMatrix& acc, const Vector& u, const Vector& v, double scale) {
    if (acc.rows() != u.size() || acc.cols() != v.size()) {
        throw DimensionError("add_scaled_outer: accumulator " + shape_of(acc) +
                             " does not match outer product " + std::to_string(u.size()) + "x" +
                             std::to_string(v.size()));
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        double* row = acc.row(i);
        const double s = scale * u[i];
        for (std::size_t j = 0; j < v.size(); ++j) row[j] += s * v[j];
    }
}

double dot(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) {
        throw DimensionError("dot: lengths " + std::to_string(u.size()) + " and " +
                             std::to_string(v.size()) + " differ");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

double squared_norm(const Vector& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return acc;
}

bool all_finite(const Vector& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

}  // namespace kfinit
