#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "kfinit/errors.hpp"

namespace kfinit {

using Vector = std::vector<double>;

/// Row-major dense matrix of doubles. Weight (i,j) of a layer sits at flat
/// index i*cols + j; this flattening order is relied on by the initializer.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static DenseMatrix from_flat(std::size_t rows, std::size_t cols, Vector flat);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    const Vector& flat() const { return data_; }
    Vector& flat() { return data_; }

    bool all_finite() const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Vector data_;
};

/// m * v
Vector matvec(const DenseMatrix& m, const Vector& v);

/// m^T * v
Vector matvec_transpose(const DenseMatrix& m, const Vector& v);

/// u v^T, shape u.size() x v.size()
DenseMatrix outer(const Vector& u, const Vector& v);

/// Componentwise product.
Vector hadamard(const Vector& u, const Vector& v);

/// acc += scale * u v^T. Gradient accumulation path of the training loop.
void add_scaled_outer(DenseMatrix& acc, const Vector& u, const Vector& v, double scale);

double dot(const Vector& u, const Vector& v);
double squared_norm(const Vector& v);
bool all_finite(const Vector& v);

}  // namespace kfinit
