#include "kfinit/uniform_circulant.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kfinit {

UniformCirculant UniformCirculant::from_diag_offdiag(double diag, double offdiag, std::size_t n) {
    if (n < 1) throw DimensionError("from_diag_offdiag: dimension must be >= 1");
    return {diag - offdiag, offdiag, n};
}

UniformCirculant UniformCirculant::scaled_identity(double s, std::size_t n) {
    if (n < 1) throw DimensionError("scaled_identity: dimension must be >= 1");
    return {s, 0.0, n};
}

double UniformCirculant::default_tol() const {
    return 1e-12 * std::max(1.0, std::abs(alpha) + static_cast<double>(n) * std::abs(beta));
}

UniformCirculant UniformCirculant::inverse(double tol) const {
    auto [lam_rest, lam_ones] = eigenvalues();
    if (std::abs(lam_rest) <= tol) {
        throw SingularMatrixError("uniform circulant is singular: eigenvalue alpha = " +
                                      std::to_string(lam_rest) + " within tolerance " +
                                      std::to_string(tol) + " of zero",
                                  lam_rest);
    }
    if (std::abs(lam_ones) <= tol) {
        throw SingularMatrixError("uniform circulant is singular: eigenvalue alpha + n*beta = " +
                                      std::to_string(lam_ones) + " within tolerance " +
                                      std::to_string(tol) + " of zero",
                                  lam_ones);
    }
    return {1.0 / alpha, -beta / (alpha * lam_ones), n};
}

Vector UniformCirculant::apply(const Vector& v) const {
    if (v.size() != n) {
        throw DimensionError("uniform circulant of dimension " + std::to_string(n) +
                             " applied to vector of length " + std::to_string(v.size()));
    }
    double sum = 0.0;
    for (double x : v) sum += x;
    Vector out(n);
    const double shift = beta * sum;
    for (std::size_t i = 0; i < n; ++i) out[i] = alpha * v[i] + shift;
    return out;
}

DenseMatrix UniformCirculant::dense() const {
    DenseMatrix m(n, n, beta);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += alpha;
    return m;
}

UniformCirculant operator+(const UniformCirculant& a, const UniformCirculant& b) {
    if (a.n != b.n) {
        throw DimensionError("uniform circulant sum: dimensions " + std::to_string(a.n) + " and " +
                             std::to_string(b.n) + " differ");
    }
    return {a.alpha + b.alpha, a.beta + b.beta, a.n};
}

UniformCirculant operator*(const UniformCirculant& a, const UniformCirculant& b) {
    if (a.n != b.n) {
        throw DimensionError("uniform circulant product: dimensions " + std::to_string(a.n) +
                             " and " + std::to_string(b.n) + " differ");
    }
    // (aI + bJ)(cI + dJ) = ac I + (ad + bc + n b d) J, using J^2 = nJ.
    const double nn = static_cast<double>(a.n);
    return {a.alpha * b.alpha, a.alpha * b.beta + a.beta * b.alpha + nn * a.beta * b.beta, a.n};
}

}  // namespace kfinit
