#pragma once

#include <cstddef>
#include <utility>

#include "kfinit/linalg.hpp"

namespace kfinit {

/// The matrix family alpha*I + beta*J, with J the all-ones matrix: constant
/// diagonal alpha+beta, constant off-diagonal beta. Closed under addition,
/// multiplication and inversion, so the whole covariance recursion runs in
/// O(1) parameter arithmetic instead of O(n^3) dense algebra. Members are
/// circulant; eigenvalues are alpha (multiplicity n-1, any direction
/// orthogonal to the ones vector) and alpha + n*beta (the ones direction).
struct UniformCirculant {
    double alpha = 0.0;  ///< diagonal excess over the uniform part
    double beta = 0.0;   ///< uniform part, shared by every entry
    std::size_t n = 0;   ///< dimension

    /// Build from the dense entries: constant diagonal `diag`, constant
    /// off-diagonal `offdiag`.
    static UniformCirculant from_diag_offdiag(double diag, double offdiag, std::size_t n);

    /// s * I
    static UniformCirculant scaled_identity(double s, std::size_t n);

    /// (alpha, alpha + n*beta)
    std::pair<double, double> eigenvalues() const { return {alpha, alpha + static_cast<double>(n) * beta}; }

    bool positive_definite() const {
        auto [lo, hi] = eigenvalues();
        return lo > 0.0 && hi > 0.0;
    }

    /// Scale-aware singularity tolerance used when none is given.
    double default_tol() const;

    /// Closed-form inverse: (1/alpha) I - beta/(alpha*(alpha+n*beta)) J.
    /// Throws SingularMatrixError if either eigenvalue is within tol of zero.
    UniformCirculant inverse(double tol) const;
    UniformCirculant inverse() const { return inverse(default_tol()); }

    /// Matrix-vector product in O(n): alpha*v + beta*sum(v)*ones.
    Vector apply(const Vector& v) const;

    /// Explicit n x n realization (test oracles, small n).
    DenseMatrix dense() const;

    friend UniformCirculant operator+(const UniformCirculant& a, const UniformCirculant& b);
    friend UniformCirculant operator*(const UniformCirculant& a, const UniformCirculant& b);
    friend bool operator==(const UniformCirculant&, const UniformCirculant&) = default;
};

}  // namespace kfinit
