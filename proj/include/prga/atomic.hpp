#pragma once

#include <vector>

#include "prga/dictionary.hpp"
#include "prga/vector.hpp"

namespace prga {

// Relative tolerance for span membership in atomic_norm.
inline constexpr double kSpanTolerance = 1e-9;

// Linearly independent unit atoms with unit-diagonal Gram matrix satisfying
// 1 - (s-1) mu_S > 0. The Gram matrix is Cholesky-factored at construction.
class SpanBasis {
public:
    explicit SpanBasis(std::vector<DenseVector> atoms);
    explicit SpanBasis(const Dictionary& dict) : SpanBasis(dict.atoms()) {}

    std::size_t size() const noexcept { return atoms_.size(); }
    const std::vector<DenseVector>& atoms() const noexcept { return atoms_; }
    const Matrix& gram() const noexcept { return gram_; }
    double coherence() const noexcept { return coherence_; }
    double min_eig_floor() const noexcept { return min_eig_floor_; }

    // Unique a with u = sum_j a_j x_j; throws if u is detectably off-span.
    std::vector<double> coefficients(const DenseVector& u) const;

    DenseVector synthesize(const std::vector<double>& coefficients) const;

private:
    std::vector<DenseVector> atoms_;
    Matrix gram_;
    Matrix chol_;
    double coherence_ = 0.0;
    double min_eig_floor_ = 1.0;
};

double atomic_norm(const DenseVector& u, const SpanBasis& basis);

// max_{g in ±D} <v, g> = max_i |<v, x_i>|
double dual_atomic_norm(const DenseVector& v, const Dictionary& dict);

// (x_1 + x_2) / ‖x_1 + x_2‖₂ for a two-atom dictionary with <x_1, x_2> >= 0.
DenseVector witness_vector(const Dictionary& dict);

// 1 - (s-1) mu_S. With verify set, also checks the true minimum eigenvalue of
// the Gram matrix against the floor and throws std::logic_error on failure.
double gershgorin_floor(const SpanBasis& basis, bool verify = false);

// Smallest eigenvalue of a symmetric matrix (cyclic Jacobi).
double min_eigenvalue(const Matrix& symmetric);

}  // namespace prga
