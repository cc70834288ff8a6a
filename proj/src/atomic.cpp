#include "prga/atomic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "prga/errors.hpp"

namespace prga {

SpanBasis::SpanBasis(std::vector<DenseVector> atoms) : atoms_(std::move(atoms)) {
    // Dictionary enforces unit norms and equal dimensions.
    const Dictionary check(atoms_);
    gram_ = gram_matrix(atoms_);
    const std::size_t s = atoms_.size();
    coherence_ = s >= 2 ? mutual_coherence(atoms_) : 0.0;
    min_eig_floor_ = 1.0 - static_cast<double>(s - 1) * coherence_;
    if (!(min_eig_floor_ > 0.0)) {
        throw DomainError("span basis violates coherence condition mu_S < 1/(s-1)");
    }

    chol_.assign(s, std::vector<double>(s, 0.0));
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double acc = gram_[i][j];
            for (std::size_t k = 0; k < j; ++k) acc -= chol_[i][k] * chol_[j][k];
            if (i == j) {
                if (!(acc > 0.0)) throw DomainError("singular Gram system");
                chol_[i][i] = std::sqrt(acc);
            } else {
                chol_[i][j] = acc / chol_[j][j];
            }
        }
    }
}

std::vector<double> SpanBasis::coefficients(const DenseVector& u) const {
    const std::size_t s = atoms_.size();
    if (u.size() != atoms_.front().size()) throw DomainError("dimension mismatch in atomic norm");

    std::vector<double> rhs(s);
    for (std::size_t i = 0; i < s; ++i) rhs[i] = dot(atoms_[i], u);
    // L z = rhs, then L^T a = z
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t k = 0; k < i; ++k) rhs[i] -= chol_[i][k] * rhs[k];
        rhs[i] /= chol_[i][i];
    }
    for (std::size_t i = s; i-- > 0;) {
        for (std::size_t k = i + 1; k < s; ++k) rhs[i] -= chol_[k][i] * rhs[k];
        rhs[i] /= chol_[i][i];
    }

    const double scale = norm2(u);
    const double off = norm2(u - synthesize(rhs));
    if (off > kSpanTolerance * std::max(scale, 1.0)) {
        throw DomainError("vector lies outside the span of the basis (distance " + std::to_string(off) + ")");
    }
    return rhs;
}

DenseVector SpanBasis::synthesize(const std::vector<double>& coefficients) const {
    if (coefficients.size() != atoms_.size()) throw DomainError("coefficient count mismatch");
    DenseVector out(atoms_.front().size());
    for (std::size_t j = 0; j < atoms_.size(); ++j) out += coefficients[j] * atoms_[j];
    return out;
}

double atomic_norm(const DenseVector& u, const SpanBasis& basis) {
    double l1 = 0.0;
    for (double a : basis.coefficients(u)) l1 += std::abs(a);
    return l1;
}

double dual_atomic_norm(const DenseVector& v, const Dictionary& dict) {
    double best = 0.0;
    for (const auto& x : dict.atoms()) best = std::max(best, std::abs(dot(v, x)));
    return best;
}

DenseVector witness_vector(const Dictionary& dict) {
    if (dict.size() != 2) throw DomainError("witness vector needs a two-atom dictionary");
    const DenseVector& x1 = dict.generator(0);
    const DenseVector& x2 = dict.generator(1);
    if (dot(x1, x2) < 0.0) throw DomainError("witness vector needs <x_1, x_2> >= 0");
    DenseVector sum = x1 + x2;
    sum *= 1.0 / norm2(sum);
    return sum;
}

double min_eigenvalue(const Matrix& symmetric) {
    const std::size_t n = symmetric.size();
    if (n == 0) throw DomainError("empty matrix");
    Matrix a = symmetric;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    double lo = a[0][0];
    for (std::size_t i = 1; i < n; ++i) lo = std::min(lo, a[i][i]);
    return lo;
}

double gershgorin_floor(const SpanBasis& basis, bool verify) {
    const double floor = basis.min_eig_floor();
    if (verify) {
        const double lam = min_eigenvalue(basis.gram());
        if (lam < floor - 1e-12) {
            throw std::logic_error("Gershgorin floor " + std::to_string(floor) +
                                   " exceeds minimum eigenvalue " + std::to_string(lam));
        }
    }
    return floor;
}

}  // namespace prga
