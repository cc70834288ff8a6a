#include "prga/dictionary.hpp"

#include <cmath>
#include <random>
#include <string>

#include "prga/errors.hpp"

namespace prga {

Dictionary::Dictionary(std::vector<DenseVector> atoms) : atoms_(std::move(atoms)), ambient_dim_(0) {
    if (atoms_.empty()) throw DomainError("dictionary must contain at least one atom");
    ambient_dim_ = atoms_.front().size();
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i].size() != ambient_dim_) {
            throw DomainError("atom " + std::to_string(i) + " has dimension " +
                              std::to_string(atoms_[i].size()) + ", expected " +
                              std::to_string(ambient_dim_));
        }
        const double nrm = norm2(atoms_[i]);
        if (std::abs(nrm - 1.0) > kUnitNormTolerance) {
            throw DomainError("atom " + std::to_string(i) + " is not unit norm");
        }
    }
}

const DenseVector& Dictionary::generator(std::size_t i) const {
    if (i >= atoms_.size()) {
        throw DomainError("atom index " + std::to_string(i) + " out of range for dictionary of size " +
                          std::to_string(atoms_.size()));
    }
    return atoms_[i];
}

DenseVector Dictionary::atom(SignedAtomRef ref) const {
    if (ref.sign != 1 && ref.sign != -1) throw DomainError("atom sign must be +1 or -1");
    const DenseVector& g = generator(ref.index);
    return ref.sign > 0 ? g : -g;
}

void validate(const CoherentPairSpec& spec) {
    if (!(spec.mu >= 0.0 && spec.mu < 1.0)) throw DomainError("mu must lie in [0, 1)");
    if (!(spec.b > 0.0 && spec.b < 0.5)) throw DomainError("b must lie in (0, 1/2)");
    if (spec.ambient_dim < 2) throw DomainError("ambient dimension n must be at least 2");
}

namespace {

// Two orthonormal vectors in R^n from Gaussian draws, Gram-Schmidt applied twice.
std::pair<DenseVector, DenseVector> random_frame(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    auto draw = [&] {
        std::vector<double> v(n);
        for (double& c : v) c = normal(rng);
        return DenseVector(std::move(v));
    };
    DenseVector q1 = draw();
    q1 *= 1.0 / norm2(q1);
    DenseVector q2 = draw();
    for (int pass = 0; pass < 2; ++pass) q2 = combine(1.0, q2, -dot(q1, q2), q1);
    q2 *= 1.0 / norm2(q2);
    return {std::move(q1), std::move(q2)};
}

}  // namespace

CoherentPair make_coherent_pair(const CoherentPairSpec& spec) {
    validate(spec);
    const std::size_t n = spec.ambient_dim;
    const double s = std::sqrt(1.0 - spec.mu * spec.mu);

    DenseVector e1 = unit_vector(n, 0);
    DenseVector e2 = unit_vector(n, 1);
    if (spec.rotation_seed) {
        auto frame = random_frame(n, *spec.rotation_seed);
        e1 = std::move(frame.first);
        e2 = std::move(frame.second);
    }
    DenseVector x1 = e1;
    DenseVector x2 = combine(spec.mu, e1, s, e2);
    DenseVector y = combine(1.0 - spec.b, x1, spec.b, x2);
    return CoherentPair{Dictionary({std::move(x1), std::move(x2)}), std::move(y)};
}

Matrix gram_matrix(const std::vector<DenseVector>& atoms) {
    if (atoms.empty()) throw DomainError("gram matrix needs at least one atom");
    const std::size_t s = atoms.size();
    for (const auto& a : atoms) {
        if (a.size() != atoms.front().size()) throw DomainError("dimension mismatch in gram matrix");
    }
    Matrix g(s, std::vector<double>(s, 0.0));
    for (std::size_t p = 0; p < s; ++p) {
        for (std::size_t q = p; q < s; ++q) {
            g[p][q] = dot(atoms[p], atoms[q]);
            g[q][p] = g[p][q];
        }
    }
    return g;
}

double mutual_coherence(const std::vector<DenseVector>& atoms) {
    if (atoms.size() < 2) throw DomainError("mutual coherence needs at least 2 atoms");
    const Matrix g = gram_matrix(atoms);
    double mu = 0.0;
    for (std::size_t p = 0; p < g.size(); ++p) {
        for (std::size_t q = p + 1; q < g.size(); ++q) mu = std::max(mu, std::abs(g[p][q]));
    }
    return mu;
}

}  // namespace prga
