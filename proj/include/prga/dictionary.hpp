#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "prga/vector.hpp"

namespace prga {

// Tolerance on |‖x_i‖₂ − 1| for stored atoms.
inline constexpr double kUnitNormTolerance = 1e-12;

// Addresses one element of the symmetric closure {±x_i}.
struct SignedAtomRef {
    std::size_t index = 0;
    int sign = +1;

    friend bool operator==(const SignedAtomRef&, const SignedAtomRef&) = default;
};

// Symmetric dictionary of unit vectors. Only the positive generators are
// stored; negations are addressed through SignedAtomRef::sign.
class Dictionary {
public:
    explicit Dictionary(std::vector<DenseVector> atoms);

    std::size_t size() const noexcept { return atoms_.size(); }
    std::size_t ambient_dim() const noexcept { return ambient_dim_; }
    const std::vector<DenseVector>& atoms() const noexcept { return atoms_; }
    const DenseVector& generator(std::size_t i) const;

    // sign * atoms[index]
    DenseVector atom(SignedAtomRef ref) const;

private:
    std::vector<DenseVector> atoms_;
    std::size_t ambient_dim_;
};

struct CoherentPairSpec {
    double mu = 0.0;
    std::size_t ambient_dim = 200;
    double b = 0.25;
    // When set, the pair is carried into a random orthonormal 2-frame of R^n
    // drawn from this seed instead of {e_1, e_2}.
    std::optional<std::uint64_t> rotation_seed;
};

struct CoherentPair {
    Dictionary dictionary;
    DenseVector target;
};

// x_1 = e_1, x_2 = mu e_1 + sqrt(1 - mu²) e_2, y = (1 - b) x_1 + b x_2.
CoherentPair make_coherent_pair(const CoherentPairSpec& spec);

void validate(const CoherentPairSpec& spec);

using Matrix = std::vector<std::vector<double>>;

Matrix gram_matrix(const std::vector<DenseVector>& atoms);

// max_{p != q} |<x_p, x_q>|
double mutual_coherence(const std::vector<DenseVector>& atoms);

}  // namespace prga
