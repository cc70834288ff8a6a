#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "prga/dictionary.hpp"
#include "prga/vector.hpp"

namespace prga {

// Residuals below this are treated as exact recovery; later rows repeat the
// last state.
inline constexpr double kZeroResidual = 1e-15;

// lambda_m = m^-alpha, alpha > 0.
class PowerSchedule {
public:
    explicit PowerSchedule(double alpha);

    double alpha() const noexcept { return alpha_; }
    double step(std::size_t m) const;

private:
    double alpha_;
};

struct Selection {
    SignedAtomRef ref;
    double correlation = 0.0;
};

// Signed sup of <residual, g> over ±D. Ties go to the lowest index, then +1.
Selection greedy_select(const DenseVector& residual, const Dictionary& dict);

struct TraceRow {
    std::size_t m = 0;
    // Step size used; at m = 1 the projection coefficient <r_0, g_1>.
    double lambda = 0.0;
    SignedAtomRef selected;
    double residual_l2 = 0.0;
    // Two-atom runs only.
    std::optional<double> f_atomic;
    std::optional<double> deficit_floor;
    // f_m = sum_j coefficients[j] x_j
    std::vector<double> coefficients;
};

struct RunConfig {
    double alpha = 1.0;
    std::optional<double> mu;
    std::optional<double> b;
    std::size_t n = 0;
    std::size_t M = 0;
};

struct RunTrace {
    RunConfig config;
    std::vector<TraceRow> rows;

    double min_residual() const;
    double final_residual() const;
};

RunTrace run_prga(const Dictionary& dict, const DenseVector& target, const PowerSchedule& schedule,
                  std::size_t M);

// PRGA with alpha = 1.
RunTrace run_rga(const Dictionary& dict, const DenseVector& target, std::size_t M);

// Builds the coherent pair and fills mu and b in the config echo.
RunTrace run_prga(const CoherentPairSpec& spec, const PowerSchedule& schedule, std::size_t M);

}  // namespace prga
