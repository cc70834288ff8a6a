#pragma once

#include <cstddef>
#include <optional>

namespace prga {

inline constexpr double kDefaultProductTolerance = 1e-12;

// Cutoff below which log(1 - k^-alpha) is summed term by term; the remainder
// of the series is evaluated in closed form (see p_alpha).
inline constexpr std::size_t kProductCutoff = 1000;

// P_alpha = prod_{k>=2} (1 - k^-alpha), evaluated in log space.
struct ProductResult {
    double alpha = 0.0;
    std::size_t K = 0;
    // sum_{k=2}^K log(1 - k^-alpha)
    double log_partial = 0.0;
    // Closed-form estimate of sum_{k>K} log(1 - k^-alpha).
    double tail_correction = 0.0;
    double log_value = 0.0;
    double value = 0.0;
    // Certified bound on |log P_alpha - log_partial| (uncorrected truncation).
    double tail_bound = 0.0;
    // Certified bound on |log P_alpha - log_value|; never exceeds the requested tol.
    double error_bound = 0.0;
};

// Rejects alpha <= 1 with DivergedProductError and tol outside (0, 1e-3]
// with DomainError.
ProductResult p_alpha(double alpha, double tol = kDefaultProductTolerance);

// K^(1-alpha) / (alpha - 1), the integral estimate of sum_{k>K} k^-alpha.
double integral_tail_estimate(double alpha, std::size_t K);

// prod_{k=2}^m (1 - k^-alpha), m >= 2, alpha > 0.
double partial_product(double alpha, std::size_t m);

// sum_{k=2}^m log(1 - k^-alpha), compensated summation.
double log_partial_product(double alpha, std::size_t m);

// Running product prod_{k=2}^m (1 - k^-alpha); starts at m = 1 with the
// empty product. Uses the same arithmetic as partial_product, so the two agree
// bit for bit.
class PartialProductAccumulator {
public:
    explicit PartialProductAccumulator(double alpha);

    // Multiplies in the factor for m + 1.
    void advance();

    std::size_t m() const noexcept { return m_; }
    double value() const noexcept { return value_; }

private:
    double alpha_;
    std::size_t m_ = 1;
    double value_ = 1.0;
};

// b (1 - mu) sqrt((1 + mu) / 2)
double coherence_factor(double mu, double b);

struct BoundReport {
    double mu = 0.0;
    double b = 0.0;
    double alpha = 0.0;
    ProductResult p_alpha;
    double theorem_floor = 0.0;
    // b P / sqrt(2) - (3 b P / (4 sqrt(2))) mu, present iff mu <= 1/2.
    // Note it exceeds theorem_floor for mu above 0.44906 (where
    // (1 - mu) sqrt(1 + mu) drops below 1 - 3 mu / 4).
    std::optional<double> linear_floor;
};

BoundReport theorem_floor(double mu, double b, double alpha, double tol = kDefaultProductTolerance);

// sqrt(1 - (s-1) mu_s) / sqrt(s) * max(0, y_atomic - f_atomic)
double sparse_floor(std::size_t s, double mu_s, double y_atomic, double f_atomic);

}  // namespace prga
