#include "prga/bounds.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "prga/errors.hpp"

namespace prga {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double factor(double alpha, std::size_t k) {
    return 1.0 - std::pow(static_cast<double>(k), -alpha);
}

double log_factor(double alpha, std::size_t k) {
    return std::log1p(-std::pow(static_cast<double>(k), -alpha));
}

// Neumaier summation.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;
    double abs_sum = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            carry += (sum - t) + x;
        } else {
            carry += (x - t) + sum;
        }
        sum = t;
        abs_sum += std::abs(x);
    }
    double value() const { return sum + carry; }
};

void check_alpha_positive(double alpha) {
    if (!(std::isfinite(alpha) && alpha > 0.0)) throw DomainError("alpha must be finite and positive");
}

struct TailEstimate {
    double value;
    double error;
};

// Euler-Maclaurin for sum_{k>=N} k^-s, s > 1, with four Bernoulli terms.
TailEstimate hurwitz_tail(double s, double N) {
    static constexpr std::array<double, 4> kBernoulli = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0};
    double sum = std::pow(N, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(N, -s);

    // rising = s (s+1) ... (s+2i-2), fact = (2i)!
    double rising = s;
    double fact = 2.0;
    for (std::size_t i = 1; i <= kBernoulli.size(); ++i) {
        const double order = 2.0 * static_cast<double>(i) - 1.0;
        sum += kBernoulli[i - 1] / fact * rising * std::pow(N, -s - order);
        rising *= (s + order) * (s + order + 1.0);
        fact *= (2.0 * i + 1.0) * (2.0 * i + 2.0);
    }
    // |R_p| <= 2 zeta(2p) / (2 pi)^(2p) * |f^(2p-1)(N)|, p = 4; 2 zeta(8) < 4.
    // rising now holds s (s+1) ... (s+8), one factor too many for f^(7).
    const double p = static_cast<double>(kBernoulli.size());
    const double f7 = rising / ((s + 2 * p - 1.0) * (s + 2 * p)) * std::pow(N, -s - 2 * p + 1);
    const double err = 4.0 / std::pow(2.0 * M_PI, 2 * p) * f7;
    return {sum, err};
}

}  // namespace

double integral_tail_estimate(double alpha, std::size_t K) {
    if (!(alpha > 1.0)) throw DivergedProductError("alpha must exceed 1 for a convergent tail");
    if (K < 1) throw DomainError("truncation index must be at least 1");
    return std::pow(static_cast<double>(K), 1.0 - alpha) / (alpha - 1.0);
}

double partial_product(double alpha, std::size_t m) {
    check_alpha_positive(alpha);
    if (m < 2) throw DomainError("partial product needs m >= 2");
    PartialProductAccumulator acc(alpha);
    while (acc.m() < m) acc.advance();
    return acc.value();
}

double log_partial_product(double alpha, std::size_t m) {
    check_alpha_positive(alpha);
    if (m < 2) throw DomainError("partial product needs m >= 2");
    CompensatedSum sum;
    for (std::size_t k = 2; k <= m; ++k) sum.add(log_factor(alpha, k));
    return sum.value();
}

PartialProductAccumulator::PartialProductAccumulator(double alpha) : alpha_(alpha) {
    check_alpha_positive(alpha);
}

void PartialProductAccumulator::advance() {
    ++m_;
    value_ *= factor(alpha_, m_);
}

ProductResult p_alpha(double alpha, double tol) {
    if (!std::isfinite(alpha)) throw DomainError("alpha must be finite");
    if (!(alpha > 1.0)) {
        throw DivergedProductError("alpha must exceed 1 for bound computation (the product tends to 0)");
    }
    if (!(tol > 0.0 && tol <= 1e-3)) throw DomainError("tol must lie in (0, 1e-3]");

    ProductResult out;
    out.alpha = alpha;
    out.K = kProductCutoff;

    CompensatedSum head;
    for (std::size_t k = 2; k <= out.K; ++k) head.add(log_factor(alpha, k));
    out.log_partial = head.value();

    // |log(1-x)| <= x / (1-x) on (0,1), and x <= (K+1)^-alpha beyond the cutoff.
    const double K = static_cast<double>(out.K);
    const double N = K + 1.0;
    out.tail_bound = integral_tail_estimate(alpha, out.K) / (1.0 - std::pow(N, -alpha));

    // sum_{k>K} log(1 - k^-alpha) = -sum_{j>=1} (1/j) sum_{k>=N} k^(-j alpha)
    CompensatedSum tail;
    double method_error = 0.0;
    const double shrink = std::pow(N, -alpha);
    for (std::size_t j = 1;; ++j) {
        const double s = static_cast<double>(j) * alpha;
        const TailEstimate z = hurwitz_tail(s, N);
        tail.add(-z.value / static_cast<double>(j));
        method_error += z.error / static_cast<double>(j);

        // sum_{j'>j} sum_{k>=N} k^(-j' alpha) <= sum_{j'>j} N^(-j' alpha) (1 + N / (j' alpha - 1))
        const double s_next = s + alpha;
        const double remainder =
            std::pow(N, -s_next) * (1.0 + N / (s_next - 1.0)) / (1.0 - shrink);
        if (remainder <= 1e-3 * tol || j >= 200) {
            method_error += remainder;
            break;
        }
    }
    out.tail_correction = tail.value();
    out.log_value = out.log_partial + out.tail_correction;

    // Each log1p term carries a few ulps; compensated accumulation adds O(eps |S|).
    const double rounding = 4.0 * kEps * (head.abs_sum + tail.abs_sum) + 2.0 * kEps * std::abs(out.log_value);
    out.error_bound = method_error + rounding;
    if (out.error_bound > tol) {
        throw DomainError("cannot certify P_alpha to tol " + std::to_string(tol) + " (achievable " +
                          std::to_string(out.error_bound) + ")");
    }

    out.value = std::exp(out.log_value);
    if (!(out.value >= std::numeric_limits<double>::min())) {
        throw DomainError("P_alpha underflows double precision for alpha = " + std::to_string(alpha));
    }
    return out;
}

double coherence_factor(double mu, double b) {
    return b * (1.0 - mu) * std::sqrt((1.0 + mu) / 2.0);
}

BoundReport theorem_floor(double mu, double b, double alpha, double tol) {
    if (!(mu >= 0.0 && mu < 1.0)) throw DomainError("mu must lie in [0, 1)");
    if (!(b > 0.0 && b < 0.5)) throw DomainError("b must lie in (0, 1/2)");

    BoundReport r;
    r.mu = mu;
    r.b = b;
    r.alpha = alpha;
    r.p_alpha = p_alpha(alpha, tol);
    const double P = r.p_alpha.value;
    r.theorem_floor = coherence_factor(mu, b) * P;
    if (mu <= 0.5) {
        r.linear_floor = b * P / std::sqrt(2.0) - (3.0 * b * P / (4.0 * std::sqrt(2.0))) * mu;
    }
    return r;
}

double sparse_floor(std::size_t s, double mu_s, double y_atomic, double f_atomic) {
    if (s < 1) throw DomainError("sparsity s must be at least 1");
    if (!(std::isfinite(mu_s) && mu_s >= 0.0)) throw DomainError("mu_s must be finite and non-negative");
    if (!(y_atomic >= 0.0) || !(f_atomic >= 0.0)) throw DomainError("atomic norms must be non-negative");
    const double sd = static_cast<double>(s);
    const double gap = 1.0 - (sd - 1.0) * mu_s;
    if (s >= 2 && !(gap > 0.0)) {
        throw DomainError("mu_s must be below 1/(s-1) = " + std::to_string(1.0 / (sd - 1.0)));
    }
    return std::sqrt(gap) / std::sqrt(sd) * std::max(0.0, y_atomic - f_atomic);
}

}  // namespace prga
