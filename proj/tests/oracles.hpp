#pragma once

// Test-only reference computations, independent of the library code paths
// they check.

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <vector>

namespace prga::oracle {

// Plain product in long double, no log space.
inline long double brute_partial_product(double alpha, std::size_t K) {
    long double p = 1.0L;
    for (std::size_t k = 2; k <= K; ++k) p *= 1.0L - std::pow(static_cast<long double>(k), -static_cast<long double>(alpha));
    return p;
}

inline double min_eigenvalue(const std::vector<std::vector<double>>& g) {
    const auto n = static_cast<Eigen::Index>(g.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = g[i][j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

struct ReferenceRun {
    std::vector<double> residual;
    std::vector<int> pick;  // signed, 1-based: +1 = x_1, -2 = -x_2
};

// Straight-line PRGA on the coherent pair with Eigen vectors.
inline ReferenceRun reference_prga(double alpha, double mu, double b, std::size_t M, std::size_t n = 200) {
    Eigen::VectorXd x1 = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    Eigen::VectorXd x2 = x1;
    x1(0) = 1.0;
    x2(0) = mu;
    x2(1) = std::sqrt(1.0 - mu * mu);
    const Eigen::VectorXd y = (1.0 - b) * x1 + b * x2;
    Eigen::VectorXd f = Eigen::VectorXd::Zero(y.size());
    ReferenceRun out;
    for (std::size_t m = 1; m <= M; ++m) {
        const Eigen::VectorXd r = y - f;
        const double c1 = r.dot(x1);
        const double c2 = r.dot(x2);
        Eigen::VectorXd g;
        int pick;
        if (std::abs(c1) >= std::abs(c2)) {
            pick = c1 >= 0 ? 1 : -1;
            g = pick * x1;
        } else {
            pick = c2 >= 0 ? 2 : -2;
            g = (pick > 0 ? 1.0 : -1.0) * x2;
        }
        if (m == 1) {
            f = r.dot(g) * g;
        } else {
            const double lam = std::pow(static_cast<double>(m), -alpha);
            f = (1.0 - lam) * f + lam * g;
        }
        out.residual.push_back((y - f).norm());
        out.pick.push_back(pick);
    }
    return out;
}

// P_alpha at 40 digits: mpmath head sum to K plus the Hurwitz-zeta tail
// -sum_j zeta(j alpha, K+1) / j, identical for K = 50 and K = 1000.
inline constexpr double kP_1_1 = 0.00005000913529086773288752933;
inline constexpr double kP_1_5 = 0.1759385474563453466951219;

}  // namespace prga::oracle
