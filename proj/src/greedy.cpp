#include "prga/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "prga/bounds.hpp"
#include "prga/errors.hpp"

namespace prga {

PowerSchedule::PowerSchedule(double alpha) : alpha_(alpha) {
    if (!(std::isfinite(alpha) && alpha > 0.0)) throw DomainError("alpha must be finite and positive");
}

double PowerSchedule::step(std::size_t m) const {
    if (m < 1) throw DomainError("step index starts at 1");
    return std::pow(static_cast<double>(m), -alpha_);
}

Selection greedy_select(const DenseVector& residual, const Dictionary& dict) {
    if (residual.size() != dict.ambient_dim()) {
        throw DomainError("residual dimension " + std::to_string(residual.size()) +
                          " does not match dictionary dimension " + std::to_string(dict.ambient_dim()));
    }
    Selection best;
    bool first = true;
    for (std::size_t i = 0; i < dict.size(); ++i) {
        const double c = dot(residual, dict.generator(i));
        for (int sign : {+1, -1}) {
            const double v = sign * c;
            if (first || v > best.correlation) {
                best = Selection{SignedAtomRef{i, sign}, v};
                first = false;
            }
        }
    }
    return best;
}

double RunTrace::min_residual() const {
    double lo = rows.at(0).residual_l2;
    for (const auto& r : rows) lo = std::min(lo, r.residual_l2);
    return lo;
}

double RunTrace::final_residual() const { return rows.at(rows.size() - 1).residual_l2; }

RunTrace run_prga(const Dictionary& dict, const DenseVector& target, const PowerSchedule& schedule,
                  std::size_t M) {
    if (M < 1) throw DomainError("iteration count M must be at least 1");
    if (target.size() != dict.ambient_dim()) throw DomainError("target dimension does not match dictionary");

    RunTrace trace;
    trace.config.alpha = schedule.alpha();
    trace.config.n = dict.ambient_dim();
    trace.config.M = M;
    trace.rows.reserve(M);

    // The l1 norm of the coefficients is the atomic norm only when the
    // representation is unique.
    const bool two_atom = dict.size() == 2 && std::abs(dot(dict.generator(0), dict.generator(1))) < 1.0;

    std::vector<double> coef(dict.size(), 0.0);
    DenseVector f(dict.ambient_dim());
    PartialProductAccumulator product(schedule.alpha());
    double u1 = 0.0;

    for (std::size_t m = 1; m <= M; ++m) {
        if (m > 1 && trace.rows.back().residual_l2 < kZeroResidual) {
            TraceRow pad = trace.rows.back();
            pad.m = m;
            trace.rows.push_back(std::move(pad));
            continue;
        }

        const Selection sel = greedy_select(target - f, dict);
        const DenseVector& g = dict.generator(sel.ref.index);
        const double sg = static_cast<double>(sel.ref.sign);

        TraceRow row;
        row.m = m;
        row.selected = sel.ref;
        if (m == 1) {
            // f_1 = <r_0, g_1> g_1
            row.lambda = sel.correlation;
            f = (sel.correlation * sg) * g;
            coef[sel.ref.index] = sel.correlation * sg;
        } else {
            const double lam = schedule.step(m);
            row.lambda = lam;
            f = combine(1.0 - lam, f, lam * sg, g);
            for (double& a : coef) a *= 1.0 - lam;
            coef[sel.ref.index] += lam * sg;
            product.advance();
        }
        row.residual_l2 = norm2(target - f);
        row.coefficients = coef;

        if (two_atom) {
            const double s = std::abs(coef[0]) + std::abs(coef[1]);
            row.f_atomic = s;
            if (m == 1) u1 = 1.0 - s;
            row.deficit_floor = u1 * product.value();
        }
        trace.rows.push_back(std::move(row));
    }
    return trace;
}

RunTrace run_rga(const Dictionary& dict, const DenseVector& target, std::size_t M) {
    return run_prga(dict, target, PowerSchedule(1.0), M);
}

RunTrace run_prga(const CoherentPairSpec& spec, const PowerSchedule& schedule, std::size_t M) {
    const CoherentPair pair = make_coherent_pair(spec);
    RunTrace trace = run_prga(pair.dictionary, pair.target, schedule, M);
    trace.config.mu = spec.mu;
    trace.config.b = spec.b;
    return trace;
}

}  // namespace prga
