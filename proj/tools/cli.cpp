#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>

#include "prga/bounds.hpp"
#include "prga/dictionary.hpp"
#include "prga/errors.hpp"
#include "prga/greedy.hpp"
#include "prga/harness.hpp"

namespace prga::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kIo = 2;

struct RunArgs {
    double alpha = 0.0;
    double mu = 0.0;
    double b = 0.25;
    std::size_t n = 200;
    std::size_t iters = 800;
    std::optional<std::string> out;
    std::optional<std::uint64_t> rotate_seed;
};

struct SweepArgs {
    std::string alphas;
    std::string mus;
    double b = 0.25;
    std::size_t n = 200;
    std::size_t iters = 800;
    std::size_t threads = 0;
    std::string out_csv;
    std::optional<std::string> out_svg;
};

struct BoundArgs {
    double alpha = 0.0;
    double mu = 0.0;
    double b = 0.25;
    double tol = kDefaultProductTolerance;
};

struct SparseArgs {
    std::size_t s = 1;
    double mu_s = 0.0;
    double y_atomic = 0.0;
    double f_atomic = 0.0;
};

void require_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw DomainError(std::string(name) + " must be finite");
}

int do_run(const RunArgs& a, std::ostream& out) {
    require_finite(a.alpha, "alpha");
    if (!(a.alpha > 0.0)) throw DomainError("alpha must be positive");
    if (a.iters < 1) throw DomainError("iters must be at least 1");
    CoherentPairSpec spec;
    spec.mu = a.mu;
    spec.b = a.b;
    spec.ambient_dim = a.n;
    spec.rotation_seed = a.rotate_seed;
    validate(spec);

    const RunTrace trace = run_prga(spec, PowerSchedule(a.alpha), a.iters);
    const std::string csv = format_trace_csv(trace);
    if (a.out) {
        write_text_file(*a.out, csv);
    } else {
        out << csv;
    }
    return kOk;
}

int do_sweep(SweepConfig config, const SweepArgs& a, std::ostream& out) {
    if (!a.alphas.empty()) config.alpha_grid = parse_grid(a.alphas);
    if (!a.mus.empty()) config.mu_grid = parse_grid(a.mus);
    config.b = a.b;
    config.n = a.n;
    config.M = a.iters;
    config.threads = a.threads;
    config.csv_path = a.out_csv;
    config.svg_path = a.out_svg;

    const auto cells = run_sweep(config);
    write_csv(cells, *config.csv_path);
    if (config.svg_path) render_svg(cells, *config.svg_path);

    std::optional<double> worst;
    for (const auto& c : cells) {
        if (auto r = c.bound_ratio()) worst = worst ? std::min(*worst, *r) : *r;
    }
    out << "cells=" << cells.size() << '\n';
    if (worst) out << "min_residual_over_bound=" << format_real(*worst) << '\n';
    return kOk;
}

int do_bound(const BoundArgs& a, std::ostream& out) {
    require_finite(a.alpha, "alpha");
    if (!(a.alpha > 1.0)) throw DomainError("alpha must exceed 1 for bound computation");
    const BoundReport r = theorem_floor(a.mu, a.b, a.alpha, a.tol);
    out << "p_alpha=" << format_real(r.p_alpha.value) << '\n';
    out << "tail_bound=" << format_real(r.p_alpha.tail_bound) << '\n';
    out << "K=" << r.p_alpha.K << '\n';
    out << "error_bound=" << format_real(r.p_alpha.error_bound) << '\n';
    out << "theorem_floor=" << format_real(r.theorem_floor) << '\n';
    if (r.linear_floor) out << "linear_floor=" << format_real(*r.linear_floor) << '\n';
    return kOk;
}

int do_sparse(const SparseArgs& a, std::ostream& out) {
    out << "sparse_floor=" << format_real(sparse_floor(a.s, a.mu_s, a.y_atomic, a.f_atomic)) << '\n';
    return kOk;
}

void add_sweep_common(CLI::App* sub, SweepArgs& a) {
    sub->add_option("--b", a.b, "Target mixing weight b in (0, 1/2)")->capture_default_str();
    sub->add_option("--n", a.n, "Ambient dimension")->capture_default_str();
    sub->add_option("--iters", a.iters, "Iterations M per run")->capture_default_str();
    sub->add_option("--threads", a.threads, "Worker threads (0 = all cores)")->capture_default_str();
    sub->add_option("--out-csv", a.out_csv, "CSV output path")->required();
    sub->add_option("--out-svg", a.out_svg, "SVG output path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Relaxed greedy approximation: runs, sweeps and stagnation bounds", "prga"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand("run", "Run PRGA on a coherent pair and emit the per-iteration trace");
    run_cmd->add_option("--alpha", run_args.alpha, "Step-size exponent alpha > 0")->required();
    run_cmd->add_option("--mu", run_args.mu, "Coherence mu in [0, 1)")->required();
    run_cmd->add_option("--b", run_args.b, "Target mixing weight b in (0, 1/2)")->capture_default_str();
    run_cmd->add_option("--n", run_args.n, "Ambient dimension")->capture_default_str();
    run_cmd->add_option("--iters", run_args.iters, "Iterations M")->capture_default_str();
    run_cmd->add_option("--out", run_args.out, "Trace CSV path (default: stdout)");
    run_cmd->add_option("--rotate-seed", run_args.rotate_seed,
                        "Embed the pair in a random orthonormal frame drawn from this seed");

    SweepArgs mu_args;
    mu_args.alphas = "1.1,1.5";
    mu_args.mus = "0:0.95:0.05";
    auto* mu_cmd = app.add_subcommand("sweep-mu", "Minimum residual as a function of coherence");
    mu_cmd->add_option("--alphas", mu_args.alphas, "Alpha values (list or start:stop:step)")->capture_default_str();
    mu_cmd->add_option("--mu-grid", mu_args.mus, "Coherence grid")->capture_default_str();
    add_sweep_common(mu_cmd, mu_args);

    SweepArgs alpha_args;
    alpha_args.alphas = "1.1:2.0:0.1";
    alpha_args.mus = "0.2";
    auto* alpha_cmd = app.add_subcommand("sweep-alpha", "Final residual as a function of alpha");
    alpha_cmd->add_option("--mu", alpha_args.mus, "Coherence values (list or start:stop:step)")
        ->capture_default_str();
    alpha_cmd->add_option("--alpha-grid", alpha_args.alphas, "Alpha grid")->capture_default_str();
    add_sweep_common(alpha_cmd, alpha_args);

    BoundArgs bound_args;
    auto* bound_cmd = app.add_subcommand("bound", "Print P_alpha and the residual floors");
    bound_cmd->add_option("--alpha", bound_args.alpha, "Step-size exponent alpha > 1")->required();
    bound_cmd->add_option("--mu", bound_args.mu, "Coherence mu in [0, 1)")->required();
    bound_cmd->add_option("--b", bound_args.b, "Target mixing weight b in (0, 1/2)")->required();
    bound_cmd->add_option("--tol", bound_args.tol, "Certified tolerance on log P_alpha")->capture_default_str();

    SparseArgs sparse_args;
    auto* sparse_cmd = app.add_subcommand("sparse-floor", "Residual floor for an s-sparse realizable target");
    sparse_cmd->add_option("--s", sparse_args.s, "Support size s >= 1")->required();
    sparse_cmd->add_option("--mu-s", sparse_args.mu_s, "Pairwise coherence of the support")->required();
    sparse_cmd->add_option("--y-atomic", sparse_args.y_atomic, "Atomic norm of the target")->required();
    sparse_cmd->add_option("--f-atomic", sparse_args.f_atomic, "Atomic norm of the iterate")->required();

    if (args.empty()) {
        err << app.help();
        return kDomain;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kDomain;
    }

    try {
        if (*run_cmd) return do_run(run_args, out);
        if (*mu_cmd) return do_sweep(default_mu_sweep(), mu_args, out);
        if (*alpha_cmd) return do_sweep(default_alpha_sweep(), alpha_args, out);
        if (*bound_cmd) return do_bound(bound_args, out);
        if (*sparse_cmd) return do_sparse(sparse_args, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
    return kDomain;
}

}  // namespace prga::cli
