#include "prga/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "prga/bounds.hpp"
#include "prga/dictionary.hpp"
#include "prga/errors.hpp"
#include "prga/greedy.hpp"

namespace prga {

std::string to_string(SweepMode mode) {
    return mode == SweepMode::MuSweep ? "mu-sweep" : "alpha-sweep";
}

SweepConfig default_mu_sweep() {
    SweepConfig c;
    c.mode = SweepMode::MuSweep;
    c.alpha_grid = {1.1, 1.5};
    c.mu_grid = make_grid(0.0, 0.95, 0.05);
    return c;
}

SweepConfig default_alpha_sweep() {
    SweepConfig c;
    c.mode = SweepMode::AlphaSweep;
    c.mu_grid = {0.2};
    c.alpha_grid = make_grid(1.1, 2.0, 0.1);
    return c;
}

std::optional<double> SweepCell::bound_ratio() const {
    if (!lower_bound || *lower_bound <= 0.0) return std::nullopt;
    return min_residual / *lower_bound;
}

std::vector<double> make_grid(double start, double stop, double step) {
    if (!(std::isfinite(start) && std::isfinite(stop) && std::isfinite(step))) {
        throw DomainError("grid bounds must be finite");
    }
    if (!(step > 0.0)) throw DomainError("grid step must be positive");
    if (stop < start) throw DomainError("grid stop must not precede start");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5));
    std::vector<double> grid;
    grid.reserve(count + 1);
    for (std::size_t i = 0; i <= count; ++i) {
        const double v = start + static_cast<double>(i) * step;
        grid.push_back(std::round(v * 1e12) / 1e12);
    }
    return grid;
}

std::vector<double> parse_grid(const std::string& text) {
    auto parse_number = [&](const std::string& token) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            throw DomainError("invalid number '" + token + "' in grid '" + text + "'");
        }
        if (used != token.size()) throw DomainError("invalid number '" + token + "' in grid '" + text + "'");
        return v;
    };
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, sep)) parts.push_back(item);
        if (!s.empty() && s.back() == sep) parts.emplace_back();
        return parts;
    };

    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw DomainError("grid range must be start:stop:step, got '" + text + "'");
        return make_grid(parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2]));
    }
    std::vector<double> out;
    for (const auto& p : split(text, ',')) out.push_back(parse_number(p));
    if (out.empty()) throw DomainError("grid must not be empty");
    return out;
}

namespace {

struct CellSpec {
    double alpha;
    double mu;
};

void validate_config(const SweepConfig& config) {
    if (config.mu_grid.empty()) throw DomainError("mu grid must not be empty");
    if (config.alpha_grid.empty()) throw DomainError("alpha grid must not be empty");
    for (double mu : config.mu_grid) {
        if (!(mu >= 0.0 && mu < 1.0)) throw DomainError("mu grid values must lie in [0, 1)");
    }
    for (double a : config.alpha_grid) {
        if (!(std::isfinite(a) && a > 0.0)) throw DomainError("alpha grid values must be positive");
    }
    if (!(config.b > 0.0 && config.b < 0.5)) throw DomainError("b must lie in (0, 1/2)");
    if (config.n < 2) throw DomainError("ambient dimension n must be at least 2");
    if (config.M < 1) throw DomainError("iteration count M must be at least 1");
}

SweepCell evaluate(const SweepConfig& config, const CellSpec& spec) {
    CoherentPairSpec pair;
    pair.mu = spec.mu;
    pair.b = config.b;
    pair.ambient_dim = config.n;
    const RunTrace trace = run_prga(pair, PowerSchedule(spec.alpha), config.M);

    SweepCell cell;
    cell.mode = config.mode;
    cell.alpha = spec.alpha;
    cell.mu = spec.mu;
    cell.b = config.b;
    cell.n = config.n;
    cell.M = config.M;
    cell.min_residual = trace.min_residual();
    cell.final_residual = trace.final_residual();
    if (spec.alpha > 1.0) {
        cell.lower_bound = theorem_floor(spec.mu, config.b, spec.alpha).theorem_floor;
        if (cell.min_residual < *cell.lower_bound - 1e-10) {
            throw std::logic_error("residual floor violated at alpha=" + format_real(spec.alpha) +
                                   ", mu=" + format_real(spec.mu));
        }
    }
    return cell;
}

std::vector<SweepCell> run_cells(const SweepConfig& config) {
    validate_config(config);
    std::vector<double> alphas = config.alpha_grid;
    std::vector<double> mus = config.mu_grid;
    std::sort(alphas.begin(), alphas.end());
    std::sort(mus.begin(), mus.end());

    std::vector<CellSpec> specs;
    for (double a : alphas)
        for (double mu : mus) specs.push_back({a, mu});

    std::vector<SweepCell> cells(specs.size());
    std::size_t workers = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, specs.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::size_t failed_at = specs.size();
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            try {
                cells[i] = evaluate(config, specs[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (i < failed_at) {
                    failed_at = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return cells;
}

}  // namespace

std::vector<SweepCell> sweep_mu(const SweepConfig& config) {
    if (config.mode != SweepMode::MuSweep) throw DomainError("sweep_mu needs mode mu-sweep");
    return run_cells(config);
}

std::vector<SweepCell> sweep_alpha(const SweepConfig& config) {
    if (config.mode != SweepMode::AlphaSweep) throw DomainError("sweep_alpha needs mode alpha-sweep");
    return run_cells(config);
}

std::vector<SweepCell> run_sweep(const SweepConfig& config) {
    return config.mode == SweepMode::MuSweep ? sweep_mu(config) : sweep_alpha(config);
}

std::string format_real(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string format_csv(const std::vector<SweepCell>& cells) {
    if (cells.empty()) throw DomainError("no cells to write");
    std::string out = "mode,alpha,mu,b,n,M,min_residual,final_residual,lower_bound\n";
    for (const auto& c : cells) {
        out += to_string(c.mode);
        out += ',' + format_real(c.alpha);
        out += ',' + format_real(c.mu);
        out += ',' + format_real(c.b);
        out += ',' + std::to_string(c.n);
        out += ',' + std::to_string(c.M);
        out += ',' + format_real(c.min_residual);
        out += ',' + format_real(c.final_residual);
        out += ',';
        if (c.lower_bound) out += format_real(*c.lower_bound);
        out += '\n';
    }
    return out;
}

std::string format_trace_csv(const RunTrace& trace) {
    std::string out = "m,lambda,atom,sign,residual_l2,f_atomic,deficit_floor\n";
    for (const auto& r : trace.rows) {
        out += std::to_string(r.m);
        out += ',' + format_real(r.lambda);
        out += ',' + std::to_string(r.selected.index);
        out += ',' + std::to_string(r.selected.sign);
        out += ',' + format_real(r.residual_l2);
        out += ',';
        if (r.f_atomic) out += format_real(*r.f_atomic);
        out += ',';
        if (r.deficit_floor) out += format_real(*r.deficit_floor);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path, "cannot open for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out) throw IoError(path, "write failed");
}

void write_csv(const std::vector<SweepCell>& cells, const std::string& path) {
    write_text_file(path, format_csv(cells));
}

}  // namespace prga
