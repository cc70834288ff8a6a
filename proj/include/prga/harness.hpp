#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace prga {

struct RunTrace;

enum class SweepMode { MuSweep, AlphaSweep };

std::string to_string(SweepMode mode);

struct SweepConfig {
    SweepMode mode = SweepMode::MuSweep;
    std::vector<double> mu_grid;
    std::vector<double> alpha_grid;
    double b = 0.25;
    std::size_t n = 200;
    std::size_t M = 800;
    // 0 selects std::thread::hardware_concurrency().
    std::size_t threads = 0;
    std::optional<std::string> csv_path;
    std::optional<std::string> svg_path;
};

// Defaults: alpha in {1.1, 1.5}, mu on 0:0.95:0.05.
SweepConfig default_mu_sweep();
// Defaults: mu = 0.2, alpha on 1.1:2.0:0.1.
SweepConfig default_alpha_sweep();

struct SweepCell {
    SweepMode mode = SweepMode::MuSweep;
    double alpha = 0.0;
    double mu = 0.0;
    double b = 0.0;
    std::size_t n = 0;
    std::size_t M = 0;
    double min_residual = 0.0;
    double final_residual = 0.0;
    // Theorem floor, alpha > 1 only.
    std::optional<double> lower_bound;

    // min_residual / lower_bound
    std::optional<double> bound_ratio() const;
};

// Cells ordered by alpha, then mu. Throws std::logic_error if any alpha > 1
// cell dips below its floor by more than 1e-10.
std::vector<SweepCell> sweep_mu(const SweepConfig& config);
std::vector<SweepCell> sweep_alpha(const SweepConfig& config);

// Dispatches on config.mode.
std::vector<SweepCell> run_sweep(const SweepConfig& config);

// Inclusive grid start:stop:step; the endpoint is kept when it lies within
// half a step of the last point. Values are rounded to 12 decimals.
std::vector<double> make_grid(double start, double stop, double step);

// "start:stop:step" or a comma-separated list.
std::vector<double> parse_grid(const std::string& text);

std::string format_real(double value);

std::string format_csv(const std::vector<SweepCell>& cells);
void write_csv(const std::vector<SweepCell>& cells, const std::string& path);

std::string render_svg(const std::vector<SweepCell>& cells);
void render_svg(const std::vector<SweepCell>& cells, const std::string& path);

// Per-iteration trace, header m,lambda,atom,sign,residual_l2,f_atomic,deficit_floor.
// Absent optional columns are left empty.
std::string format_trace_csv(const RunTrace& trace);

// Writes text to path, surfacing failures as IoError.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace prga
