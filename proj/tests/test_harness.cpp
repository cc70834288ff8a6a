#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "prga/bounds.hpp"
#include "prga/errors.hpp"
#include "prga/greedy.hpp"
#include "prga/harness.hpp"

using namespace prga;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SweepConfig small_mu_sweep() {
    auto c = default_mu_sweep();
    c.mu_grid = {0.0, 0.3, 0.6};
    c.M = 200;
    return c;
}

}  // namespace

TEST_CASE("grids") {
    const auto mu = make_grid(0.0, 0.95, 0.05);
    REQUIRE(mu.size() == 20);
    CHECK(mu.front() == 0.0);
    CHECK(mu[3] == 0.15);
    CHECK(mu.back() == 0.95);

    const auto alpha = make_grid(1.1, 2.0, 0.1);
    REQUIRE(alpha.size() == 10);
    CHECK(alpha[0] == 1.1);
    CHECK(alpha[4] == 1.5);
    CHECK(alpha.back() == 2.0);

    // endpoint within half a step is kept, beyond it is not
    CHECK(make_grid(0.0, 1.04, 0.1).size() == 11);
    CHECK(make_grid(0.0, 1.06, 0.1).size() == 12);
    CHECK(make_grid(0.5, 0.5, 0.1) == std::vector<double>{0.5});

    CHECK(parse_grid("0:0.95:0.05") == mu);
    CHECK(parse_grid("1.1,1.5") == std::vector<double>{1.1, 1.5});
    CHECK(parse_grid("0.2") == std::vector<double>{0.2});
    CHECK_THROWS_AS(parse_grid("0:1"), DomainError);
    CHECK_THROWS_AS(parse_grid("1,x"), DomainError);
    CHECK_THROWS_AS(parse_grid("1,"), DomainError);
    CHECK_THROWS_AS(parse_grid("1:0:0.1"), DomainError);
    CHECK_THROWS_AS(parse_grid("0:1:0"), DomainError);
}

TEST_CASE("defaults reproduce the published setup") {
    const auto m = default_mu_sweep();
    CHECK(m.b == 0.25);
    CHECK(m.n == 200);
    CHECK(m.M == 800);
    CHECK(m.alpha_grid == std::vector<double>{1.1, 1.5});
    CHECK(m.mu_grid.size() == 20);
    const auto a = default_alpha_sweep();
    CHECK(a.mu_grid == std::vector<double>{0.2});
    CHECK(a.alpha_grid.size() == 10);
}

TEST_CASE("sweep cells are ordered and carry the config") {
    auto c = small_mu_sweep();
    c.alpha_grid = {1.5, 1.1};
    c.mu_grid = {0.6, 0.0, 0.3};
    const auto cells = sweep_mu(c);
    REQUIRE(cells.size() == 6);
    CHECK(cells[0].alpha == 1.1);
    CHECK(cells[0].mu == 0.0);
    CHECK(cells[2].mu == 0.6);
    CHECK(cells[3].alpha == 1.5);
    for (const auto& cell : cells) {
        CHECK(cell.mode == SweepMode::MuSweep);
        CHECK(cell.b == 0.25);
        CHECK(cell.n == 200);
        CHECK(cell.M == 200);
        REQUIRE(cell.lower_bound);
        CHECK(cell.min_residual >= *cell.lower_bound - 1e-10);
        CHECK(cell.bound_ratio().value() >= 1.0 - 1e-9);
    }
}

TEST_CASE("single-cell sweep equals a standalone run") {
    auto c = default_mu_sweep();
    c.alpha_grid = {1.5};
    c.mu_grid = {0.2};
    const auto cells = sweep_mu(c);
    REQUIRE(cells.size() == 1);
    CoherentPairSpec spec;
    spec.mu = 0.2;
    const auto trace = run_prga(spec, PowerSchedule(1.5), 800);
    CHECK(cells[0].min_residual == trace.min_residual());
    CHECK(cells[0].final_residual == trace.final_residual());
}

TEST_CASE("lower bound monotonicity and closed-form cells") {
    auto c = default_mu_sweep();
    c.alpha_grid = {1.5};
    c.mu_grid = {0.0, 0.9};
    const auto mu_cells = sweep_mu(c);
    CHECK(*mu_cells[1].lower_bound < *mu_cells[0].lower_bound);

    auto a = default_alpha_sweep();
    a.alpha_grid = {1.1, 2.0};
    const auto alpha_cells = sweep_alpha(a);
    CHECK(*alpha_cells[1].lower_bound == doctest::Approx(0.25 * 0.8 * std::sqrt(0.6) * 0.5).epsilon(1e-10));
    CHECK(*alpha_cells[1].lower_bound == doctest::Approx(0.0774596669).epsilon(1e-9));
    CHECK(*alpha_cells[0].lower_bound == coherence_factor(0.2, 0.25) * p_alpha(1.1, 1e-12).value);
}

TEST_CASE("alpha <= 1 cells have no lower bound") {
    auto a = default_alpha_sweep();
    a.alpha_grid = {0.8, 1.0, 1.2};
    a.M = 100;
    const auto cells = sweep_alpha(a);
    CHECK_FALSE(cells[0].lower_bound);
    CHECK_FALSE(cells[1].lower_bound);
    CHECK(cells[2].lower_bound);
    const std::string csv = format_csv(cells);
    CHECK(count(csv, ",\n") == 2);
}

TEST_CASE("sweep validation") {
    auto c = small_mu_sweep();
    CHECK_THROWS_AS(sweep_alpha(c), DomainError);
    c.mu_grid = {};
    CHECK_THROWS_AS(sweep_mu(c), DomainError);
    c = small_mu_sweep();
    c.mu_grid = {1.0};
    CHECK_THROWS_AS(sweep_mu(c), DomainError);
    c = small_mu_sweep();
    c.alpha_grid = {0.0};
    CHECK_THROWS_AS(sweep_mu(c), DomainError);
    c = small_mu_sweep();
    c.b = 0.6;
    CHECK_THROWS_AS(sweep_mu(c), DomainError);
    c = small_mu_sweep();
    c.M = 0;
    CHECK_THROWS_AS(sweep_mu(c), DomainError);
}

TEST_CASE("csv format") {
    auto c = small_mu_sweep();
    c.alpha_grid = {1.5};
    c.mu_grid = {0.0, 0.5};
    const auto cells = sweep_mu(c);
    const std::string csv = format_csv(cells);
    CHECK(count(csv, "\n") == 3);
    CHECK(csv.rfind("mode,alpha,mu,b,n,M,min_residual,final_residual,lower_bound\n", 0) == 0);
    CHECK(csv.back() == '\n');
    CHECK(csv.find("\nmu-sweep,1.5,0,0.25,200,200,") != std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(format_csv(cells) == csv);
    CHECK(format_real(0.1) == "0.10000000000000001");
    CHECK_THROWS_AS(format_csv({}), DomainError);
}

TEST_CASE("sweeps are independent of thread count") {
    auto c = small_mu_sweep();
    c.threads = 1;
    const std::string serial = format_csv(sweep_mu(c));
    c.threads = 4;
    CHECK(format_csv(sweep_mu(c)) == serial);
    c.threads = 0;
    CHECK(format_csv(sweep_mu(c)) == serial);
}

TEST_CASE("files are written byte-identically and failures name the path") {
    const auto dir = std::filesystem::temp_directory_path() / "prga_harness_test";
    std::filesystem::create_directories(dir);
    const auto cells = sweep_mu(small_mu_sweep());
    write_csv(cells, (dir / "a.csv").string());
    write_csv(cells, (dir / "b.csv").string());
    CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
    render_svg(cells, (dir / "a.svg").string());
    render_svg(cells, (dir / "b.svg").string());
    CHECK(slurp(dir / "a.svg") == slurp(dir / "b.svg"));

    const std::string bad = (dir / "missing" / "x.csv").string();
    try {
        write_csv(cells, bad);
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(e.path() == bad);
        CHECK(std::string(e.what()).find(bad) != std::string::npos);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("svg chart structure") {
    const auto cells = sweep_mu(default_mu_sweep());
    const std::string svg = render_svg(cells);
    CHECK(count(svg, "<polyline") == 4);
    CHECK(count(svg, "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" stroke-dasharray") == 1);
    CHECK(count(svg, "stroke-dasharray") == 4);  // two bound polylines plus two legend swatches
    CHECK(svg.find("width=\"800\" height=\"600\"") != std::string::npos);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("residual norm") != std::string::npos);
    CHECK(svg.find(">\xce\xbc</text>") != std::string::npos);
    CHECK(svg.find("href") == std::string::npos);
    CHECK(svg == render_svg(cells));

    auto a = default_alpha_sweep();
    a.M = 100;
    const std::string alpha_svg = render_svg(sweep_alpha(a));
    CHECK(count(alpha_svg, "<polyline") == 2);
    CHECK(alpha_svg.find(">\xce\xb1</text>") != std::string::npos);
}

TEST_CASE("trace csv") {
    CoherentPairSpec spec;
    spec.mu = 0.2;
    const auto t = run_prga(spec, PowerSchedule(1.5), 3);
    const std::string csv = format_trace_csv(t);
    CHECK(csv.rfind("m,lambda,atom,sign,residual_l2,f_atomic,deficit_floor\n", 0) == 0);
    CHECK(count(csv, "\n") == 4);
    CHECK(csv.find("\n1,0.80000000000000004,0,1,") != std::string::npos);
}

TEST_CASE("lower bound is strictly monotone across the default grids") {
    auto m = default_mu_sweep();
    m.M = 50;
    const auto mu_cells = sweep_mu(m);
    for (std::size_t i = 1; i < mu_cells.size(); ++i) {
        if (mu_cells[i].alpha != mu_cells[i - 1].alpha) continue;
        CHECK(*mu_cells[i].lower_bound < *mu_cells[i - 1].lower_bound);
    }
    auto a = default_alpha_sweep();
    a.M = 50;
    const auto alpha_cells = sweep_alpha(a);
    for (std::size_t i = 1; i < alpha_cells.size(); ++i) {
        CHECK(*alpha_cells[i].lower_bound > *alpha_cells[i - 1].lower_bound);
    }
}
