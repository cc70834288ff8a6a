#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = prga::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("no arguments prints usage and exits 1") {
    const auto r = invoke({});
    CHECK(r.code == 1);
    CHECK(r.err.find("run") != std::string::npos);
    CHECK(r.err.find("sparse-floor") != std::string::npos);
}

TEST_CASE("help exists for every subcommand") {
    for (const char* sub : {"run", "sweep-mu", "sweep-alpha", "bound", "sparse-floor"}) {
        const auto r = invoke({sub, "--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("--") != std::string::npos);
    }
    const auto mu = invoke({"sweep-mu", "--help"});
    CHECK(mu.out.find("0.25") != std::string::npos);
    CHECK(mu.out.find("200") != std::string::npos);
    CHECK(mu.out.find("800") != std::string::npos);
}

TEST_CASE("bound subcommand") {
    const auto r = invoke({"bound", "--alpha", "2", "--mu", "0", "--b", "0.25"});
    CHECK(r.code == 0);
    CHECK(r.out.find("p_alpha=0.5") != std::string::npos);
    CHECK(r.out.find("theorem_floor=0.08838834764") != std::string::npos);
    CHECK(r.out.find("linear_floor=") != std::string::npos);
    CHECK(r.out.find("K=") != std::string::npos);
    CHECK(r.out.find("tail_bound=") != std::string::npos);

    const auto high = invoke({"bound", "--alpha", "1.5", "--mu", "0.7", "--b", "0.25"});
    CHECK(high.code == 0);
    CHECK(high.out.find("linear_floor") == std::string::npos);

    const auto bad = invoke({"bound", "--alpha", "1", "--mu", "0", "--b", "0.25"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("alpha must exceed 1 for bound computation") != std::string::npos);
    CHECK(invoke({"bound", "--alpha", "2", "--mu", "1.2", "--b", "0.25"}).code == 1);
}

TEST_CASE("run subcommand") {
    const auto r = invoke({"run", "--alpha", "1.5", "--mu", "0.2", "--b", "0.25", "--n", "200", "--iters", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("m,lambda,atom,sign,residual_l2,f_atomic,deficit_floor\n", 0) == 0);
    CHECK(r.out.find("\n1,0.80000000000000004,0,1,0.2449489742783") != std::string::npos);

    CHECK(invoke({"run", "--alpha", "0", "--mu", "0.2"}).code == 1);
    CHECK(invoke({"run", "--alpha", "1.5", "--mu", "0.2", "--iters", "0"}).code == 1);
    CHECK(invoke({"run", "--alpha", "1.5", "--mu", "0.2", "--n", "1"}).code == 1);
    CHECK(invoke({"run", "--alpha", "1.5", "--mu", "0.2", "--bogus", "1"}).code == 1);
    CHECK(invoke({"run", "--alpha", "abc", "--mu", "0.2"}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
}

TEST_CASE("sparse-floor subcommand") {
    const auto r = invoke({"sparse-floor", "--s", "4", "--mu-s", "0", "--y-atomic", "1", "--f-atomic", "0.6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sparse_floor=0.2") != std::string::npos);
    CHECK(invoke({"sparse-floor", "--s", "3", "--mu-s", "0.5", "--y-atomic", "1", "--f-atomic", "0"}).code == 1);
}

TEST_CASE("sweep subcommands write files and report I/O errors") {
    const auto dir = std::filesystem::temp_directory_path() / "prga_cli_test";
    std::filesystem::create_directories(dir);
    const std::string csv = (dir / "mu.csv").string();
    const std::string svg = (dir / "mu.svg").string();
    auto r = invoke({"sweep-mu", "--mu-grid", "0:0.2:0.1", "--iters", "100", "--out-csv", csv, "--out-svg", svg});
    CHECK(r.code == 0);
    CHECK(std::filesystem::exists(csv));
    CHECK(std::filesystem::exists(svg));
    CHECK(r.out.find("cells=6") != std::string::npos);

    r = invoke({"sweep-alpha", "--alpha-grid", "1.1:1.3:0.1", "--iters", "100", "--out-csv", csv});
    CHECK(r.code == 0);
    CHECK(r.out.find("cells=3") != std::string::npos);

    r = invoke({"sweep-mu", "--iters", "10", "--out-csv", (dir / "nope" / "x.csv").string()});
    CHECK(r.code == 2);
    CHECK(invoke({"sweep-mu", "--mu-grid", "0:1.5:0.5", "--out-csv", csv}).code == 1);
    CHECK(invoke({"sweep-mu", "--iters", "10"}).code == 1);
    CHECK(invoke({"run", "--alpha", "1.5", "--mu", "0.2", "--out", (dir / "nope" / "t.csv").string()}).code == 2);
    std::filesystem::remove_all(dir);
}
