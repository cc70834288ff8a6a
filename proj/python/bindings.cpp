#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <vector>

#include "prga/atomic.hpp"
#include "prga/bounds.hpp"
#include "prga/dictionary.hpp"
#include "prga/errors.hpp"
#include "prga/greedy.hpp"
#include "prga/harness.hpp"

namespace py = pybind11;
using namespace prga;

namespace {

std::vector<DenseVector> to_atoms(const std::vector<std::vector<double>>& rows) {
    std::vector<DenseVector> atoms;
    atoms.reserve(rows.size());
    for (const auto& r : rows) atoms.emplace_back(r);
    return atoms;
}

std::vector<double> to_list(const DenseVector& v) { return {v.coords().begin(), v.coords().end()}; }

CoherentPairSpec pair_spec(double mu, double b, std::size_t n, std::optional<std::uint64_t> seed) {
    CoherentPairSpec spec;
    spec.mu = mu;
    spec.b = b;
    spec.ambient_dim = n;
    spec.rotation_seed = seed;
    return spec;
}

SweepConfig sweep_config(SweepConfig base, std::optional<std::vector<double>> alphas,
                         std::optional<std::vector<double>> mus, double b, std::size_t n, std::size_t iters,
                         std::size_t threads) {
    if (alphas) base.alpha_grid = *alphas;
    if (mus) base.mu_grid = *mus;
    base.b = b;
    base.n = n;
    base.M = iters;
    base.threads = threads;
    return base;
}

}  // namespace

PYBIND11_MODULE(_prga, m) {
    m.doc() = "Relaxed greedy approximation (RGA/PRGA) with certified stagnation bounds";

    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<DivergedProductError>(m, "DivergedProductError", domain.ptr());
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    m.def(
        "make_coherent_pair",
        [](double mu, double b, std::size_t n, std::optional<std::uint64_t> seed) {
            const CoherentPair pair = make_coherent_pair(pair_spec(mu, b, n, seed));
            std::vector<std::vector<double>> atoms;
            for (const auto& a : pair.dictionary.atoms()) atoms.push_back(to_list(a));
            return py::make_tuple(atoms, to_list(pair.target));
        },
        py::arg("mu"), py::arg("b") = 0.25, py::arg("n") = 200, py::arg("rotation_seed") = py::none(),
        "Two unit atoms with <x_1, x_2> = mu and target y = (1-b) x_1 + b x_2.");

    m.def("gram_matrix", [](const std::vector<std::vector<double>>& atoms) { return gram_matrix(to_atoms(atoms)); });
    m.def("mutual_coherence",
          [](const std::vector<std::vector<double>>& atoms) { return mutual_coherence(to_atoms(atoms)); });
    m.def("atomic_norm", [](const std::vector<double>& u, const std::vector<std::vector<double>>& atoms) {
        return atomic_norm(DenseVector(u), SpanBasis(to_atoms(atoms)));
    });
    m.def("dual_atomic_norm", [](const std::vector<double>& v, const std::vector<std::vector<double>>& atoms) {
        return dual_atomic_norm(DenseVector(v), Dictionary(to_atoms(atoms)));
    });
    m.def("witness_vector", [](const std::vector<std::vector<double>>& atoms) {
        return to_list(witness_vector(Dictionary(to_atoms(atoms))));
    });
    m.def(
        "gershgorin_floor",
        [](const std::vector<std::vector<double>>& atoms, bool verify) {
            return gershgorin_floor(SpanBasis(to_atoms(atoms)), verify);
        },
        py::arg("atoms"), py::arg("verify") = false);

    m.def("greedy_select", [](const std::vector<double>& residual, const std::vector<std::vector<double>>& atoms) {
        const Selection s = greedy_select(DenseVector(residual), Dictionary(to_atoms(atoms)));
        return py::make_tuple(s.ref.index, s.ref.sign, s.correlation);
    });

    py::class_<TraceRow>(m, "TraceRow")
        .def_readonly("m", &TraceRow::m)
        .def_readonly("lambda_", &TraceRow::lambda)
        .def_property_readonly("atom", [](const TraceRow& r) { return r.selected.index; })
        .def_property_readonly("sign", [](const TraceRow& r) { return r.selected.sign; })
        .def_readonly("residual_l2", &TraceRow::residual_l2)
        .def_readonly("f_atomic", &TraceRow::f_atomic)
        .def_readonly("deficit_floor", &TraceRow::deficit_floor)
        .def_readonly("coefficients", &TraceRow::coefficients);

    py::class_<RunTrace>(m, "RunTrace")
        .def_readonly("rows", &RunTrace::rows)
        .def_property_readonly("alpha", [](const RunTrace& t) { return t.config.alpha; })
        .def_property_readonly("mu", [](const RunTrace& t) { return t.config.mu; })
        .def_property_readonly("b", [](const RunTrace& t) { return t.config.b; })
        .def_property_readonly("n", [](const RunTrace& t) { return t.config.n; })
        .def_property_readonly("M", [](const RunTrace& t) { return t.config.M; })
        .def("min_residual", &RunTrace::min_residual)
        .def("final_residual", &RunTrace::final_residual)
        .def("to_csv", [](const RunTrace& t) { return format_trace_csv(t); })
        .def("__len__", [](const RunTrace& t) { return t.rows.size(); });

    m.def(
        "run_prga",
        [](double alpha, double mu, double b, std::size_t n, std::size_t iters,
           std::optional<std::uint64_t> seed) {
            py::gil_scoped_release release;
            return run_prga(pair_spec(mu, b, n, seed), PowerSchedule(alpha), iters);
        },
        py::arg("alpha"), py::arg("mu"), py::arg("b") = 0.25, py::arg("n") = 200, py::arg("iters") = 800,
        py::arg("rotation_seed") = py::none());
    m.def(
        "run_rga",
        [](double mu, double b, std::size_t n, std::size_t iters) {
            py::gil_scoped_release release;
            return run_prga(pair_spec(mu, b, n, std::nullopt), PowerSchedule(1.0), iters);
        },
        py::arg("mu"), py::arg("b") = 0.25, py::arg("n") = 200, py::arg("iters") = 800);

    py::class_<ProductResult>(m, "ProductResult")
        .def_readonly("alpha", &ProductResult::alpha)
        .def_readonly("K", &ProductResult::K)
        .def_readonly("log_partial", &ProductResult::log_partial)
        .def_readonly("tail_correction", &ProductResult::tail_correction)
        .def_readonly("log_value", &ProductResult::log_value)
        .def_readonly("value", &ProductResult::value)
        .def_readonly("tail_bound", &ProductResult::tail_bound)
        .def_readonly("error_bound", &ProductResult::error_bound);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("mu", &BoundReport::mu)
        .def_readonly("b", &BoundReport::b)
        .def_readonly("alpha", &BoundReport::alpha)
        .def_readonly("p_alpha", &BoundReport::p_alpha)
        .def_readonly("theorem_floor", &BoundReport::theorem_floor)
        .def_readonly("linear_floor", &BoundReport::linear_floor);

    m.def("p_alpha", &p_alpha, py::arg("alpha"), py::arg("tol") = kDefaultProductTolerance);
    m.def("partial_product", &partial_product, py::arg("alpha"), py::arg("m"));
    m.def("theorem_floor", &theorem_floor, py::arg("mu"), py::arg("b"), py::arg("alpha"),
          py::arg("tol") = kDefaultProductTolerance);
    m.def("sparse_floor", &sparse_floor, py::arg("s"), py::arg("mu_s"), py::arg("y_atomic"), py::arg("f_atomic"));

    py::class_<SweepCell>(m, "SweepCell")
        .def_property_readonly("mode", [](const SweepCell& c) { return to_string(c.mode); })
        .def_readonly("alpha", &SweepCell::alpha)
        .def_readonly("mu", &SweepCell::mu)
        .def_readonly("b", &SweepCell::b)
        .def_readonly("n", &SweepCell::n)
        .def_readonly("M", &SweepCell::M)
        .def_readonly("min_residual", &SweepCell::min_residual)
        .def_readonly("final_residual", &SweepCell::final_residual)
        .def_readonly("lower_bound", &SweepCell::lower_bound);

    m.def(
        "sweep_mu",
        [](std::optional<std::vector<double>> alphas, std::optional<std::vector<double>> mus, double b,
           std::size_t n, std::size_t iters, std::size_t threads) {
            const SweepConfig c = sweep_config(default_mu_sweep(), alphas, mus, b, n, iters, threads);
            py::gil_scoped_release release;
            return sweep_mu(c);
        },
        py::arg("alphas") = py::none(), py::arg("mus") = py::none(), py::arg("b") = 0.25, py::arg("n") = 200,
        py::arg("iters") = 800, py::arg("threads") = 0);
    m.def(
        "sweep_alpha",
        [](std::optional<std::vector<double>> alphas, std::optional<std::vector<double>> mus, double b,
           std::size_t n, std::size_t iters, std::size_t threads) {
            const SweepConfig c = sweep_config(default_alpha_sweep(), alphas, mus, b, n, iters, threads);
            py::gil_scoped_release release;
            return sweep_alpha(c);
        },
        py::arg("alphas") = py::none(), py::arg("mus") = py::none(), py::arg("b") = 0.25, py::arg("n") = 200,
        py::arg("iters") = 800, py::arg("threads") = 0);
    m.def("format_csv", &format_csv);
    m.def("render_svg", [](const std::vector<SweepCell>& cells) { return render_svg(cells); });
    m.def("parse_grid", &parse_grid);
}
