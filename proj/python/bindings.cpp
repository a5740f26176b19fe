#include "npcpt/crops.hpp"
#include "npcpt/error.hpp"
#include "npcpt/screening.hpp"
#include "npcpt/search.hpp"
#include "npcpt/simbench.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace npcpt;

namespace {

TimeSeries to_series(const std::vector<double>& x) { return TimeSeries(x); }

CostModel make_cost(const std::vector<double>& x, const std::string& kind, std::optional<std::size_t> k) {
    const TimeSeries s = to_series(x);
    if (kind == "np") {
        return CostModel::nonparametric_quantile(s, k.value_or(default_quantile_count(s.size())));
    }
    if (k) {
        throw ConfigError("K applies only to the 'np' cost");
    }
    if (kind == "np-full") {
        return CostModel::nonparametric_full(s);
    }
    if (kind == "linear") {
        return CostModel::piecewise_linear(s);
    }
    throw ConfigError("unknown cost '" + kind + "'; valid: np, np-full, linear");
}

}  // namespace

PYBIND11_MODULE(_npcpt, m) {
    m.doc() = "Nonparametric changepoint detection";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

    py::class_<Segmentation>(m, "Segmentation")
        .def_readonly("changepoints", &Segmentation::changepoints)
        .def_readonly("total_cost", &Segmentation::total_cost)
        .def_readonly("warning", &Segmentation::warning)
        .def("penalized_cost", &Segmentation::penalized_cost)
        .def("__len__", &Segmentation::count)
        .def("__repr__", [](const Segmentation& s) {
            return "<Segmentation m=" + std::to_string(s.count()) +
                   " cost=" + std::to_string(s.total_cost) + ">";
        });

    py::class_<CostModel>(m, "CostModel")
        .def(py::init(&make_cost), py::arg("x"), py::arg("cost") = "np", py::arg("K") = py::none())
        .def_property_readonly("kind", [](const CostModel& c) { return std::string(to_string(c.kind())); })
        .def_property_readonly("n", &CostModel::size)
        .def_property_readonly("K", [](const CostModel& c) -> std::optional<std::size_t> {
            return c.grid() ? std::optional<std::size_t>(c.grid()->k) : std::nullopt;
        })
        .def_property_readonly("thresholds", [](const CostModel& c) -> std::optional<std::vector<double>> {
            return c.grid() ? std::optional(c.grid()->thresholds) : std::nullopt;
        })
        .def("cost", &CostModel::cost, py::arg("u"), py::arg("v"),
             "Cost of x[u:v] (0-based, end exclusive).");

    m.def("default_quantile_count", &default_quantile_count, py::arg("n"));

    m.def(
        "pelt",
        [](const CostModel& c, double penalty, std::optional<std::size_t> msl) {
            return pelt(c, penalty, msl.value_or(c.default_min_seg_len())).segmentation;
        },
        py::arg("model"), py::arg("penalty"), py::arg("min_seg_len") = py::none(),
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "optimal_partitioning",
        [](const CostModel& c, double penalty, std::optional<std::size_t> msl) {
            return optimal_partitioning(c, penalty, msl.value_or(c.default_min_seg_len()));
        },
        py::arg("model"), py::arg("penalty"), py::arg("min_seg_len") = py::none(),
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "segment_neighbourhood",
        [](const CostModel& c, std::size_t max_cpts) { return segment_neighbourhood(c, max_cpts); },
        py::arg("model"), py::arg("max_cpts"), py::call_guard<py::gil_scoped_release>());

    m.def(
        "cvm_statistic",
        [](const std::vector<double>& x, std::size_t center, std::size_t h) {
            return cvm_statistic(to_series(x), center, h);
        },
        py::arg("x"), py::arg("center"), py::arg("half_window"));
    m.def(
        "screen_candidates",
        [](const std::vector<double>& x, std::optional<std::size_t> h) {
            const TimeSeries s = to_series(x);
            const auto cfg = h ? ScreeningConfig{*h} : ScreeningConfig::defaults_for(s.size());
            return screen_candidates(s, cfg).candidates;
        },
        py::arg("x"), py::arg("half_window") = py::none());

    py::class_<PathEntry>(m, "PathEntry")
        .def_readonly("penalty_lo", &PathEntry::penalty_lo)
        .def_readonly("penalty_hi", &PathEntry::penalty_hi)
        .def_readonly("segmentation", &PathEntry::segmentation);
    py::class_<PenaltyPath>(m, "PenaltyPath")
        .def_readonly("xi_min", &PenaltyPath::xi_min)
        .def_readonly("xi_max", &PenaltyPath::xi_max)
        .def_readonly("entries", &PenaltyPath::entries)
        .def_readonly("pelt_calls", &PenaltyPath::pelt_calls)
        .def("covering", &PenaltyPath::covering, py::return_value_policy::reference_internal);
    m.def(
        "crops",
        [](const CostModel& c, double lo, double hi) { return crops_sweep(c, lo, hi); },
        py::arg("model"), py::arg("xi_min"), py::arg("xi_max"),
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "elbow_curve",
        [](const PenaltyPath& p) {
            std::vector<std::pair<std::size_t, double>> out;
            for (const auto& e : elbow_curve(p)) out.emplace_back(e.m, e.cost);
            return out;
        },
        py::arg("path"));
    m.def(
        "suggest_elbow",
        [](const std::vector<std::pair<std::size_t, double>>& curve) {
            std::vector<ElbowPoint> pts;
            for (const auto& [mm, c] : curve) pts.push_back({mm, c});
            return suggest_elbow(pts);
        },
        py::arg("curve"));

    m.def(
        "simulate",
        [](int model_id, std::size_t n, const std::string& error, double sigma, std::uint64_t seed) {
            const auto data = generate(SimSpec{model_id, n, parse_error_dist(error), sigma, seed});
            const auto v = data.series.values();
            return std::make_pair(std::vector<double>(v.begin(), v.end()), data.changepoints);
        },
        py::arg("model_id"), py::arg("n"), py::arg("error") = "normal", py::arg("sigma") = 0.5,
        py::arg("seed") = 0);
    m.def(
        "tp_fp",
        [](const std::vector<std::size_t>& truth, const std::vector<std::size_t>& est,
           std::size_t tol) {
            const auto r = tp_fp(truth, est, tol);
            return std::make_pair(r.true_positive, r.false_positive);
        },
        py::arg("truth"), py::arg("estimate"), py::arg("tolerance") = 0);
    m.def(
        "benchmark",
        [](int model_id, std::size_t n, const std::string& method, std::size_t reps,
           std::optional<std::size_t> k, std::optional<double> penalty, std::uint64_t seed,
           std::size_t threads) {
            SimSpec spec;
            spec.model_id = model_id;
            spec.n = n;
            spec.seed = seed;
            MethodParams params;
            params.k = k;
            params.penalty = penalty;
            params.threads = threads;
            const Method meth = parse_method(method);
            py::gil_scoped_release release;
            const auto r = run_benchmark(spec, meth, reps, params);
            py::gil_scoped_acquire acquire;
            py::dict d;
            d["true_positive"] = py::make_tuple(r.true_positive.mean, r.true_positive.sd);
            d["false_positive"] = py::make_tuple(r.false_positive.mean, r.false_positive.sd);
            d["seconds"] = py::make_tuple(r.seconds.mean, r.seconds.sd);
            return d;
        },
        py::arg("model_id"), py::arg("n"), py::arg("method") = "np-pelt+", py::arg("reps") = 100,
        py::arg("K") = py::none(), py::arg("penalty") = py::none(), py::arg("seed") = 0,
        py::arg("threads") = 1);
}
