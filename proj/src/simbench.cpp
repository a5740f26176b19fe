#include "npcpt/simbench.hpp"

#include "npcpt/cost_model.hpp"
#include "npcpt/error.hpp"
#include "npcpt/screening.hpp"
#include "npcpt/search.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <tuple>

namespace npcpt {

namespace {

// Changepoint fractions in hundredths of n, so positions are exact integers.
constexpr std::array<std::size_t, 11> kModel1Percent{10, 13, 15, 23, 25, 40, 44, 65, 76, 78, 81};
constexpr std::array<double, 11> kModel1Jumps{2.01, -2.51, 1.51, -2.01, 2.51, -2.11,
                                              1.05, 2.16,  -1.56, 2.56, -2.11};
constexpr std::array<std::size_t, 4> kModel2Percent{20, 40, 65, 85};
constexpr std::array<double, 4> kModel2Jumps{3.0, 0.0, -2.0, 0.0};
constexpr std::array<double, 4> kModel2Scales{1.0, 5.0, 1.0, 0.25};
constexpr std::array<std::size_t, 3> kModel3Percent{20, 50, 75};
constexpr std::array<ErrorDist, 4> kModel3Segments{ErrorDist::Normal, ErrorDist::StdChiSq3,
                                                   ErrorDist::StdChiSq1, ErrorDist::Normal};

template <class Rng>
double draw_error(ErrorDist dist, Rng& rng) {
    switch (dist) {
        case ErrorDist::Normal:
            return std::normal_distribution<double>(0.0, 1.0)(rng);
        case ErrorDist::StudentT3:
            return std::student_t_distribution<double>(3.0)(rng);
        case ErrorDist::StdChiSq1:
            return (std::chi_squared_distribution<double>(1.0)(rng) - 1.0) / std::sqrt(2.0);
        case ErrorDist::StdChiSq3:
            return (std::chi_squared_distribution<double>(3.0)(rng) - 3.0) / std::sqrt(6.0);
    }
    return 0.0;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::string join_names(std::initializer_list<std::string_view> names) {
    std::string out;
    for (const auto name : names) {
        out += out.empty() ? "" : ", ";
        out += name;
    }
    return out;
}

}  // namespace

std::string_view to_string(ErrorDist dist) {
    switch (dist) {
        case ErrorDist::Normal:
            return "normal";
        case ErrorDist::StudentT3:
            return "t3";
        case ErrorDist::StdChiSq1:
            return "chisq1";
        case ErrorDist::StdChiSq3:
            return "chisq3";
    }
    return "unknown";
}

ErrorDist parse_error_dist(std::string_view name) {
    for (const auto d : {ErrorDist::Normal, ErrorDist::StudentT3, ErrorDist::StdChiSq1,
                         ErrorDist::StdChiSq3}) {
        if (name == to_string(d)) {
            return d;
        }
    }
    throw ConfigError("unknown error distribution '" + std::string(name) +
                      "'; valid: " + join_names({"normal", "t3", "chisq1", "chisq3"}));
}

std::string_view to_string(Method method) {
    switch (method) {
        case Method::NpPeltQuantile:
            return "np-pelt+";
        case Method::NpPeltFull:
            return "np-pelt-full";
        case Method::Nmcd:
            return "nmcd";
        case Method::NmcdPlus:
            return "nmcd+";
        case Method::LinearPelt:
            return "linear-pelt";
    }
    return "unknown";
}

Method parse_method(std::string_view name) {
    for (const auto m : {Method::NpPeltQuantile, Method::NpPeltFull, Method::Nmcd, Method::NmcdPlus,
                         Method::LinearPelt}) {
        if (name == to_string(m)) {
            return m;
        }
    }
    throw ConfigError("unknown method '" + std::string(name) + "'; valid: " +
                      join_names({"np-pelt+", "np-pelt-full", "nmcd", "nmcd+", "linear-pelt"}));
}

std::vector<std::size_t> true_changepoints(int model_id, std::size_t n) {
    std::span<const std::size_t> percent;
    switch (model_id) {
        case 1:
            percent = kModel1Percent;
            break;
        case 2:
            percent = kModel2Percent;
            break;
        case 3:
            percent = kModel3Percent;
            break;
        default:
            throw ConfigError("unknown model_id " + std::to_string(model_id) + "; valid: 1, 2, 3");
    }
    std::vector<std::size_t> cps;
    for (const std::size_t p : percent) {
        const std::size_t tau = p * n / 100;
        if (tau == 0 || tau >= n || (!cps.empty() && tau <= cps.back())) {
            throw ConfigError("n=" + std::to_string(n) + " is too short for model " +
                              std::to_string(model_id) + ": changepoints collide");
        }
        cps.push_back(tau);
    }
    return cps;
}

SimData generate(const SimSpec& spec) {
    auto cps = true_changepoints(spec.model_id, spec.n);
    if (!(spec.sigma > 0.0) || !std::isfinite(spec.sigma)) {
        throw ConfigError("sigma must be positive");
    }
    std::mt19937_64 rng(spec.seed);
    std::vector<double> x(spec.n);
    std::size_t segment = 0;  // number of changepoints strictly before index i
    double level = 0.0;
    double scale = 1.0;
    for (std::size_t i = 1; i <= spec.n; ++i) {
        while (segment < cps.size() && i > cps[segment]) {
            if (spec.model_id == 1) {
                level += kModel1Jumps[segment];
            } else if (spec.model_id == 2) {
                level += kModel2Jumps[segment];
                scale *= kModel2Scales[segment];
            }
            ++segment;
        }
        const ErrorDist dist = spec.model_id == 3 ? kModel3Segments[segment] : spec.error_dist;
        x[i - 1] = level + spec.sigma * scale * draw_error(dist, rng);
    }
    return SimData{TimeSeries(std::move(x)), std::move(cps)};
}

DetectionRates tp_fp(std::span<const std::size_t> truth, std::span<const std::size_t> estimate,
                     std::size_t tolerance) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> pairs;  // (distance, i, j)
    for (std::size_t i = 0; i < truth.size(); ++i) {
        for (std::size_t j = 0; j < estimate.size(); ++j) {
            const std::size_t d =
                truth[i] > estimate[j] ? truth[i] - estimate[j] : estimate[j] - truth[i];
            if (d <= tolerance) {
                pairs.emplace_back(d, i, j);
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<bool> used_truth(truth.size(), false);
    std::vector<bool> used_estimate(estimate.size(), false);
    std::size_t matched = 0;
    for (const auto& [d, i, j] : pairs) {
        if (!used_truth[i] && !used_estimate[j]) {
            used_truth[i] = used_estimate[j] = true;
            ++matched;
        }
    }

    DetectionRates rates;
    if (truth.empty()) {
        rates.true_positive_defined = estimate.empty();
        rates.true_positive = estimate.empty() ? 1.0 : std::numeric_limits<double>::quiet_NaN();
    } else {
        rates.true_positive = static_cast<double>(matched) / static_cast<double>(truth.size());
    }
    rates.false_positive =
        estimate.empty() ? 0.0
                         : static_cast<double>(estimate.size() - matched) /
                               static_cast<double>(estimate.size());
    return rates;
}

double default_penalty(std::size_t n) {
    return kDefaultPenaltyPerLogN * std::log(static_cast<double>(n));
}

std::vector<std::size_t> run_method(const TimeSeries& series, Method method,
                                    const MethodParams& params) {
    const std::size_t n = series.size();
    const double penalty = params.penalty.value_or(default_penalty(n));
    switch (method) {
        case Method::NpPeltQuantile: {
            const auto model =
                CostModel::nonparametric_quantile(series, params.k.value_or(default_quantile_count(n)));
            return pelt(model, penalty).segmentation.changepoints;
        }
        case Method::NpPeltFull: {
            const auto model = CostModel::nonparametric_full(series);
            return pelt(model, penalty).segmentation.changepoints;
        }
        case Method::Nmcd: {
            const auto model = CostModel::nonparametric_full(series);
            const auto by_count = segment_neighbourhood(model, std::min(params.max_cpts, n - 1));
            return sic_select(by_count, penalty).changepoints;
        }
        case Method::NmcdPlus: {
            const auto model = CostModel::nonparametric_full(series);
            const ScreeningConfig config = params.half_window
                                               ? ScreeningConfig{*params.half_window}
                                               : ScreeningConfig::defaults_for(n);
            const auto by_count = nmcd_plus(series, config, model, std::min(params.max_cpts, n - 1));
            if (by_count.empty()) {
                return {};
            }
            return sic_select(by_count, penalty).changepoints;
        }
        case Method::LinearPelt: {
            const auto model = CostModel::piecewise_linear(series);
            return pelt(model, penalty).segmentation.changepoints;
        }
    }
    return {};
}

std::uint64_t replication_seed(std::uint64_t base_seed, std::size_t index) {
    return splitmix64(splitmix64(base_seed) ^ static_cast<std::uint64_t>(index));
}

Summary summarize(std::span<const double> values) {
    Summary s;
    if (values.empty()) {
        return s;
    }
    double sum = 0.0;
    for (const double v : values) {
        sum += v;
    }
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (const double v : values) {
            ss += (v - s.mean) * (v - s.mean);
        }
        s.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return s;
}

BenchReport run_benchmark(const SimSpec& spec, Method method, std::size_t reps,
                          const MethodParams& params) {
    if (reps == 0) {
        throw ConfigError("reps must be at least 1");
    }
    true_changepoints(spec.model_id, spec.n);  // validates before any work

    BenchReport report;
    report.spec = spec;
    report.method = method;
    report.params = params;
    report.replications.resize(reps);

    std::vector<std::exception_ptr> failures(reps);
    auto one = [&](std::size_t i) {
        SimSpec rep_spec = spec;
        rep_spec.seed = replication_seed(spec.seed, i);
        const SimData data = generate(rep_spec);
        const auto start = std::chrono::steady_clock::now();
        const auto found = run_method(data.series, method, params);
        const auto stop = std::chrono::steady_clock::now();

        Replication& r = report.replications[i];
        r.index = i;
        r.seed = rep_spec.seed;
        r.rates = tp_fp(data.changepoints, found, params.tolerance);
        r.detected = found.size();
        r.seconds = std::chrono::duration<double>(stop - start).count();
    };
    auto worker = [&](std::size_t offset, std::size_t stride) {
        for (std::size_t i = offset; i < reps; i += stride) {
            try {
                one(i);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::clamp<std::size_t>(params.threads, 1, reps);
    if (threads == 1) {
        worker(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker, t, threads);
        }
    }

    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    std::vector<double> tp, fp, secs;
    for (const auto& r : report.replications) {
        tp.push_back(r.rates.true_positive);
        fp.push_back(r.rates.false_positive);
        secs.push_back(r.seconds);
    }
    report.true_positive = summarize(tp);
    report.false_positive = summarize(fp);
    report.seconds = summarize(secs);
    return report;
}

}  // namespace npcpt
