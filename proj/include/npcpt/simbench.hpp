#pragma once

#include "npcpt/time_series.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace npcpt {

enum class ErrorDist { Normal, StudentT3, StdChiSq1, StdChiSq3 };

std::string_view to_string(ErrorDist dist);
ErrorDist parse_error_dist(std::string_view name);  // throws ConfigError listing valid names

/// Simulation model description.
///  - Model 1: eleven location shifts, x_i = sum_j h_j 1{i > tau_j} + sigma e_i.
///  - Model 2: four changes in location and scale; the noise scale is sigma
///    times the running product of v_j over the changepoints already passed.
///  - Model 3: segments drawn from N(0,1), standardized chi2(3), standardized
///    chi2(1), N(0,1), scaled by sigma; error_dist is ignored.
struct SimSpec {
    int model_id = 1;
    std::size_t n = 1000;
    ErrorDist error_dist = ErrorDist::Normal;
    double sigma = 0.5;
    std::uint64_t seed = 0;
};

struct SimData {
    TimeSeries series;
    std::vector<std::size_t> changepoints;
};

/// floor(fraction * n) for each true changepoint fraction of the model.
/// Throws ConfigError for unknown models or when positions collide.
std::vector<std::size_t> true_changepoints(int model_id, std::size_t n);

/// Deterministic for a given spec (including seed).
SimData generate(const SimSpec& spec);

struct DetectionRates {
    double true_positive = 0.0;   // share of true changepoints matched
    double false_positive = 0.0;  // share of estimates left unmatched
    bool true_positive_defined = true;
};

/// One-to-one matching within +/- tolerance, closest pairs first. Tolerance 0
/// is plain set membership. No estimates gives FP 0; no true changepoints
/// gives TP 1 when there are no estimates either, otherwise TP is undefined
/// (NaN, flagged).
DetectionRates tp_fp(std::span<const std::size_t> truth, std::span<const std::size_t> estimate,
                     std::size_t tolerance);

enum class Method { NpPeltQuantile, NpPeltFull, Nmcd, NmcdPlus, LinearPelt };

std::string_view to_string(Method method);
Method parse_method(std::string_view name);  // throws ConfigError listing valid names

struct MethodParams {
    std::optional<std::size_t> k;            // quantile count; default ceil(4 log n)
    std::optional<double> penalty;           // default: default_penalty(n)
    std::size_t max_cpts = 20;               // segment neighbourhood depth (NMCD, NMCD+)
    std::optional<std::size_t> half_window;  // NMCD+ window; default ceil((log n)^{3/2}/2)
    std::size_t tolerance = 0;               // matching tolerance for tp_fp
    std::size_t threads = 1;
};

/// Penalty per changepoint used by the benchmarks when none is given, as a
/// multiple of log n.
inline constexpr double kDefaultPenaltyPerLogN = 3.0;

double default_penalty(std::size_t n);

/// Changepoints found by `method` on `series`.
std::vector<std::size_t> run_method(const TimeSeries& series, Method method, const MethodParams& params);

struct Replication {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    DetectionRates rates;
    std::size_t detected = 0;
    double seconds = 0.0;
};

struct Summary {
    double mean = 0.0;
    double sd = 0.0;
};

struct BenchReport {
    SimSpec spec;
    Method method = Method::NpPeltQuantile;
    MethodParams params;
    std::vector<Replication> replications;
    Summary true_positive;
    Summary false_positive;
    Summary seconds;
};

/// Seed of replication `index` derived from the base seed.
std::uint64_t replication_seed(std::uint64_t base_seed, std::size_t index);

/// Runs `reps` independent replications with seeds replication_seed(spec.seed, i).
/// Timing covers cost precomputation and search, not data generation.
BenchReport run_benchmark(const SimSpec& spec, Method method, std::size_t reps,
                          const MethodParams& params);

Summary summarize(std::span<const double> values);

}  // namespace npcpt
