#pragma once

#include "npcpt/simbench.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

namespace npcpt::cli {

struct BenchConfig {
    SimSpec spec;
    Method method = Method::NpPeltQuantile;
    MethodParams params;
    std::size_t reps = 100;
};

/// Parses `key = value` lines; `#` starts a comment. Recognised keys: model,
/// n, error, sigma, seed, method, reps, K, penalty, max_cpts, half_window,
/// tolerance, threads. Unknown keys and invalid values throw ConfigError.
BenchConfig parse_bench_config(std::string_view text);
BenchConfig load_bench_config(const std::filesystem::path& path);

/// Penalty literal or symbolic form "logn", "2logn", "3logn" (any numeric
/// coefficient before "logn"), evaluated for a series of length n.
double parse_penalty(std::string_view text, std::size_t n);

}  // namespace npcpt::cli
