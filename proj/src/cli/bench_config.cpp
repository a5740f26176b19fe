#include "npcpt/cli/bench_config.hpp"

#include "npcpt/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace npcpt::cli {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

double to_double(std::string_view key, const std::string& value) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(out)) {
        throw ConfigError(std::string(key) + ": expected a number, got '" + value + "'");
    }
    return out;
}

std::uint64_t to_unsigned(std::string_view key, const std::string& value) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw ConfigError(std::string(key) + ": expected a nonnegative integer, got '" + value + "'");
    }
    return out;
}

}  // namespace

double parse_penalty(std::string_view text, std::size_t n) {
    const std::string s = trim(text);
    constexpr std::string_view suffix = "logn";
    if (s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
        const std::string coef = s.substr(0, s.size() - suffix.size());
        const double c = coef.empty() ? 1.0 : to_double("penalty", coef);
        const double value = c * std::log(static_cast<double>(n));
        if (!(value >= 0.0)) {
            throw ConfigError("penalty must be nonnegative");
        }
        return value;
    }
    const double value = to_double("penalty", s);
    if (value < 0.0) {
        throw ConfigError("penalty must be nonnegative");
    }
    return value;
}

BenchConfig parse_bench_config(std::string_view text) {
    BenchConfig cfg;
    std::optional<std::string> penalty_text;
    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (trim(line).empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));

        if (key == "model") {
            const auto id = to_unsigned(key, value);
            if (id < 1 || id > 3) {
                throw ConfigError("unknown model_id " + value + "; valid: 1, 2, 3");
            }
            cfg.spec.model_id = static_cast<int>(id);
        } else if (key == "n") {
            cfg.spec.n = to_unsigned(key, value);
        } else if (key == "error") {
            cfg.spec.error_dist = parse_error_dist(value);
        } else if (key == "sigma") {
            cfg.spec.sigma = to_double(key, value);
        } else if (key == "seed") {
            cfg.spec.seed = to_unsigned(key, value);
        } else if (key == "method") {
            cfg.method = parse_method(value);
        } else if (key == "reps") {
            cfg.reps = to_unsigned(key, value);
        } else if (key == "K") {
            cfg.params.k = value == "auto" ? std::nullopt
                                           : std::optional<std::size_t>(to_unsigned(key, value));
        } else if (key == "penalty") {
            penalty_text = value;
        } else if (key == "max_cpts") {
            cfg.params.max_cpts = to_unsigned(key, value);
        } else if (key == "half_window") {
            cfg.params.half_window = to_unsigned(key, value);
        } else if (key == "tolerance") {
            cfg.params.tolerance = to_unsigned(key, value);
        } else if (key == "threads") {
            cfg.params.threads = to_unsigned(key, value);
        } else {
            throw ConfigError("unknown key '" + key +
                              "'; valid: model, n, error, sigma, seed, method, reps, K, penalty, "
                              "max_cpts, half_window, tolerance, threads");
        }
    }
    if (cfg.reps == 0) {
        throw ConfigError("reps must be at least 1");
    }
    if (cfg.spec.n == 0) {
        throw ConfigError("n must be positive");
    }
    if (!(cfg.spec.sigma > 0.0)) {
        throw ConfigError("sigma must be positive");
    }
    if (penalty_text) {
        cfg.params.penalty = parse_penalty(*penalty_text, cfg.spec.n);
    }
    true_changepoints(cfg.spec.model_id, cfg.spec.n);
    return cfg;
}

BenchConfig load_bench_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open config '" + path.string() + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_bench_config(buf.str());
}

}  // namespace npcpt::cli
