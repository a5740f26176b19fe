#pragma once

// Test-only helpers: random data and from-scratch cost oracles that share no
// code with the prefix-table evaluators.

#include "npcpt/cost_model.hpp"
#include "npcpt/time_series.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

namespace npcpt::testing {

inline std::vector<double> random_series(std::mt19937_64& rng, std::size_t n, bool with_ties) {
    std::vector<double> x(n);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_int_distribution<int> small(0, 4);
    std::bernoulli_distribution jump(0.1);
    double level = 0.0;
    for (auto& v : x) {
        if (jump(rng)) {
            level += 3.0 * normal(rng);
        }
        v = with_ties ? static_cast<double>(small(rng)) + std::round(level) : level + normal(rng);
    }
    return x;
}

inline double oracle_cdf(std::span<const double> seg, double t) {
    double below = 0.0;
    double ties = 0.0;
    for (const double x : seg) {
        below += x < t ? 1.0 : 0.0;
        ties += x == t ? 1.0 : 0.0;
    }
    return (below + 0.5 * ties) / static_cast<double>(seg.size());
}

inline double oracle_neg_loglik(std::span<const double> seg, double t) {
    const double f = oracle_cdf(seg, t);
    double s = 0.0;
    if (f > 0.0) {
        s += f * std::log(f);
    }
    if (f < 1.0) {
        s += (1.0 - f) * std::log(1.0 - f);
    }
    return -static_cast<double>(seg.size()) * s;
}

/// Weighted sum over the model's grid, evaluated from the raw sub-range.
inline double oracle_quantile_cost(const TimeSeries& s, const QuantileGrid& grid, std::size_t u,
                                   std::size_t v) {
    const auto seg = s.values().subspan(u, v - u);
    double total = 0.0;
    for (const double t : grid.thresholds) {
        total += oracle_neg_loglik(seg, t);
    }
    return grid.weight * total;
}

/// n * sum over ranks r of -L(segment; x_(r)) / ((r - 0.5)(n - r + 0.5)).
inline double oracle_full_cost(const TimeSeries& s, std::size_t u, std::size_t v) {
    const auto seg = s.values().subspan(u, v - u);
    std::vector<double> sorted(s.values().begin(), s.values().end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double total = 0.0;
    for (std::size_t r = 1; r <= sorted.size(); ++r) {
        const double rd = static_cast<double>(r);
        total += oracle_neg_loglik(seg, sorted[r - 1]) / ((rd - 0.5) * (n - rd + 0.5));
    }
    return n * total;
}

/// Residual sum of squares of the centred least-squares line.
inline double oracle_linear_cost(const TimeSeries& s, std::size_t u, std::size_t v) {
    const std::size_t len = v - u;
    if (len < 3) {
        return 0.0;
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t j = u; j < v; ++j) {
        mx += static_cast<double>(j + 1);
        my += s[j];
    }
    mx /= static_cast<double>(len);
    my /= static_cast<double>(len);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t j = u; j < v; ++j) {
        const double dx = static_cast<double>(j + 1) - mx;
        sxx += dx * dx;
        sxy += dx * (s[j] - my);
    }
    const double slope = sxy / sxx;
    double rss = 0.0;
    for (std::size_t j = u; j < v; ++j) {
        const double r = s[j] - my - slope * (static_cast<double>(j + 1) - mx);
        rss += r * r;
    }
    return rss;
}

inline bool close_rel(double a, double b, double rel, double abs = 1e-12) {
    return std::abs(a - b) <= abs + rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace npcpt::testing
