#pragma once

#include "npcpt/cost_model.hpp"
#include "npcpt/search.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace npcpt {

struct PathEntry {
    double penalty_lo = 0.0;
    double penalty_hi = 0.0;
    Segmentation segmentation;  // optimal for every penalty in [penalty_lo, penalty_hi]
};

/// Every optimal segmentation over a penalty range, ordered by increasing
/// penalty (so changepoint counts are non-increasing along entries).
struct PenaltyPath {
    double xi_min = 0.0;
    double xi_max = 0.0;
    std::vector<PathEntry> entries;
    std::size_t pelt_calls = 0;

    /// Entry whose interval contains `penalty`; the lower entry wins at a shared boundary.
    const PathEntry& covering(double penalty) const;
};

/// Changepoints over a range of penalties. Needs at most
/// m(xi_min) - m(xi_max) + 2 pelt runs. Throws ConfigError unless
/// 0 <= xi_min < xi_max.
PenaltyPath crops_sweep(const CostModel& model, double xi_min, double xi_max,
                        std::size_t min_seg_len);
PenaltyPath crops_sweep(const CostModel& model, double xi_min, double xi_max);

struct ElbowPoint {
    std::size_t m = 0;
    double cost = 0.0;
};

/// (m, unpenalized cost) by ascending m with strictly decreasing cost; equal
/// costs collapse onto the smallest m.
std::vector<ElbowPoint> elbow_curve(const PenaltyPath& path);

/// Interior point with the largest drop in slope, scaled by the total cost
/// range. Ties go to the smallest m. Needs at least three points.
std::optional<std::size_t> suggest_elbow(std::span<const ElbowPoint> curve);

}  // namespace npcpt
