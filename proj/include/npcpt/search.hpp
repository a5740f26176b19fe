#pragma once

#include "npcpt/cost_model.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace npcpt {

/// Changepoints 0 < tau_1 < ... < tau_m < n, where tau_i is the last index
/// (1-based) of segment i. total_cost is the sum of segment costs with no
/// penalty included.
struct Segmentation {
    std::vector<std::size_t> changepoints;
    double total_cost = 0.0;
    std::optional<std::string> warning;

    std::size_t count() const noexcept { return changepoints.size(); }
    double penalized_cost(double penalty) const noexcept {
        return total_cost + penalty * static_cast<double>(changepoints.size());
    }
};

/// Per-step diagnostics of the penalized recursion.
struct SolverTrace {
    std::vector<std::size_t> candidate_set_sizes;  // entry v-1 is |R| at step v
    std::vector<double> f_values;                  // entry v is the optimum for x_{1..v}
    std::size_t pruned = 0;
};

struct PeltResult {
    Segmentation segmentation;
    SolverTrace trace;
};

/// Sum of segment costs for the segmentation implied by `changepoints`.
double segmentation_cost(const CostModel& model, std::span<const std::size_t> changepoints);

/// Absolute slack under which two penalized costs count as tied. The solvers
/// and brute_force share it so near-equal optima resolve identically.
double tie_tolerance(const CostModel& model, double penalty);

/// Exact minimiser of sum_i [cost(segment_i) + penalty] with candidate pruning.
///
/// A candidate u is dropped once f(u) + cost(u, v) exceeds f(v) by more than
/// the tie tolerance; with min_seg_len > 1 the drop takes effect only when v
/// itself becomes a feasible last changepoint. Among tied optima the smallest
/// last changepoint wins, recursively.
PeltResult pelt(const CostModel& model, double penalty, std::size_t min_seg_len);
PeltResult pelt(const CostModel& model, double penalty);

/// Same contract as pelt() without pruning; O(n^2) cost evaluations.
Segmentation optimal_partitioning(const CostModel& model, double penalty, std::size_t min_seg_len);
Segmentation optimal_partitioning(const CostModel& model, double penalty);

/// Optimal segmentations with exactly m = 0..max_cpts changepoints. Entries for
/// infeasible m (too few positions under min_seg_len) are omitted.
/// Throws ConfigError when max_cpts >= n.
std::vector<Segmentation> segment_neighbourhood(const CostModel& model, std::size_t max_cpts,
                                                std::size_t min_seg_len = 1);

/// Segment neighbourhood search with changepoints restricted to `candidates`
/// (strictly increasing, each in [1, n-1]).
std::vector<Segmentation> segment_neighbourhood(const CostModel& model, std::size_t max_cpts,
                                                std::span<const std::size_t> candidates,
                                                std::size_t min_seg_len = 1);

/// Entry minimising total_cost + m * penalty; ties go to the smaller m.
Segmentation sic_select(std::span<const Segmentation> by_count, double penalty);

/// Enumerates all 2^(n-1) segmentations. Refuses n > 16 with ConfigError.
/// Ties resolve like pelt(): smallest last changepoint first, then the one
/// before it, so fewer changepoints win when the later ones agree.
Segmentation brute_force(const CostModel& model, double penalty, std::size_t min_seg_len);

inline constexpr std::size_t kBruteForceMaxN = 16;

}  // namespace npcpt
