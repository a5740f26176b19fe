#pragma once

#include "npcpt/cost_model.hpp"
#include "npcpt/search.hpp"
#include "npcpt/time_series.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace npcpt {

struct ScreeningConfig {
    std::size_t half_window = 1;

    /// ceil((log n)^{3/2} / 2), at least 1.
    static ScreeningConfig defaults_for(std::size_t n);
};

/// Two-sample Cramer-von Mises statistic between x_{c-h+1..c} and x_{c+1..c+h}:
/// N1 N2 / (N1+N2)^2 * sum over pooled points z of (F1(z) - F2(z))^2, with
/// half-weighted ties in both empirical CDFs. Throws std::domain_error unless
/// h >= 1 and h <= c <= n - h.
double cvm_statistic(const TimeSeries& series, std::size_t center, std::size_t half_window);

struct ScreeningResult {
    std::vector<std::size_t> candidates;
    std::optional<std::string> warning;
};

/// Positions whose CvM statistic is maximal among all valid positions within
/// half_window of them. Exact ties keep the leftmost position. Positions
/// closer than half_window to either end are never candidates.
ScreeningResult screen_candidates(const TimeSeries& series, const ScreeningConfig& config);

/// Segment neighbourhood search restricted to the screened candidates.
std::vector<Segmentation> nmcd_plus(const TimeSeries& series, const ScreeningConfig& config,
                                    const CostModel& model, std::size_t max_cpts);

}  // namespace npcpt
