#pragma once

#include "npcpt/time_series.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace npcpt {

/// Thresholds at which the K-point nonparametric cost evaluates the segment CDF.
///
/// Probability levels follow a logistic spacing that is symmetric about 0.5 and
/// denser in the tails: p_k = 1 / (1 + (2n-1) exp(-log(2n-1) (2k-1) / K)), so
/// p_1 and p_K approach 1/(2n) and (2n-1)/(2n) as K grows. Each threshold is the
/// type-1 empirical quantile sorted[ceil(p n)] of the full series. Duplicate
/// thresholds are kept so every term carries the same weight.
struct QuantileGrid {
    std::size_t k = 0;
    std::vector<double> probabilities;
    std::vector<double> thresholds;
    double weight = 0.0;  // 2 log(2n-1) / K
};

/// ceil(4 log n), clamped to [1, n].
std::size_t default_quantile_count(std::size_t n);

/// Throws ConfigError unless 1 <= k <= n.
QuantileGrid build_quantile_grid(const TimeSeries& series, std::size_t k);

enum class CostKind { NonparametricFull, NonparametricQuantile, PiecewiseLinear };

std::string_view to_string(CostKind kind);

/// Residual sum of squares of the least-squares line through `length`
/// consecutive points, given sums over the segment of i, y, i*y and y^2 where i
/// is the global 1-based index. The centred sum of i^2 is the closed form
/// length (length^2 - 1) / 12. Segments shorter than 3 fit exactly.
double linear_rss_from_sums(double length, double sum_i, double sum_y, double sum_iy,
                            double sum_yy);

/// Segment-cost evaluator over one series, with all prefix tables built up
/// front. Immutable after construction, so concurrent cost() calls are safe.
///
/// Costs are nonnegative and subadditive: cost(u, T) >= cost(u, v) + cost(v, T).
///  - NonparametricQuantile: (2 log(2n-1) / K) * sum_k -L(segment; t_k), O(K).
///  - NonparametricFull: n * sum_r -L(segment; x_(r)) / ((r-0.5)(n-r+0.5)) over
///    all ranks r of the pooled sample, O(#distinct values).
///  - PiecewiseLinear: residual sum of squares of a least-squares line, O(1).
class CostModel {
public:
    static CostModel nonparametric_full(const TimeSeries& series);
    static CostModel nonparametric_quantile(const TimeSeries& series, std::size_t k);
    static CostModel nonparametric_quantile(const TimeSeries& series, QuantileGrid grid);
    static CostModel piecewise_linear(const TimeSeries& series);

    CostKind kind() const noexcept { return kind_; }
    std::size_t size() const noexcept { return n_; }

    /// Quantile grid, present only for the NonparametricQuantile kind.
    const std::optional<QuantileGrid>& grid() const noexcept { return grid_; }

    /// 1 for the nonparametric kinds, 2 for the linear kind.
    std::size_t default_min_seg_len() const noexcept;

    /// Cost of the segment x_{u+1..v}. Throws std::domain_error unless u < v <= n.
    double cost(std::size_t u, std::size_t v) const;

    /// cost() without range checks, for solver inner loops.
    double cost_unchecked(std::size_t u, std::size_t v) const noexcept;

private:
    // Doubled counts 2 #{x_j < t} + #{x_j = t} over prefixes, one row per prefix
    // length, one column per threshold.
    struct CdfTable {
        std::size_t width = 0;
        std::vector<std::int32_t> doubled_counts;
        std::vector<double> weights;  // empty when all weights equal uniform_weight
        double uniform_weight = 0.0;
        std::vector<double> half_xlogx;  // entry j holds (j/2) log(j/2)
    };

    struct LinearTable {
        std::vector<double> sum_i, sum_y, sum_iy, sum_yy;
    };

    CostModel(CostKind kind, std::size_t n, std::variant<CdfTable, LinearTable> table)
        : kind_(kind), n_(n), table_(std::move(table)) {}

    static CdfTable build_cdf_table(const TimeSeries& series, std::span<const double> thresholds);
    double cdf_cost(const CdfTable& table, std::size_t u, std::size_t v) const noexcept;
    static double linear_cost(const LinearTable& table, std::size_t u, std::size_t v) noexcept;

    CostKind kind_;
    std::size_t n_;
    std::optional<QuantileGrid> grid_;
    std::variant<CdfTable, LinearTable> table_;
};

}  // namespace npcpt
