#include "npcpt/cost_model.hpp"

#include "npcpt/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace npcpt {

std::size_t default_quantile_count(std::size_t n) {
    if (n == 0) {
        throw ConfigError("default_quantile_count: n must be positive");
    }
    const auto k = static_cast<std::size_t>(std::ceil(4.0 * std::log(static_cast<double>(n))));
    return std::clamp<std::size_t>(k, 1, n);
}

QuantileGrid build_quantile_grid(const TimeSeries& series, std::size_t k) {
    const std::size_t n = series.size();
    if (k < 1 || k > n) {
        throw ConfigError("quantile count K must satisfy 1 <= K <= n (K=" + std::to_string(k) +
                          ", n=" + std::to_string(n) + ")");
    }
    const double nd = static_cast<double>(n);
    const double log_span = std::log(2.0 * nd - 1.0);
    const auto sorted = series.sorted_values();

    QuantileGrid grid;
    grid.k = k;
    grid.weight = 2.0 * log_span / static_cast<double>(k);
    grid.probabilities.reserve(k);
    grid.thresholds.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) {
        const double step = static_cast<double>(2 * i - 1) / static_cast<double>(k);
        const double p = 1.0 / (1.0 + (2.0 * nd - 1.0) * std::exp(-log_span * step));
        grid.probabilities.push_back(p);
        const auto rank = static_cast<std::size_t>(std::ceil(p * nd));
        grid.thresholds.push_back(sorted[std::clamp<std::size_t>(rank, 1, n) - 1]);
    }
    return grid;
}

std::string_view to_string(CostKind kind) {
    switch (kind) {
        case CostKind::NonparametricFull:
            return "np-full";
        case CostKind::NonparametricQuantile:
            return "np";
        case CostKind::PiecewiseLinear:
            return "linear";
    }
    return "unknown";
}

double linear_rss_from_sums(double length, double sum_i, double sum_y, double sum_iy,
                            double sum_yy) {
    if (length < 3.0) {
        return 0.0;
    }
    const double sxx = length * (length * length - 1.0) / 12.0;
    const double sxy = sum_iy - sum_i * sum_y / length;
    const double syy = sum_yy - sum_y * sum_y / length;
    return std::max(0.0, syy - sxy * sxy / sxx);
}

CostModel::CdfTable CostModel::build_cdf_table(const TimeSeries& series,
                                               std::span<const double> thresholds) {
    const std::size_t n = series.size();
    const std::size_t width = thresholds.size();
    if (n >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max() / 2)) {
        throw ConfigError("series too long for 32-bit prefix counts");
    }
    CdfTable table;
    table.width = width;
    table.doubled_counts.assign((n + 1) * width, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = series[i];
        const std::int32_t* prev = table.doubled_counts.data() + i * width;
        std::int32_t* row = table.doubled_counts.data() + (i + 1) * width;
        for (std::size_t k = 0; k < width; ++k) {
            row[k] = prev[k] + (x < thresholds[k] ? 2 : (x == thresholds[k] ? 1 : 0));
        }
    }
    table.half_xlogx.resize(2 * n + 1);
    table.half_xlogx[0] = 0.0;
    for (std::size_t j = 1; j <= 2 * n; ++j) {
        const double a = 0.5 * static_cast<double>(j);
        table.half_xlogx[j] = a * std::log(a);
    }
    return table;
}

CostModel CostModel::nonparametric_quantile(const TimeSeries& series, std::size_t k) {
    return nonparametric_quantile(series, build_quantile_grid(series, k));
}

CostModel CostModel::nonparametric_quantile(const TimeSeries& series, QuantileGrid grid) {
    if (grid.k != grid.thresholds.size() || grid.k == 0) {
        throw ConfigError("malformed quantile grid");
    }
    CdfTable table = build_cdf_table(series, grid.thresholds);
    table.uniform_weight = grid.weight;
    CostModel model(CostKind::NonparametricQuantile, series.size(), std::move(table));
    model.grid_ = std::move(grid);
    return model;
}

CostModel CostModel::nonparametric_full(const TimeSeries& series) {
    const std::size_t n = series.size();
    const double nd = static_cast<double>(n);
    const auto sorted = series.sorted_values();

    // Tied order statistics share one threshold; their rank weights are summed.
    std::vector<double> thresholds;
    std::vector<double> weights;
    for (std::size_t r = 1; r <= n; ++r) {
        const double rd = static_cast<double>(r);
        const double w = nd / ((rd - 0.5) * (nd - rd + 0.5));
        if (!thresholds.empty() && thresholds.back() == sorted[r - 1]) {
            weights.back() += w;
        } else {
            thresholds.push_back(sorted[r - 1]);
            weights.push_back(w);
        }
    }
    CdfTable table = build_cdf_table(series, thresholds);
    table.weights = std::move(weights);
    return CostModel(CostKind::NonparametricFull, n, std::move(table));
}

CostModel CostModel::piecewise_linear(const TimeSeries& series) {
    const std::size_t n = series.size();
    LinearTable t;
    for (auto* v : {&t.sum_i, &t.sum_y, &t.sum_iy, &t.sum_yy}) {
        v->assign(n + 1, 0.0);
    }
    for (std::size_t j = 0; j < n; ++j) {
        const double i = static_cast<double>(j + 1);
        const double y = series[j];
        t.sum_i[j + 1] = t.sum_i[j] + i;
        t.sum_y[j + 1] = t.sum_y[j] + y;
        t.sum_iy[j + 1] = t.sum_iy[j] + i * y;
        t.sum_yy[j + 1] = t.sum_yy[j] + y * y;
    }
    return CostModel(CostKind::PiecewiseLinear, n, std::move(t));
}

std::size_t CostModel::default_min_seg_len() const noexcept {
    return kind_ == CostKind::PiecewiseLinear ? 2 : 1;
}

double CostModel::cost(std::size_t u, std::size_t v) const {
    if (u >= v) {
        throw std::domain_error("segment_cost: require u < v");
    }
    if (v > n_) {
        throw std::domain_error("segment_cost: v exceeds series length");
    }
    return cost_unchecked(u, v);
}

double CostModel::cost_unchecked(std::size_t u, std::size_t v) const noexcept {
    if (const auto* cdf = std::get_if<CdfTable>(&table_)) {
        return cdf_cost(*cdf, u, v);
    }
    return linear_cost(std::get<LinearTable>(table_), u, v);
}

double CostModel::cdf_cost(const CdfTable& table, std::size_t u, std::size_t v) const noexcept {
    // -L = len log len - a log a - (len-a) log(len-a) with a = len * F, all in
    // half-units so the lookup table covers every attainable count.
    const std::size_t width = table.width;
    const std::int32_t* lo = table.doubled_counts.data() + u * width;
    const std::int32_t* hi = table.doubled_counts.data() + v * width;
    const auto twice_len = static_cast<std::int32_t>(2 * (v - u));
    const double* h = table.half_xlogx.data();
    const double whole = h[twice_len];

    double total = 0.0;
    if (table.weights.empty()) {
        for (std::size_t k = 0; k < width; ++k) {
            const std::int32_t c = hi[k] - lo[k];
            total += whole - h[c] - h[twice_len - c];
        }
        total *= table.uniform_weight;
    } else {
        const double* w = table.weights.data();
        for (std::size_t k = 0; k < width; ++k) {
            const std::int32_t c = hi[k] - lo[k];
            total += w[k] * (whole - h[c] - h[twice_len - c]);
        }
    }
    return std::max(0.0, total);
}

double CostModel::linear_cost(const LinearTable& t, std::size_t u, std::size_t v) noexcept {
    return linear_rss_from_sums(static_cast<double>(v - u), t.sum_i[v] - t.sum_i[u],
                                t.sum_y[v] - t.sum_y[u],
                                t.sum_iy[v] - t.sum_iy[u], t.sum_yy[v] - t.sum_yy[u]);
}

}  // namespace npcpt
