#include "npcpt/screening.hpp"

#include "npcpt/error.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace npcpt {

ScreeningConfig ScreeningConfig::defaults_for(std::size_t n) {
    const double log_n = std::log(static_cast<double>(std::max<std::size_t>(n, 1)));
    const auto h = static_cast<std::size_t>(std::ceil(std::pow(log_n, 1.5) / 2.0));
    return ScreeningConfig{std::max<std::size_t>(h, 1)};
}

namespace {

// Half-tie empirical CDF of a sorted sample at z.
double sorted_cdf(const std::vector<double>& sorted, double z) {
    const auto lo = std::lower_bound(sorted.begin(), sorted.end(), z);
    const auto hi = std::upper_bound(lo, sorted.end(), z);
    const double below = static_cast<double>(lo - sorted.begin());
    const double ties = static_cast<double>(hi - lo);
    return (below + 0.5 * ties) / static_cast<double>(sorted.size());
}

}  // namespace

double cvm_statistic(const TimeSeries& series, std::size_t center, std::size_t half_window) {
    if (half_window == 0 || center < half_window || center + half_window > series.size()) {
        throw std::domain_error("cvm_statistic: window out of range");
    }
    const auto x = series.values();
    std::vector<double> left(x.begin() + (center - half_window), x.begin() + center);
    std::vector<double> right(x.begin() + center, x.begin() + (center + half_window));
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());

    double sum = 0.0;
    for (const auto* sample : {&left, &right}) {
        for (const double z : *sample) {
            const double d = sorted_cdf(left, z) - sorted_cdf(right, z);
            sum += d * d;
        }
    }
    const double n1 = static_cast<double>(left.size());
    const double n2 = static_cast<double>(right.size());
    return n1 * n2 / ((n1 + n2) * (n1 + n2)) * sum;
}

ScreeningResult screen_candidates(const TimeSeries& series, const ScreeningConfig& config) {
    const std::size_t n = series.size();
    const std::size_t h = config.half_window;
    if (h == 0) {
        throw ConfigError("screening half-window must be at least 1");
    }
    ScreeningResult result;
    if (n < 2 * h) {
        result.warning = "series shorter than the screening window; no candidates";
        return result;
    }

    const std::size_t first = h;
    const std::size_t last = n - h;
    std::vector<double> stat(last - first + 1);
    for (std::size_t c = first; c <= last; ++c) {
        stat[c - first] = cvm_statistic(series, c, h);
    }
    for (std::size_t c = first; c <= last; ++c) {
        const double s = stat[c - first];
        const std::size_t lo = std::max(first, c - h);
        const std::size_t hi = std::min(last, c + h);
        bool keep = true;
        for (std::size_t w = lo; w <= hi && keep; ++w) {
            const double other = stat[w - first];
            keep = w < c ? s > other : s >= other;
        }
        if (keep) {
            result.candidates.push_back(c);
        }
    }
    return result;
}

std::vector<Segmentation> nmcd_plus(const TimeSeries& series, const ScreeningConfig& config,
                                    const CostModel& model, std::size_t max_cpts) {
    const auto screened = screen_candidates(series, config);
    return segment_neighbourhood(model, max_cpts, screened.candidates, model.default_min_seg_len());
}

}  // namespace npcpt
