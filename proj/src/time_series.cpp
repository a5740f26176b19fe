#include "npcpt/time_series.hpp"

#include "npcpt/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace npcpt {

TimeSeries::TimeSeries(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw DataError("empty series");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw DataError("non-finite observation at index " + std::to_string(i));
        }
    }
    sorted_ = values_;
    std::sort(sorted_.begin(), sorted_.end());
}

double TimeSeries::mean(std::size_t begin, std::size_t end) const {
    if (begin >= end || end > values_.size()) {
        throw std::domain_error("mean: empty or out-of-bounds range");
    }
    const double sum = std::accumulate(values_.begin() + begin, values_.begin() + end, 0.0);
    return sum / static_cast<double>(end - begin);
}

namespace {

void check_range(const TimeSeries& series, std::size_t begin, std::size_t end) {
    if (begin >= end) {
        throw std::domain_error("empty segment range");
    }
    if (end > series.size()) {
        throw std::domain_error("segment range exceeds series length");
    }
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

double empirical_cdf_at(const TimeSeries& series, std::size_t begin, std::size_t end, double t) {
    check_range(series, begin, end);
    double below = 0.0;
    double ties = 0.0;
    for (std::size_t j = begin; j < end; ++j) {
        if (series[j] < t) {
            below += 1.0;
        } else if (series[j] == t) {
            ties += 1.0;
        }
    }
    return (below + 0.5 * ties) / static_cast<double>(end - begin);
}

double binomial_loglik(double length, double cdf) {
    return length * (xlogx(cdf) + xlogx(1.0 - cdf));
}

double seg_loglik_at(const TimeSeries& series, std::size_t begin, std::size_t end, double t) {
    const double cdf = empirical_cdf_at(series, begin, end, t);
    return binomial_loglik(static_cast<double>(end - begin), cdf);
}

}  // namespace npcpt
