#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace npcpt {

/// Ordered univariate observations plus their order statistics.
///
/// Immutable after construction. Non-finite observations are rejected with
/// DataError, as is an empty input.
class TimeSeries {
public:
    explicit TimeSeries(std::vector<double> values);

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    std::span<const double> sorted_values() const noexcept { return sorted_; }
    double operator[](std::size_t i) const { return values_[i]; }

    /// Mean of the observations with 0-based indices [begin, end).
    double mean(std::size_t begin, std::size_t end) const;

private:
    std::vector<double> values_;
    std::vector<double> sorted_;
};

// Range arguments below use the half-open 0-based convention [begin, end),
// i.e. the segment x_{begin+1..end} in 1-based changepoint notation.

/// Empirical CDF of x_{begin+1..end} at t, with ties counted half.
/// Throws std::domain_error for an empty or out-of-bounds range.
double empirical_cdf_at(const TimeSeries& series, std::size_t begin, std::size_t end, double t);

/// Segment log-likelihood len * [F log F + (1-F) log(1-F)], with 0 log 0 = 0.
/// Always lies in [-len * log 2, 0].
double seg_loglik_at(const TimeSeries& series, std::size_t begin, std::size_t end, double t);

/// Binomial log-likelihood term for a segment of `length` points whose
/// empirical CDF equals `cdf`.
double binomial_loglik(double length, double cdf);

}  // namespace npcpt
