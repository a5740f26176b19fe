#include "npcpt/error.hpp"
#include "npcpt/search.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace npcpt;

namespace {

std::vector<double> step_series() {
    std::vector<double> x(50, 0.0);
    x.insert(x.end(), 50, 10.0);
    return x;
}

// Best segmentation with at most two changepoints, costs evaluated from the
// raw data through the test oracle.
std::vector<std::size_t> oracle_best_upto_two(const TimeSeries& s, const QuantileGrid& grid,
                                              double penalty) {
    const std::size_t n = s.size();
    auto c = [&](std::size_t u, std::size_t v) {
        return npcpt::testing::oracle_quantile_cost(s, grid, u, v);
    };
    std::vector<std::size_t> best;
    double best_value = c(0, n);
    for (std::size_t a = 1; a < n; ++a) {
        const double one = c(0, a) + c(a, n) + penalty;
        if (one < best_value - 1e-9) {
            best_value = one;
            best = {a};
        }
        for (std::size_t b = a + 1; b < n; ++b) {
            const double two = c(0, a) + c(a, b) + c(b, n) + 2.0 * penalty;
            if (two < best_value - 1e-9) {
                best_value = two;
                best = {a, b};
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("constant series yields no changepoints") {
    TimeSeries s(std::vector<double>(100, 5.0));
    const auto model = CostModel::nonparametric_quantile(s, default_quantile_count(100));
    for (double penalty : {0.5, 3.0 * std::log(100.0), 50.0}) {
        CHECK(pelt(model, penalty).segmentation.count() == 0);
    }
}

TEST_CASE("step series: one changepoint at 50, confirmed by exhaustive search") {
    TimeSeries s(step_series());
    const auto model = CostModel::nonparametric_quantile(s, 28);
    const double penalty = 3.0 * std::log(100.0);
    const auto oracle = oracle_best_upto_two(s, *model.grid(), penalty);
    REQUIRE(oracle == std::vector<std::size_t>{50});

    const auto fast = pelt(model, penalty);
    CHECK(fast.segmentation.changepoints == std::vector<std::size_t>{50});
    CHECK(optimal_partitioning(model, penalty).changepoints == std::vector<std::size_t>{50});
    const auto sn = segment_neighbourhood(model, 3);
    REQUIRE(sn.size() == 4);
    CHECK(sn[1].changepoints == std::vector<std::size_t>{50});
}

TEST_CASE("huge penalty suppresses every changepoint") {
    std::mt19937_64 rng(3);
    TimeSeries s(npcpt::testing::random_series(rng, 200, false));
    const auto model = CostModel::nonparametric_quantile(s, default_quantile_count(200));
    CHECK(pelt(model, 1e12).segmentation.count() == 0);
    CHECK(pelt(CostModel::piecewise_linear(s), 1e12).segmentation.count() == 0);
}

TEST_CASE("single observation") {
    TimeSeries s({4.2});
    const auto model = CostModel::nonparametric_quantile(s, 1);
    const auto seg = optimal_partitioning(model, 1.0);
    CHECK(seg.count() == 0);
    CHECK(seg.total_cost == model.cost(0, 1));
    CHECK(brute_force(model, 1.0, 1).count() == 0);
}

TEST_CASE("series shorter than min_seg_len returns a flagged empty segmentation") {
    TimeSeries s({1.0, 2.0});
    const auto model = CostModel::piecewise_linear(s);
    const auto res = pelt(model, 1.0, 5);
    CHECK(res.segmentation.count() == 0);
    CHECK(res.segmentation.warning.has_value());
}

TEST_CASE("negative or non-finite penalties are configuration errors") {
    TimeSeries s({1, 2, 3});
    const auto model = CostModel::nonparametric_quantile(s, 2);
    CHECK_THROWS_AS(pelt(model, -1.0), ConfigError);
    CHECK_THROWS_AS(optimal_partitioning(model, std::numeric_limits<double>::quiet_NaN()), ConfigError);
    CHECK_THROWS_AS(brute_force(model, -0.5, 1), ConfigError);
}

TEST_CASE("brute force on [0,0,9,9] splits in the middle") {
    TimeSeries s({0, 0, 9, 9});
    const auto model = CostModel::nonparametric_quantile(s, 4);
    CHECK(model.grid()->thresholds == std::vector<double>{0, 0, 9, 9});
    const auto seg = brute_force(model, 0.1, 1);
    CHECK(seg.changepoints == std::vector<std::size_t>{2});
    CHECK(pelt(model, 0.1).segmentation.changepoints == std::vector<std::size_t>{2});
}

TEST_CASE("brute force refuses long series") {
    TimeSeries s(std::vector<double>(17, 1.0));
    CHECK_THROWS_AS(brute_force(CostModel::nonparametric_quantile(s, 3), 1.0, 1), ConfigError);
}

TEST_CASE("pelt matches brute force and optimal partitioning on small random series") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::size_t> len(1, 12);
    std::uniform_real_distribution<double> pen(0.0, 6.0);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = len(rng);
        TimeSeries s(npcpt::testing::random_series(rng, n, trial % 2 == 0));
        const CostModel models[] = {CostModel::nonparametric_quantile(s, default_quantile_count(n)),
                                    CostModel::nonparametric_full(s), CostModel::piecewise_linear(s)};
        for (const auto& model : models) {
            const double penalty = pen(rng);
            const std::size_t msl = model.default_min_seg_len();
            const auto exact = brute_force(model, penalty, msl);
            const auto fast = pelt(model, penalty, msl).segmentation;
            CHECK(fast.changepoints == exact.changepoints);
            CHECK(npcpt::testing::close_rel(fast.total_cost, exact.total_cost, 1e-9));
            CHECK(optimal_partitioning(model, penalty, msl).changepoints == exact.changepoints);
        }
    }
}

TEST_CASE("min_seg_len is honoured and pruning stays lossless") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        TimeSeries s(npcpt::testing::random_series(rng, 80, trial % 2 == 1));
        const auto model = CostModel::nonparametric_quantile(s, 12);
        for (std::size_t msl : {2u, 3u, 7u}) {
            const auto fast = pelt(model, 2.0, msl).segmentation;
            const auto slow = optimal_partitioning(model, 2.0, msl);
            CHECK(fast.changepoints == slow.changepoints);
            std::size_t prev = 0;
            for (const auto cp : fast.changepoints) {
                CHECK(cp - prev >= msl);
                prev = cp;
            }
            CHECK(80 - prev >= msl);
        }
    }
    TimeSeries tiny({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
    const auto lin = CostModel::piecewise_linear(tiny);
    for (std::size_t msl : {2u, 3u, 4u}) {
        for (double penalty : {0.0, 0.5}) {
            CHECK(pelt(lin, penalty, msl).segmentation.changepoints ==
                  brute_force(lin, penalty, msl).changepoints);
        }
    }
}

TEST_CASE("solver trace is consistent and shows pruning") {
    TimeSeries s(step_series());
    const auto model = CostModel::nonparametric_quantile(s, 28);
    const double penalty = 3.0 * std::log(100.0);
    const auto res = pelt(model, penalty);
    CHECK(res.trace.pruned > 0);
    REQUIRE(res.trace.f_values.size() == 101);
    REQUIRE(res.trace.candidate_set_sizes.size() == 100);
    // f(n) is the optimal penalized cost with one penalty per segment.
    const auto& seg = res.segmentation;
    CHECK(res.trace.f_values[100] ==
          doctest::Approx(seg.total_cost + penalty * static_cast<double>(seg.count() + 1)));
    for (std::size_t v = 1; v <= 100; ++v) {
        CHECK(std::isfinite(res.trace.f_values[v]));
        CHECK(res.trace.candidate_set_sizes[v - 1] <= v);
    }
    CHECK(res.trace.candidate_set_sizes.back() < 100);
}

TEST_CASE("changepoint count is non-increasing in the penalty") {
    std::mt19937_64 rng(12);
    TimeSeries s(npcpt::testing::random_series(rng, 300, false));
    const auto model = CostModel::nonparametric_quantile(s, default_quantile_count(300));
    std::size_t prev = std::numeric_limits<std::size_t>::max();
    for (double penalty = 0.0; penalty <= 200.0; penalty += 4.0) {
        const auto m = pelt(model, penalty).segmentation.count();
        CHECK(m <= prev);
        prev = m;
    }
}

TEST_CASE("segment neighbourhood: costs fall with m and restriction only hurts") {
    std::mt19937_64 rng(31);
    TimeSeries s(npcpt::testing::random_series(rng, 60, false));
    const auto model = CostModel::nonparametric_full(s);
    const auto sn = segment_neighbourhood(model, 6);
    REQUIRE(sn.size() == 7);
    CHECK(sn[0].changepoints.empty());
    CHECK(sn[0].total_cost == doctest::Approx(model.cost(0, 60)));
    for (std::size_t m = 0; m < sn.size(); ++m) {
        CHECK(sn[m].count() == m);
        if (m > 0) {
            CHECK(sn[m].total_cost <= sn[m - 1].total_cost + 1e-12);
        }
    }
    const std::vector<std::size_t> some{10, 20, 30, 40, 50};
    const auto restricted = segment_neighbourhood(model, 6, some);
    CHECK(restricted.size() == 6);  // only five candidate positions
    for (std::size_t m = 0; m < restricted.size(); ++m) {
        CHECK(restricted[m].total_cost >= sn[m].total_cost - 1e-12);
    }
    CHECK_THROWS_AS(segment_neighbourhood(model, 60), ConfigError);
}

TEST_CASE("segment neighbourhood agrees with exhaustive search per m") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        TimeSeries s(npcpt::testing::random_series(rng, 10, trial % 2 == 0));
        const auto model = CostModel::nonparametric_quantile(s, 5);
        const auto sn = segment_neighbourhood(model, 3);
        std::vector<double> best(4, std::numeric_limits<double>::infinity());
        for (std::size_t mask = 0; mask < (1u << 9); ++mask) {
            std::vector<std::size_t> cps;
            for (std::size_t b = 0; b < 9; ++b) {
                if (mask & (1u << b)) cps.push_back(b + 1);
            }
            if (cps.size() <= 3) {
                best[cps.size()] = std::min(best[cps.size()], segmentation_cost(model, cps));
            }
        }
        for (std::size_t m = 0; m <= 3; ++m) {
            CHECK(sn[m].total_cost == doctest::Approx(best[m]).epsilon(1e-12));
        }
    }
}

TEST_CASE("sic_select examples") {
    std::vector<Segmentation> by_count(4);
    const double costs[] = {10.0, 4.0, 3.5, 3.4};
    for (std::size_t m = 0; m < 4; ++m) {
        by_count[m].total_cost = costs[m];
        for (std::size_t i = 0; i < m; ++i) by_count[m].changepoints.push_back(10 * (i + 1));
    }
    CHECK(sic_select(by_count, 1.0).count() == 1);
    CHECK(sic_select(by_count, 0.0).count() == 3);
    CHECK(sic_select(by_count, 1e9).count() == 0);
    // 10 vs 4 + 6: tie goes to fewer changepoints.
    CHECK(sic_select(by_count, 6.0).count() == 0);
    CHECK_THROWS_AS(sic_select(std::vector<Segmentation>{}, 1.0), ConfigError);
}

TEST_CASE("candidate set grows sublinearly when changepoints scale with n") {
    auto mean_candidates = [](std::size_t n) {
        std::mt19937_64 rng(n);
        std::normal_distribution<double> noise(0.0, 1.0);
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = ((i / 50) % 2 == 0 ? 0.0 : 2.5) + noise(rng);
        }
        TimeSeries s(x);
        const auto model = CostModel::nonparametric_quantile(s, default_quantile_count(n));
        const auto res = pelt(model, 3.0 * std::log(static_cast<double>(n)));
        double total = 0.0;
        for (const auto c : res.trace.candidate_set_sizes) total += static_cast<double>(c);
        return total / static_cast<double>(n);
    };
    const double small = mean_candidates(1000);
    const double large = mean_candidates(4000);
    CHECK(large < 2.0 * small);  // linear growth would give about 4x
}
