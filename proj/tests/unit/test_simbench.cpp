#include "npcpt/error.hpp"
#include "npcpt/simbench.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace npcpt;

TEST_CASE("true changepoints of the simulation models") {
    CHECK(true_changepoints(1, 1000) ==
          std::vector<std::size_t>{100, 130, 150, 230, 250, 400, 440, 650, 760, 780, 810});
    CHECK(true_changepoints(2, 1000) == std::vector<std::size_t>{200, 400, 650, 850});
    CHECK(true_changepoints(3, 1000) == std::vector<std::size_t>{200, 500, 750});
    CHECK(true_changepoints(1, 500).front() == 50);
    CHECK_THROWS_AS(true_changepoints(4, 1000), ConfigError);
    CHECK_THROWS_AS(true_changepoints(1, 20), ConfigError);  // 13% and 15% collide
}

TEST_CASE("generation is deterministic in the seed") {
    for (int model = 1; model <= 3; ++model) {
        SimSpec spec;
        spec.model_id = model;
        spec.n = 400;
        spec.seed = 99;
        const auto a = generate(spec);
        const auto b = generate(spec);
        CHECK(std::vector<double>(a.series.values().begin(), a.series.values().end()) ==
              std::vector<double>(b.series.values().begin(), b.series.values().end()));
        CHECK(a.changepoints == true_changepoints(model, 400));
        spec.seed = 100;
        const auto c = generate(spec);
        CHECK(c.series[0] != a.series[0]);
    }
}

TEST_CASE("model 1 mean follows the step profile") {
    SimSpec spec;
    spec.model_id = 1;
    spec.n = 100000;
    spec.sigma = 1.0;
    spec.seed = 1;
    const auto data = generate(spec);
    // Segment (100000*0.40, 100000*0.44] sits at level 2.01-2.51+1.51-2.01+2.51-2.11 = -0.6.
    CHECK(std::abs(data.series.mean(40000, 44000) + 0.6) < 0.1);
    CHECK(std::abs(data.series.mean(0, 10000)) < 0.1);
}

TEST_CASE("model 2 scale grows after the second changepoint") {
    SimSpec spec;
    spec.model_id = 2;
    spec.n = 20000;
    spec.sigma = 1.0;
    spec.seed = 3;
    const auto data = generate(spec);
    auto sd = [&](std::size_t u, std::size_t v) {
        const double m = data.series.mean(u, v);
        double ss = 0.0;
        for (std::size_t i = u; i < v; ++i) ss += (data.series[i] - m) * (data.series[i] - m);
        return std::sqrt(ss / static_cast<double>(v - u - 1));
    };
    CHECK(std::abs(sd(0, 4000) - 1.0) < 0.1);
    CHECK(std::abs(sd(8000, 13000) - 5.0) < 0.4);
    CHECK(std::abs(sd(17000, 20000) - 1.25) < 0.15);
}

TEST_CASE("standardized chi-square errors have zero mean and unit variance") {
    for (const auto dist : {ErrorDist::StdChiSq1, ErrorDist::StdChiSq3, ErrorDist::Normal}) {
        SimSpec spec;
        spec.model_id = 1;
        spec.n = 200000;
        spec.error_dist = dist;
        spec.sigma = 1.0;
        spec.seed = 17;
        const auto data = generate(spec);
        // Only the first segment, where the level is zero.
        const std::size_t len = 20000;
        const double mean = data.series.mean(0, len);
        double ss = 0.0;
        for (std::size_t i = 0; i < len; ++i) ss += (data.series[i] - mean) * (data.series[i] - mean);
        const double var = ss / static_cast<double>(len - 1);
        const double root = std::sqrt(static_cast<double>(len));
        CHECK(std::abs(mean) < 4.0 / root);
        CHECK(std::abs(var - 1.0) < 6.0 / root);
    }
}

TEST_CASE("tp_fp examples") {
    using V = std::vector<std::size_t>;
    auto r = tp_fp(V{100, 200}, V{100, 350}, 0);
    CHECK(r.true_positive == 0.5);
    CHECK(r.false_positive == 0.5);
    r = tp_fp(V{100, 200, 300}, V{100, 200, 300}, 5);
    CHECK(r.true_positive == 1.0);
    CHECK(r.false_positive == 0.0);
    r = tp_fp(V{100}, V{98}, 3);
    CHECK(r.true_positive == 1.0);
    CHECK(r.false_positive == 0.0);
    r = tp_fp(V{100}, V{98}, 0);
    CHECK(r.true_positive == 0.0);
    CHECK(r.false_positive == 1.0);
}

TEST_CASE("tp_fp matching is one-to-one and nearest first") {
    using V = std::vector<std::size_t>;
    auto r = tp_fp(V{100}, V{99, 101}, 2);
    CHECK(r.true_positive == 1.0);
    CHECK(r.false_positive == 0.5);
    r = tp_fp(V{100, 104}, V{103}, 5);
    CHECK(r.true_positive == 0.5);
    CHECK(r.false_positive == 0.0);
}

TEST_CASE("tp_fp empty sets") {
    using V = std::vector<std::size_t>;
    auto r = tp_fp(V{}, V{}, 0);
    CHECK(r.true_positive == 1.0);
    CHECK(r.true_positive_defined);
    r = tp_fp(V{}, V{5}, 0);
    CHECK(!r.true_positive_defined);
    CHECK(std::isnan(r.true_positive));
    CHECK(r.false_positive == 1.0);
    r = tp_fp(V{5}, V{}, 0);
    CHECK(r.true_positive == 0.0);
    CHECK(r.false_positive == 0.0);
}

TEST_CASE("method and distribution names") {
    for (const auto m : {Method::NpPeltQuantile, Method::NpPeltFull, Method::Nmcd, Method::NmcdPlus,
                         Method::LinearPelt}) {
        CHECK(parse_method(to_string(m)) == m);
    }
    for (const auto d : {ErrorDist::Normal, ErrorDist::StudentT3, ErrorDist::StdChiSq1,
                         ErrorDist::StdChiSq3}) {
        CHECK(parse_error_dist(to_string(d)) == d);
    }
    CHECK_THROWS_WITH_AS(parse_method("pelt"), doctest::Contains("np-pelt+"), ConfigError);
    CHECK_THROWS_AS(parse_error_dist("cauchy"), ConfigError);
}

TEST_CASE("benchmark reports are deterministic and thread-count independent") {
    SimSpec spec;
    spec.model_id = 1;
    spec.n = 500;
    spec.seed = 11;
    MethodParams params;
    params.k = 10;
    const auto a = run_benchmark(spec, Method::NpPeltQuantile, 6, params);
    params.threads = 3;
    const auto b = run_benchmark(spec, Method::NpPeltQuantile, 6, params);
    REQUIRE(a.replications.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(a.replications[i].seed == b.replications[i].seed);
        CHECK(a.replications[i].seed == replication_seed(11, i));
        CHECK(a.replications[i].rates.true_positive == b.replications[i].rates.true_positive);
        CHECK(a.replications[i].rates.false_positive == b.replications[i].rates.false_positive);
        CHECK(a.replications[i].detected == b.replications[i].detected);
        CHECK(a.replications[i].rates.true_positive >= 0.0);
        CHECK(a.replications[i].rates.true_positive <= 1.0);
    }
    CHECK(a.true_positive.mean == b.true_positive.mean);
    CHECK(a.false_positive.sd == b.false_positive.sd);
    CHECK_THROWS_AS(run_benchmark(spec, Method::NpPeltQuantile, 0, params), ConfigError);
}

TEST_CASE("worker failures surface to the caller") {
    SimSpec spec;
    spec.model_id = 1;
    spec.n = 500;
    MethodParams params;
    params.k = 0;  // invalid grid size, thrown inside the workers
    params.threads = 2;
    CHECK_THROWS_AS(run_benchmark(spec, Method::NpPeltQuantile, 4, params), ConfigError);
}

TEST_CASE("summaries") {
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    const auto s = summarize(v);
    CHECK(s.mean == 2.5);
    CHECK(s.sd == doctest::Approx(std::sqrt(5.0 / 3.0)));
    CHECK(summarize(std::vector<double>{}).mean == 0.0);
}
