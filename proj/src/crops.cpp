#include "npcpt/crops.hpp"

#include "npcpt/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace npcpt {

namespace {

bool same_solution(const Segmentation& a, const Segmentation& b) {
    const double scale = std::max({1.0, std::abs(a.total_cost), std::abs(b.total_cost)});
    return a.count() == b.count() && std::abs(a.total_cost - b.total_cost) <= 1e-9 * scale;
}

double crossing(const Segmentation& more, const Segmentation& fewer) {
    return (fewer.total_cost - more.total_cost) /
           static_cast<double>(more.count() - fewer.count());
}

}  // namespace

const PathEntry& PenaltyPath::covering(double penalty) const {
    for (const auto& e : entries) {
        if (penalty <= e.penalty_hi) {
            return e;
        }
    }
    return entries.back();
}

PenaltyPath crops_sweep(const CostModel& model, double xi_min, double xi_max,
                        std::size_t min_seg_len) {
    if (!(xi_min >= 0.0)) {
        throw ConfigError("crops: xi_min must be nonnegative");
    }
    if (!(xi_min < xi_max) || !std::isfinite(xi_max)) {
        throw ConfigError("crops: require xi_min < xi_max");
    }

    PenaltyPath path;
    path.xi_min = xi_min;
    path.xi_max = xi_max;
    auto run = [&](double penalty) {
        ++path.pelt_calls;
        return pelt(model, penalty, min_seg_len).segmentation;
    };

    std::vector<Segmentation> found;
    found.push_back(run(xi_min));
    found.push_back(run(xi_max));

    // `more` is optimal at a lower penalty than `fewer`.
    std::function<void(const Segmentation&, const Segmentation&)> explore =
        [&](const Segmentation& more, const Segmentation& fewer) {
            if (more.count() <= fewer.count() + 1 || same_solution(more, fewer)) {
                return;
            }
            Segmentation mid = run(crossing(more, fewer));
            if (mid.count() < more.count() && mid.count() > fewer.count()) {
                found.push_back(mid);
                explore(more, mid);
                explore(mid, fewer);
            }
        };
    const Segmentation lo = found[0];
    const Segmentation hi = found[1];
    explore(lo, hi);

    // Lower convex hull of (m, cost), walked from most to fewest changepoints.
    std::sort(found.begin(), found.end(), [](const Segmentation& a, const Segmentation& b) {
        return a.count() != b.count() ? a.count() > b.count() : a.total_cost < b.total_cost;
    });
    std::vector<Segmentation> hull;
    for (auto& seg : found) {
        if (!hull.empty() && (hull.back().count() == seg.count() || same_solution(hull.back(), seg))) {
            continue;
        }
        while (hull.size() >= 2 &&
               crossing(hull[hull.size() - 2], hull.back()) >= crossing(hull.back(), seg)) {
            hull.pop_back();
        }
        hull.push_back(std::move(seg));
    }

    double lower = xi_min;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        double upper = i + 1 < hull.size() ? crossing(hull[i], hull[i + 1]) : xi_max;
        upper = std::clamp(upper, xi_min, xi_max);
        if (upper > lower || i + 1 == hull.size()) {
            path.entries.push_back({lower, std::max(upper, lower), std::move(hull[i])});
            lower = std::max(upper, lower);
        }
    }
    return path;
}

PenaltyPath crops_sweep(const CostModel& model, double xi_min, double xi_max) {
    return crops_sweep(model, xi_min, xi_max, model.default_min_seg_len());
}

std::vector<ElbowPoint> elbow_curve(const PenaltyPath& path) {
    std::vector<ElbowPoint> points;
    for (const auto& e : path.entries) {
        points.push_back({e.segmentation.count(), e.segmentation.total_cost});
    }
    std::sort(points.begin(), points.end(), [](const ElbowPoint& a, const ElbowPoint& b) {
        return a.m != b.m ? a.m < b.m : a.cost < b.cost;
    });
    std::vector<ElbowPoint> curve;
    for (const auto& p : points) {
        if (curve.empty() || (p.m != curve.back().m && p.cost < curve.back().cost)) {
            curve.push_back(p);
        }
    }
    return curve;
}

std::optional<std::size_t> suggest_elbow(std::span<const ElbowPoint> curve) {
    if (curve.size() < 3) {
        return std::nullopt;
    }
    const double range = curve.front().cost - curve.back().cost;
    if (!(range > 0.0)) {
        return std::nullopt;
    }
    auto slope = [&](std::size_t i) {  // cost decrease per changepoint from i to i+1
        return (curve[i].cost - curve[i + 1].cost) /
               static_cast<double>(curve[i + 1].m - curve[i].m);
    };
    std::optional<std::size_t> best;
    double best_bend = 0.0;
    for (std::size_t i = 1; i + 1 < curve.size(); ++i) {
        const double bend = (slope(i - 1) - slope(i)) / range;
        if (!best || bend > best_bend) {
            best = curve[i].m;
            best_bend = bend;
        }
    }
    return best;
}

}  // namespace npcpt
