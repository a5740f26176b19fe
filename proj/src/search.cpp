#include "npcpt/search.hpp"

#include "npcpt/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace npcpt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRelativeTie = 1e-10;

void check_penalty(double penalty) {
    if (!(penalty >= 0.0) || !std::isfinite(penalty)) {
        throw ConfigError("penalty must be a finite nonnegative number");
    }
}

void check_min_seg_len(std::size_t min_seg_len) {
    if (min_seg_len < 1) {
        throw ConfigError("min_seg_len must be at least 1");
    }
}

Segmentation too_short(const CostModel& model, std::size_t min_seg_len) {
    Segmentation seg;
    seg.total_cost = model.cost(0, model.size());
    seg.warning = "series length " + std::to_string(model.size()) +
                  " is below min_seg_len " + std::to_string(min_seg_len) +
                  "; returning the no-changepoint segmentation";
    return seg;
}

std::vector<std::size_t> backtrack(const std::vector<std::size_t>& last, std::size_t n) {
    std::vector<std::size_t> cps;
    for (std::size_t v = last[n]; v > 0; v = last[v]) {
        cps.push_back(v);
    }
    std::reverse(cps.begin(), cps.end());
    return cps;
}

// Shared recursion for pelt() and optimal_partitioning(). f[v] holds the exact
// minimum over candidates; last[v] the smallest candidate within the tie slack.
PeltResult solve_penalized(const CostModel& model, double penalty, std::size_t min_seg_len,
                           bool prune) {
    check_penalty(penalty);
    check_min_seg_len(min_seg_len);
    const std::size_t n = model.size();
    PeltResult result;
    if (n < min_seg_len) {
        result.segmentation = too_short(model, min_seg_len);
        return result;
    }

    const double tie = tie_tolerance(model, penalty);
    const double prune_slack = 2.0 * tie;

    std::vector<double> f(n + 1, kInf);
    std::vector<std::size_t> last(n + 1, 0);
    f[0] = 0.0;

    struct Candidate {
        std::size_t pos;
        std::size_t drop_at;  // step at which the candidate leaves the set
    };
    constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();
    std::vector<Candidate> active;
    std::vector<double> values;

    result.trace.candidate_set_sizes.reserve(n);
    for (std::size_t v = 1; v <= n; ++v) {
        if (prune) {
            const auto before = active.size();
            std::erase_if(active, [v](const Candidate& c) { return c.drop_at <= v; });
            result.trace.pruned += before - active.size();
        }
        if (v >= min_seg_len) {
            const std::size_t u = v - min_seg_len;
            if (u == 0 || u >= min_seg_len) {
                active.push_back({u, kNever});
            }
        }
        result.trace.candidate_set_sizes.push_back(active.size());
        if (active.empty()) {
            continue;
        }

        values.resize(active.size());
        double best = kInf;
        for (std::size_t i = 0; i < active.size(); ++i) {
            const std::size_t u = active[i].pos;
            values[i] = f[u] + model.cost_unchecked(u, v) + penalty;
            best = std::min(best, values[i]);
        }
        for (std::size_t i = 0; i < active.size(); ++i) {
            if (values[i] <= best + tie) {
                last[v] = active[i].pos;
                break;
            }
        }
        f[v] = best;

        if (prune) {
            // f(u) + cost(u, v) > f(v) means u can never beat v once v is a
            // feasible last changepoint, i.e. from step v + min_seg_len on.
            for (std::size_t i = 0; i < active.size(); ++i) {
                if (active[i].drop_at == kNever && values[i] - penalty > best + prune_slack) {
                    active[i].drop_at = v + min_seg_len;
                }
            }
        }
    }

    result.trace.f_values = f;
    result.segmentation.changepoints = backtrack(last, n);
    result.segmentation.total_cost = segmentation_cost(model, result.segmentation.changepoints);
    return result;
}

}  // namespace

double segmentation_cost(const CostModel& model, std::span<const std::size_t> changepoints) {
    double total = 0.0;
    std::size_t start = 0;
    for (const std::size_t cp : changepoints) {
        total += model.cost(start, cp);
        start = cp;
    }
    return total + model.cost(start, model.size());
}

double tie_tolerance(const CostModel& model, double penalty) {
    const double scale = model.cost(0, model.size()) + penalty;
    return kRelativeTie * std::max(1.0, scale);
}

PeltResult pelt(const CostModel& model, double penalty, std::size_t min_seg_len) {
    return solve_penalized(model, penalty, min_seg_len, true);
}

PeltResult pelt(const CostModel& model, double penalty) {
    return pelt(model, penalty, model.default_min_seg_len());
}

Segmentation optimal_partitioning(const CostModel& model, double penalty, std::size_t min_seg_len) {
    return solve_penalized(model, penalty, min_seg_len, false).segmentation;
}

Segmentation optimal_partitioning(const CostModel& model, double penalty) {
    return optimal_partitioning(model, penalty, model.default_min_seg_len());
}

std::vector<Segmentation> segment_neighbourhood(const CostModel& model, std::size_t max_cpts,
                                                std::size_t min_seg_len) {
    std::vector<std::size_t> all;
    all.reserve(model.size());
    for (std::size_t i = 1; i < model.size(); ++i) {
        all.push_back(i);
    }
    return segment_neighbourhood(model, max_cpts, all, min_seg_len);
}

std::vector<Segmentation> segment_neighbourhood(const CostModel& model, std::size_t max_cpts,
                                                std::span<const std::size_t> candidates,
                                                std::size_t min_seg_len) {
    check_min_seg_len(min_seg_len);
    const std::size_t n = model.size();
    if (max_cpts >= n) {
        throw ConfigError("max_cpts must be below n (max_cpts=" + std::to_string(max_cpts) +
                          ", n=" + std::to_string(n) + ")");
    }
    std::vector<std::size_t> pos;
    pos.reserve(candidates.size() + 2);
    pos.push_back(0);
    for (const std::size_t c : candidates) {
        if (c == 0 || c >= n || c <= pos.back()) {
            throw ConfigError("candidates must be strictly increasing within [1, n-1]");
        }
        pos.push_back(c);
    }
    pos.push_back(n);
    const std::size_t p = pos.size();

    // cost[i * p + j] for boundary pairs i < j; infinite when too short.
    std::vector<double> cost(p * p, kInf);
    for (std::size_t i = 0; i + 1 < p; ++i) {
        for (std::size_t j = i + 1; j < p; ++j) {
            if (pos[j] - pos[i] >= min_seg_len) {
                cost[i * p + j] = model.cost_unchecked(pos[i], pos[j]);
            }
        }
    }

    // best[j] for the current m: optimum for x_{1..pos[j]} with m changepoints.
    std::vector<double> best(p, kInf);
    std::vector<std::vector<std::size_t>> arg;  // arg[m][j], m >= 1
    for (std::size_t j = 1; j < p; ++j) {
        best[j] = cost[j];
    }

    std::vector<Segmentation> out;
    auto emit = [&](std::size_t m) {
        Segmentation seg;
        std::size_t j = p - 1;
        for (std::size_t level = m; level > 0; --level) {
            j = arg[level - 1][j];
            seg.changepoints.push_back(pos[j]);
        }
        std::reverse(seg.changepoints.begin(), seg.changepoints.end());
        seg.total_cost = segmentation_cost(model, seg.changepoints);
        out.push_back(std::move(seg));
    };

    if (best[p - 1] == kInf) {
        return out;
    }
    emit(0);
    for (std::size_t m = 1; m <= max_cpts; ++m) {
        std::vector<double> next(p, kInf);
        std::vector<std::size_t> choice(p, 0);
        for (std::size_t j = m + 1; j < p; ++j) {
            for (std::size_t i = m; i < j; ++i) {
                if (best[i] == kInf) {
                    continue;
                }
                const double value = best[i] + cost[i * p + j];
                if (value < next[j]) {
                    next[j] = value;
                    choice[j] = i;
                }
            }
        }
        best = std::move(next);
        arg.push_back(std::move(choice));
        if (best[p - 1] == kInf) {
            break;
        }
        emit(m);
    }
    return out;
}

Segmentation sic_select(std::span<const Segmentation> by_count, double penalty) {
    if (by_count.empty()) {
        throw ConfigError("sic_select: empty segmentation sequence");
    }
    const Segmentation* best = nullptr;
    for (const auto& seg : by_count) {
        if (best == nullptr || seg.penalized_cost(penalty) < best->penalized_cost(penalty) ||
            (seg.penalized_cost(penalty) == best->penalized_cost(penalty) &&
             seg.count() < best->count())) {
            best = &seg;
        }
    }
    return *best;
}

Segmentation brute_force(const CostModel& model, double penalty, std::size_t min_seg_len) {
    check_penalty(penalty);
    check_min_seg_len(min_seg_len);
    const std::size_t n = model.size();
    if (n > kBruteForceMaxN) {
        throw ConfigError("brute_force refuses n > " + std::to_string(kBruteForceMaxN));
    }
    if (n < min_seg_len) {
        return too_short(model, min_seg_len);
    }

    struct Entry {
        std::vector<std::size_t> cps;
        double value;
    };
    std::vector<Entry> feasible;
    const std::size_t masks = std::size_t{1} << (n - 1);
    for (std::size_t mask = 0; mask < masks; ++mask) {
        std::vector<std::size_t> cps;
        for (std::size_t b = 0; b + 1 < n; ++b) {
            if (mask & (std::size_t{1} << b)) {
                cps.push_back(b + 1);
            }
        }
        bool ok = true;
        std::size_t start = 0;
        for (const std::size_t cp : cps) {
            ok = ok && cp - start >= min_seg_len;
            start = cp;
        }
        if (!ok || n - start < min_seg_len) {
            continue;
        }
        const double value = segmentation_cost(model, cps) + penalty * static_cast<double>(cps.size());
        feasible.push_back({std::move(cps), value});
    }

    double lowest = kInf;
    for (const auto& e : feasible) {
        lowest = std::min(lowest, e.value);
    }
    const double tie = tie_tolerance(model, penalty);

    // (tau_m, ..., tau_1, 0) compared lexicographically.
    auto reversed_less = [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
        auto key = [](const std::vector<std::size_t>& v) {
            std::vector<std::size_t> k(v.rbegin(), v.rend());
            k.push_back(0);
            return k;
        };
        return key(a) < key(b);
    };
    const Entry* chosen = nullptr;
    for (const auto& e : feasible) {
        if (e.value <= lowest + tie && (chosen == nullptr || reversed_less(e.cps, chosen->cps))) {
            chosen = &e;
        }
    }
    Segmentation seg;
    seg.changepoints = chosen->cps;
    seg.total_cost = segmentation_cost(model, seg.changepoints);
    return seg;
}

}  // namespace npcpt
