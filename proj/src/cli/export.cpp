#include "npcpt/cli/export.hpp"

#include "npcpt/cli/csv_io.hpp"
#include "npcpt/screening.hpp"

#include <sstream>

namespace npcpt::cli {

std::string method_label(const CostModel& model) {
    switch (model.kind()) {
        case CostKind::NonparametricQuantile:
            return "np-pelt+";
        case CostKind::NonparametricFull:
            return "np-pelt";
        case CostKind::PiecewiseLinear:
            return "linear-pelt";
    }
    return "unknown";
}

nlohmann::json segmentation_json(const TimeSeries& series, const CostModel& model,
                                 const Segmentation& segmentation, std::optional<double> penalty,
                                 const std::optional<ZoneConfig>& zones) {
    nlohmann::json doc;
    doc["n"] = series.size();
    doc["method"] = method_label(model);
    if (model.grid()) {
        doc["K"] = model.grid()->k;
    }
    if (penalty) {
        doc["penalty"] = *penalty;
    }
    doc["changepoints"] = segmentation.changepoints;
    doc["total_cost"] = segmentation.total_cost;

    std::vector<Zone> labels;
    if (zones) {
        labels = annotate_zones(segmentation, series, *zones);
    }
    nlohmann::json segments = nlohmann::json::array();
    std::size_t start = 0;
    for (std::size_t i = 0; i <= segmentation.count(); ++i) {
        const std::size_t end = i < segmentation.count() ? segmentation.changepoints[i] : series.size();
        nlohmann::json seg{{"start", start},
                           {"end", end},
                           {"mean", series.mean(start, end)},
                           {"cost", model.cost(start, end)}};
        if (zones) {
            seg["zone"] = std::string(to_string(labels[i]));
        }
        segments.push_back(std::move(seg));
        start = end;
    }
    doc["segments"] = std::move(segments);
    if (segmentation.warning) {
        doc["warning"] = *segmentation.warning;
    }
    return doc;
}

nlohmann::json crops_json(const TimeSeries& series, const CostModel& model, const PenaltyPath& path,
                          const std::optional<ZoneConfig>& zones) {
    nlohmann::json doc;
    doc["n"] = series.size();
    doc["method"] = method_label(model);
    if (model.grid()) {
        doc["K"] = model.grid()->k;
    }
    doc["xi_min"] = path.xi_min;
    doc["xi_max"] = path.xi_max;
    doc["pelt_calls"] = path.pelt_calls;

    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : path.entries) {
        auto seg = segmentation_json(series, model, e.segmentation, std::nullopt, zones);
        seg["penalty_interval"] = {e.penalty_lo, e.penalty_hi};
        entries.push_back(std::move(seg));
    }
    doc["path"] = std::move(entries);

    const auto curve = elbow_curve(path);
    nlohmann::json elbow = nlohmann::json::array();
    for (const auto& p : curve) {
        elbow.push_back({{"m", p.m}, {"cost", p.cost}});
    }
    doc["elbow"] = std::move(elbow);
    const auto suggestion = suggest_elbow(curve);
    doc["suggested_m"] = suggestion ? nlohmann::json(*suggestion) : nlohmann::json(nullptr);
    return doc;
}

std::string elbow_csv(const PenaltyPath& path) {
    std::ostringstream out;
    out << "m,cost\n";
    for (const auto& p : elbow_curve(path)) {
        out << p.m << ',' << format_double(p.cost) << '\n';
    }
    return out.str();
}

std::string bench_csv(const BenchReport& report) {
    std::ostringstream out;
    out << "rep,seed,true_positive,false_positive,detected,seconds\n";
    for (const auto& r : report.replications) {
        out << r.index << ',' << r.seed << ',' << format_double(r.rates.true_positive) << ','
            << format_double(r.rates.false_positive) << ',' << r.detected << ','
            << format_double(r.seconds) << '\n';
    }
    return out.str();
}

nlohmann::json bench_summary_json(const BenchReport& report) {
    auto summary = [](const Summary& s) { return nlohmann::json{{"mean", s.mean}, {"sd", s.sd}}; };
    nlohmann::json params{{"max_cpts", report.params.max_cpts},
                          {"tolerance", report.params.tolerance}};
    const std::size_t n = report.spec.n;
    params["penalty"] = report.params.penalty.value_or(default_penalty(n));
    if (report.method == Method::NpPeltQuantile) {
        params["K"] = report.params.k.value_or(default_quantile_count(n));
    }
    if (report.method == Method::NmcdPlus) {
        params["half_window"] =
            report.params.half_window.value_or(ScreeningConfig::defaults_for(n).half_window);
    }
    return nlohmann::json{
        {"model", report.spec.model_id},
        {"n", n},
        {"error", std::string(to_string(report.spec.error_dist))},
        {"sigma", report.spec.sigma},
        {"seed", report.spec.seed},
        {"method", std::string(to_string(report.method))},
        {"params", params},
        {"reps", report.replications.size()},
        {"true_positive", summary(report.true_positive)},
        {"false_positive", summary(report.false_positive)},
        {"seconds", summary(report.seconds)},
    };
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace npcpt::cli
