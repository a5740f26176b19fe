#pragma once

#include "npcpt/cli/zones.hpp"
#include "npcpt/cost_model.hpp"
#include "npcpt/crops.hpp"
#include "npcpt/search.hpp"
#include "npcpt/simbench.hpp"
#include "npcpt/time_series.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace npcpt::cli {

/// Method label written to output files ("np-pelt+", "np-pelt", "linear-pelt").
std::string method_label(const CostModel& model);

/// {n, penalty, changepoints, segments: [{start, end, mean, cost, zone?}],
///  total_cost, method, K?}. Segments use 0-based half-open [start, end).
/// Pass `penalty` for single-penalty runs; path entries set penalty_interval
/// instead via crops_json().
nlohmann::json segmentation_json(const TimeSeries& series, const CostModel& model,
                                 const Segmentation& segmentation, std::optional<double> penalty,
                                 const std::optional<ZoneConfig>& zones);

/// Full penalty path with elbow curve and suggested changepoint count.
nlohmann::json crops_json(const TimeSeries& series, const CostModel& model, const PenaltyPath& path,
                          const std::optional<ZoneConfig>& zones);

/// `m,cost` rows.
std::string elbow_csv(const PenaltyPath& path);

/// One row per replication: rep,seed,true_positive,false_positive,detected,seconds.
std::string bench_csv(const BenchReport& report);
nlohmann::json bench_summary_json(const BenchReport& report);

/// Serialised form shared by every JSON artifact: sorted keys, 2-space indent,
/// trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace npcpt::cli
