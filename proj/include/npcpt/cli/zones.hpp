#pragma once

#include "npcpt/search.hpp"
#include "npcpt/time_series.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace npcpt::cli {

enum class Zone { Peak, Anaerobic, Aerobic, Recovery };

std::string_view to_string(Zone zone);

/// Heart-rate training zones as fractions of the runner's maximum heart rate.
struct ZoneConfig {
    double max_hr = 0.0;
    std::array<double, 3> thresholds{0.90, 0.80, 0.70};  // peak, anaerobic, aerobic lower bounds

    /// Throws ConfigError unless max_hr > 0 and 1 > thresholds[0] > thresholds[1] > thresholds[2] > 0.
    void validate() const;
};

/// Zone containing `mean_hr`; each lower boundary belongs to the higher zone.
Zone classify_zone(double mean_hr, const ZoneConfig& zones);

/// One label per segment of `segmentation`, from the segment's mean value.
std::vector<Zone> annotate_zones(const Segmentation& segmentation, const TimeSeries& series,
                                 const ZoneConfig& zones);

}  // namespace npcpt::cli
