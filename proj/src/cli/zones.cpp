#include "npcpt/cli/zones.hpp"

#include "npcpt/error.hpp"

#include <cmath>

namespace npcpt::cli {

std::string_view to_string(Zone zone) {
    switch (zone) {
        case Zone::Peak:
            return "peak";
        case Zone::Anaerobic:
            return "anaerobic";
        case Zone::Aerobic:
            return "aerobic";
        case Zone::Recovery:
            return "recovery";
    }
    return "unknown";
}

void ZoneConfig::validate() const {
    if (!(max_hr > 0.0) || !std::isfinite(max_hr)) {
        throw ConfigError("max heart rate must be positive");
    }
    const auto& t = thresholds;
    if (!(t[0] < 1.0 && t[0] > t[1] && t[1] > t[2] && t[2] > 0.0)) {
        throw ConfigError("zone thresholds must be strictly descending within (0, 1)");
    }
}

Zone classify_zone(double mean_hr, const ZoneConfig& zones) {
    zones.validate();
    if (mean_hr >= zones.thresholds[0] * zones.max_hr) {
        return Zone::Peak;
    }
    if (mean_hr >= zones.thresholds[1] * zones.max_hr) {
        return Zone::Anaerobic;
    }
    if (mean_hr >= zones.thresholds[2] * zones.max_hr) {
        return Zone::Aerobic;
    }
    return Zone::Recovery;
}

std::vector<Zone> annotate_zones(const Segmentation& segmentation, const TimeSeries& series,
                                 const ZoneConfig& zones) {
    zones.validate();
    std::vector<Zone> labels;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= segmentation.count(); ++i) {
        const std::size_t end = i < segmentation.count() ? segmentation.changepoints[i] : series.size();
        labels.push_back(classify_zone(series.mean(start, end), zones));
        start = end;
    }
    return labels;
}

}  // namespace npcpt::cli
