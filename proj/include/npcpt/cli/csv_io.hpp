#pragma once

#include "npcpt/time_series.hpp"

#include <filesystem>
#include <string>

namespace npcpt::cli {

enum class HeaderMode { Auto, Present, Absent };

/// Reads one numeric column of a comma-separated file, preserving row order.
///
/// `column` is a header name, a 0-based column index, or empty for the last
/// column of the first line. In Auto mode
/// the first line is a header when its selected cell is not numeric (or when
/// `column` names a header field). Every failure throws DataError naming the
/// offending row; nothing is skipped except trailing blank lines.
TimeSeries ingest_csv(const std::filesystem::path& path, const std::string& column = "",
                      HeaderMode header = HeaderMode::Auto);

/// Writes `series` as a single `value` column with 17 significant digits, so
/// ingest_csv reads back identical doubles.
void write_series_csv(const std::filesystem::path& path, const TimeSeries& series);

/// %.17g formatting used for every float written to CSV.
std::string format_double(double value);

}  // namespace npcpt::cli
