#include "npcpt/cli/csv_io.hpp"

#include "npcpt/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace npcpt::cli {

namespace {

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    s = s.substr(first, last - first + 1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        s = s.substr(1, s.size() - 2);
    }
    return s;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        cells.push_back(trim(cell));
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

std::optional<double> parse_number(const std::string& cell) {
    if (cell.empty()) {
        return std::nullopt;
    }
    const char* begin = cell.data();
    if (*begin == '+') {
        ++begin;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, cell.data() + cell.size(), value);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        return std::nullopt;
    }
    return value;
}

std::optional<std::size_t> parse_index(const std::string& s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(std::stoull(s));
}

}  // namespace

TimeSeries ingest_csv(const std::filesystem::path& path, const std::string& column,
                      HeaderMode header) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open '" + path.string() + "'");
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        lines.push_back(std::move(line));
    }
    while (!lines.empty() && trim(lines.back()).empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        throw DataError("empty series");
    }

    const auto index_spec = parse_index(column);
    const auto first = split(lines.front());
    bool has_header = header == HeaderMode::Present;
    if (header == HeaderMode::Auto) {
        if (column.empty()) {
            has_header = first.empty() || !parse_number(first.back());
        } else if (!index_spec) {
            has_header = true;
        } else {
            has_header = *index_spec >= first.size() || !parse_number(first[*index_spec]);
        }
    }

    std::size_t col = 0;
    if (column.empty()) {
        col = first.empty() ? 0 : first.size() - 1;
    } else if (index_spec) {
        col = *index_spec;
    } else {
        if (!has_header) {
            throw DataError("column '" + column + "' given by name but the file has no header");
        }
        const auto it = std::find(first.begin(), first.end(), column);
        if (it == first.end()) {
            throw DataError("column '" + column + "' not found in header");
        }
        col = static_cast<std::size_t>(it - first.begin());
    }
    if (has_header && col >= first.size()) {
        throw DataError("column index " + std::to_string(col) + " is out of range for the header");
    }

    std::vector<double> values;
    const std::size_t start = has_header ? 1 : 0;
    values.reserve(lines.size() - start);
    for (std::size_t li = start; li < lines.size(); ++li) {
        const std::size_t row = li - start + 1;
        const std::string where =
            "row " + std::to_string(row) + " (line " + std::to_string(li + 1) + ")";
        const auto cells = split(lines[li]);
        if (col >= cells.size()) {
            throw DataError(where + ": missing column " + std::to_string(col));
        }
        const auto value = parse_number(cells[col]);
        if (!value) {
            throw DataError(where + ": non-numeric value '" + cells[col] + "'");
        }
        if (!std::isfinite(*value)) {
            throw DataError(where + ": non-finite value '" + cells[col] + "'");
        }
        values.push_back(*value);
    }
    if (values.empty()) {
        throw DataError("empty series");
    }
    return TimeSeries(std::move(values));
}

std::string format_double(double value) {
    char buf[40];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", value);
    return std::string(buf, static_cast<std::size_t>(len));
}

void write_series_csv(const std::filesystem::path& path, const TimeSeries& series) {
    std::ofstream out(path);
    if (!out) {
        throw DataError("cannot write '" + path.string() + "'");
    }
    out << "value\n";
    for (const double v : series.values()) {
        out << format_double(v) << '\n';
    }
}

}  // namespace npcpt::cli
