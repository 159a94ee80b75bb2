// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/dataset.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <vector>

#include "core/errors.hpp"

namespace gammagof {
namespace {

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\"");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\"");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::optional<double> to_double(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

Sample Dataset::complete() const {
  return Sample(std::vector<double>(data.times().begin(), data.times().end()));
}

Dataset parse_dataset(std::istream& in) {
  std::string line;
  std::size_t row = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++row;
    if (!trim(line).empty()) {
      header = split(line);
      break;
    }
  }
  if (header.empty()) throw ParseError(row, "missing header row");
  if (header[0].rfind("\xEF\xBB\xBF", 0) == 0) header[0] = header[0].substr(3);

  std::optional<std::size_t> time_col, status_col;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "time") time_col = c;
    if (header[c] == "status") status_col = c;
  }
  if (!time_col) throw ParseError(row, "header has no 'time' column");

  std::vector<double> times;
  std::vector<std::uint8_t> events;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto fields = split(line);
    if (fields.size() != header.size()) {
      throw ParseError(row, "expected " + std::to_string(header.size()) + " fields, found " +
                                std::to_string(fields.size()));
    }
    const auto t = to_double(fields[*time_col]);
    if (!t || !std::isfinite(*t)) throw ParseError(row, "time '" + fields[*time_col] + "' is not a number");
    if (*t <= 0.0) throw ParseError(row, "time must be positive");
    std::uint8_t event = 1;
    if (status_col) {
      const auto& s = fields[*status_col];
      if (s == "1") event = 1;
      else if (s == "0") event = 0;
      else throw ParseError(row, "status '" + s + "' must be 0 or 1");
    }
    times.push_back(*t);
    events.push_back(event);
  }
  if (times.empty()) throw ParseError(row, "no observations");

  Dataset d;
  d.has_status = status_col.has_value();
  d.data = CensoredSample(std::move(times), std::move(events));
  if (d.data.event_count() == 0) throw ParseError(row, "all observations are censored");
  return d;
}

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return parse_dataset(in);
}

}  // namespace gammagof
