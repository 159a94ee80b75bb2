// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <istream>
#include <string>

#include "core/samples.hpp"

namespace gammagof {

// A lifetime data file: header row with a `time` column and an optional
// `status` column (1 = event, 0 = censored). Other columns are ignored.
struct Dataset {
  CensoredSample data;
  bool has_status = false;

  bool censored() const { return has_status && data.event_count() < data.size(); }
  Sample complete() const;
};

// Rows are numbered from 1 for the header; errors name the offending row.
Dataset parse_dataset(std::istream& in);
Dataset load_dataset(const std::string& path);

}  // namespace gammagof
