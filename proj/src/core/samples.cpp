// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#include "core/samples.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace gammagof {
namespace {

void check_times(std::span<const double> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0) || !std::isfinite(v[i])) {
      throw DomainError("observation " + std::to_string(i) + " is not a positive finite value");
    }
  }
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw DomainError("sample is empty");
  check_times(values_);
}

CensoredSample::CensoredSample(std::vector<double> times, std::vector<std::uint8_t> events)
    : times_(std::move(times)), events_(std::move(events)) {
  if (times_.size() != events_.size()) {
    throw DomainError("censored sample: times and events differ in length");
  }
  check_times(times_);
  for (std::size_t i = 0; i < events_.size(); ++i) {
    if (events_[i] > 1) {
      throw DomainError("event indicator " + std::to_string(i) + " is not 0 or 1");
    }
  }
}

CensoredSample CensoredSample::uncensored(std::span<const double> times) {
  return CensoredSample(std::vector<double>(times.begin(), times.end()),
                        std::vector<std::uint8_t>(times.size(), 1));
}

std::size_t CensoredSample::event_count() const {
  return static_cast<std::size_t>(std::count(events_.begin(), events_.end(), std::uint8_t{1}));
}

double CensoredSample::censored_fraction() const {
  if (times_.empty()) return 0.0;
  return 1.0 - static_cast<double>(event_count()) / static_cast<double>(times_.size());
}

}  // namespace gammagof
