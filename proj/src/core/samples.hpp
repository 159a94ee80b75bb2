// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gammagof {

// Complete lifetime data: strictly positive, finite values.
class Sample {
 public:
  Sample() = default;
  explicit Sample(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

// Right-censored data (Y_i, δ_i) with Y = min(X, C), δ = I(X <= C).
class CensoredSample {
 public:
  CensoredSample() = default;
  CensoredSample(std::vector<double> times, std::vector<std::uint8_t> events);

  // Every observation marked as an event.
  static CensoredSample uncensored(std::span<const double> times);

  std::span<const double> times() const { return times_; }
  std::span<const std::uint8_t> events() const { return events_; }
  std::size_t size() const { return times_.size(); }
  double time(std::size_t i) const { return times_[i]; }
  bool event(std::size_t i) const { return events_[i] != 0; }
  std::size_t event_count() const;
  double censored_fraction() const;

 private:
  std::vector<double> times_;
  std::vector<std::uint8_t> events_;
};

}  // namespace gammagof
