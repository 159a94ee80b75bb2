// Copyright 2026 The gammagof Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace gammagof {

// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Seed of stream `index` under `master`. Distinct indices give decorrelated
// engines, so replications can run on any thread in any order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

// Explicitly seeded random source with its own uniform and normal transforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  static Rng stream(std::uint64_t master, std::uint64_t index) {
    return Rng(derive_seed(master, index));
  }

  // Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();
  // Standard normal (Marsaglia polar method).
  double normal();
  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gammagof
