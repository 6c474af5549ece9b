// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the mmwavesim authors

#pragma once

#include <cstdint>
#include <random>

namespace mmwavesim {

/// Named random substreams derived from one master seed. Each concern draws
/// from its own stream, so toggling a feature never perturbs the sequences
/// seen by the others.
enum class RngStreamId : std::uint64_t {
  PoolGeneration = 1,
  LinkState = 2,
  Shadowing = 3,
  Decode = 4,
  Traffic = 5,
  CrossLink = 6,
};

class RngStream {
 public:
  RngStream(std::uint64_t master_seed, RngStreamId id)
      : engine_(mix(master_seed, static_cast<std::uint64_t>(id))) {}

  /// Uniform draw in [0,1).
  double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  /// Inclusive integer range.
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  std::size_t uniform_index(std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(engine_);
  }

  double normal(double mean, double stddev) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }

  double exponential(double rate = 1.0) {
    return std::exponential_distribution<double>(rate)(engine_);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  // splitmix64 finalizer; decorrelates (seed, stream) pairs.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace mmwavesim
