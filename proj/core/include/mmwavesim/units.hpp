// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the mmwavesim authors

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace mmwavesim {

inline constexpr double kBoltzmann = 1.380649e-23;    // J/K
inline constexpr double kNoiseTemperatureK = 290.0;
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// Thermal noise power spectral density at the reference temperature, W/Hz.
inline constexpr double thermal_noise_psd() { return kBoltzmann * kNoiseTemperatureK; }

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double lin) {
  if (lin <= 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(lin);
}

inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

inline double watt_to_dbm(double w) {
  if (w <= 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(w) + 30.0;
}

/// Simulation time in integer nanoseconds; keeps event ordering exact.
using TimeNs = std::int64_t;

inline TimeNs seconds_to_ns(double s) { return static_cast<TimeNs>(std::llround(s * 1e9)); }
inline double ns_to_seconds(TimeNs t) { return static_cast<double>(t) * 1e-9; }

}  // namespace mmwavesim
