// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the mmwavesim authors

#pragma once

#include <string>
#include <vector>

#include "mmwavesim/units.hpp"

namespace mmwavesim {

/// TDD frame-structure parameters. Field defaults are the shipped frame
/// profile: 10 ms frames of ten 1 ms subframes, eight 124.8 us slots each,
/// 1 GHz-class band at 28 GHz split into 4 resource blocks.
///
/// Immutable after scenario start; share by const reference.
struct FrameConfig {
  int symbols_per_slot = 30;
  double symbol_length_s = 4.16e-6;
  int slots_per_subframe = 8;
  int subframes_per_frame = 10;
  int num_reference_symbols = 6;
  std::string tdd_pattern = "ccdddddd";  // 'c' control / 'd' data, one per slot
  int subcarriers_per_subband = 48;
  int subbands_per_rb = 18;
  double subband_width_hz = 13.89e6;
  int num_resource_blocks = 4;
  double center_freq_hz = 28e9;
  double guard_time_s = 1e-6;     // UL/DL switching gap
  int l1l2_control_latency = 2;   // subframes between scheduling decision and effect
};

/// All violated invariants, empty when the config is valid.
std::vector<std::string> validate(const FrameConfig& cfg);

/// Throws std::invalid_argument listing every violated invariant.
void ensure_valid(const FrameConfig& cfg);

/// Slot duration (the TTI): symbols_per_slot x symbol_length.
double tti_seconds(const FrameConfig& cfg);

/// Bandwidth of one resource block: subbands_per_rb x subband_width.
double rb_bandwidth_hz(const FrameConfig& cfg);

/// Total system bandwidth: rb_bandwidth x num_resource_blocks.
double system_bandwidth_hz(const FrameConfig& cfg);

/// Resource elements in one slot across the whole band.
long resource_elements_per_slot(const FrameConfig& cfg);

inline int total_subbands(const FrameConfig& cfg) {
  return cfg.subbands_per_rb * cfg.num_resource_blocks;
}

/// Symbols consumed by the UL/DL switching gap when a slot changes direction.
int guard_symbols(const FrameConfig& cfg);

/// OFDM symbols available for payload in a data slot. A slot whose direction
/// differs from the previous slot loses guard_symbols() to the switching gap.
int usable_data_symbols(const FrameConfig& cfg, bool direction_switch);

/// TTI in integer nanoseconds (rounded once; all slot timing derives from it).
TimeNs tti_ns(const FrameConfig& cfg);

}  // namespace mmwavesim
