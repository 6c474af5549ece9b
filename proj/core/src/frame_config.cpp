// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the mmwavesim authors

#include "mmwavesim/frame_config.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mmwavesim {

std::vector<std::string> validate(const FrameConfig& cfg) {
  std::vector<std::string> issues;
  auto require = [&](bool ok, const std::string& msg) {
    if (!ok) issues.push_back(msg);
  };

  require(cfg.symbols_per_slot >= 1, "SymbolPerSlot must be >= 1");
  require(cfg.slots_per_subframe >= 1, "SlotsPerSubframe must be >= 1");
  require(cfg.subframes_per_frame >= 1, "SubframePerFrame must be >= 1");
  require(cfg.subcarriers_per_subband >= 1, "SubcarriersPerSubband must be >= 1");
  require(cfg.subbands_per_rb >= 1, "SubbandsPerRB must be >= 1");
  require(cfg.num_resource_blocks >= 1, "NumResourceBlock must be >= 1");
  require(cfg.symbol_length_s > 0, "SymbolLength must be > 0");
  require(cfg.subband_width_hz > 0, "SubbandWidth must be > 0");
  require(cfg.center_freq_hz > 0, "CenterFreq must be > 0");
  require(cfg.guard_time_s >= 0, "GuardTime must be >= 0");
  require(cfg.l1l2_control_latency >= 0, "L1L2ControlLatency must be >= 0");
  require(cfg.num_reference_symbols >= 0, "NumReferenceSymbols must be >= 0");
  require(cfg.num_reference_symbols < cfg.symbols_per_slot,
          "NumReferenceSymbols must be < SymbolPerSlot");

  if (cfg.tdd_pattern.size() != static_cast<std::size_t>(cfg.slots_per_subframe)) {
    std::ostringstream os;
    os << "TDDControlDataPattern length " << cfg.tdd_pattern.size()
       << " does not match SlotsPerSubframe " << cfg.slots_per_subframe;
    issues.push_back(os.str());
  }
  for (char ch : cfg.tdd_pattern) {
    if (ch != 'c' && ch != 'd') {
      issues.push_back(std::string("TDDControlDataPattern contains invalid character '") +
                       ch + "' (only 'c'/'d' allowed)");
      break;
    }
  }
  return issues;
}

void ensure_valid(const FrameConfig& cfg) {
  auto issues = validate(cfg);
  if (issues.empty()) return;
  std::string msg = "invalid FrameConfig:";
  for (const auto& s : issues) msg += "\n  " + s;
  throw std::invalid_argument(msg);
}

double tti_seconds(const FrameConfig& cfg) {
  return cfg.symbols_per_slot * cfg.symbol_length_s;
}

double rb_bandwidth_hz(const FrameConfig& cfg) {
  return cfg.subbands_per_rb * cfg.subband_width_hz;
}

double system_bandwidth_hz(const FrameConfig& cfg) {
  return rb_bandwidth_hz(cfg) * cfg.num_resource_blocks;
}

long resource_elements_per_slot(const FrameConfig& cfg) {
  return static_cast<long>(cfg.symbols_per_slot) * cfg.subcarriers_per_subband *
         cfg.subbands_per_rb * cfg.num_resource_blocks;
}

int guard_symbols(const FrameConfig& cfg) {
  if (cfg.guard_time_s <= 0) return 0;
  return static_cast<int>(std::ceil(cfg.guard_time_s / cfg.symbol_length_s));
}

int usable_data_symbols(const FrameConfig& cfg, bool direction_switch) {
  int n = cfg.symbols_per_slot - cfg.num_reference_symbols;
  if (direction_switch) n -= guard_symbols(cfg);
  return n > 0 ? n : 0;
}

TimeNs tti_ns(const FrameConfig& cfg) {
  TimeNs symbol = seconds_to_ns(cfg.symbol_length_s);
  return symbol * cfg.symbols_per_slot;
}

}  // namespace mmwavesim
