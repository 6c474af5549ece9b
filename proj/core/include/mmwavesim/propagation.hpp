// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the mmwavesim authors

#pragma once

#include <functional>

namespace mmwavesim {

enum class LinkState { Los, Nlos, Outage };

const char* to_string(LinkState s);

/// Distance-dependent probabilities of the three channel states. Outage is
/// the remainder 1 - P_LoS(d) - P_NLoS(d). Both functions must map any
/// d > 0 into [0,1] with P_LoS(d) + P_NLoS(d) <= 1.
struct LinkStateModel {
  std::function<double(double)> los_prob;
  std::function<double(double)> nlos_prob;

  /// Exponential-decay family: P_LoS(d) = exp(-a_los d) and
  /// P_NLoS(d) = min(exp(-a_nlos d), 1 - P_LoS(d)). Shipped defaults give a
  /// mostly-LoS near field with outage growing past a few hundred meters.
  static LinkStateModel exponential(double a_los = 0.0149, double a_nlos = 0.002);

  /// Distance-independent probabilities (mainly for tests and pinned setups).
  static LinkStateModel fixed(double p_los, double p_nlos);
};

/// Three-branch state selection from a single uniform draw:
/// LOS if draw <= P_LoS(d), NLOS if P_LoS(d) < draw <= P_LoS(d)+P_NLoS(d),
/// Outage otherwise. Throws on non-finite or non-positive distance.
LinkState select_link_state(double distance_m, const LinkStateModel& model, double uniform_draw);

/// Log-distance pathloss parameters for one channel state: PL(d) = alpha +
/// beta * 10 log10(d) + xi, xi ~ N(0, sigma^2) drawn at state (re)selection.
struct PathlossParams {
  double alpha_db = 0.0;
  double beta = 2.0;
  double sigma_db = 0.0;
};

/// Representative 28 GHz-class defaults; overridable via scenario config.
inline PathlossParams default_los_pathloss() { return {61.4, 2.0, 5.8}; }
inline PathlossParams default_nlos_pathloss() { return {72.0, 2.92, 8.7}; }

/// PL(d) in dB including the supplied shadowing draw. Throws for d <= 0.
double pathloss_db(double distance_m, const PathlossParams& params, double shadowing_db);

}  // namespace mmwavesim
