// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the mmwavesim authors

#include "mmwavesim/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mmwavesim {

const char* to_string(LinkState s) {
  switch (s) {
    case LinkState::Los: return "los";
    case LinkState::Nlos: return "nlos";
    case LinkState::Outage: return "outage";
  }
  return "?";
}

LinkStateModel LinkStateModel::exponential(double a_los, double a_nlos) {
  LinkStateModel m;
  m.los_prob = [a_los](double d) { return std::exp(-a_los * d); };
  m.nlos_prob = [a_los, a_nlos](double d) {
    return std::min(std::exp(-a_nlos * d), 1.0 - std::exp(-a_los * d));
  };
  return m;
}

LinkStateModel LinkStateModel::fixed(double p_los, double p_nlos) {
  LinkStateModel m;
  m.los_prob = [p_los](double) { return p_los; };
  m.nlos_prob = [p_nlos](double) { return p_nlos; };
  return m;
}

LinkState select_link_state(double distance_m, const LinkStateModel& model,
                            double uniform_draw) {
  if (!std::isfinite(distance_m) || distance_m <= 0.0)
    throw std::invalid_argument("select_link_state: distance must be finite and > 0");
  if (uniform_draw < 0.0 || uniform_draw > 1.0)
    throw std::invalid_argument("select_link_state: draw must be in [0,1]");

  const double p_los = model.los_prob(distance_m);
  const double p_nlos = model.nlos_prob(distance_m);
  if (uniform_draw <= p_los) return LinkState::Los;
  if (uniform_draw <= p_los + p_nlos) return LinkState::Nlos;
  return LinkState::Outage;
}

double pathloss_db(double distance_m, const PathlossParams& params, double shadowing_db) {
  if (!(distance_m > 0.0))
    throw std::invalid_argument("pathloss_db: distance must be > 0");
  return params.alpha_db + params.beta * 10.0 * std::log10(distance_m) + shadowing_db;
}

}  // namespace mmwavesim
