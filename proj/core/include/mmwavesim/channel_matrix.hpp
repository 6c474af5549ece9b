// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 the mmwavesim authors

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "mmwavesim/propagation.hpp"
#include "mmwavesim/units.hpp"

namespace mmwavesim {

using Complex = std::complex<double>;

/// Per-subpath cluster parameters. Arrays are indexed by flattened subpath
/// p = 0..P-1 where P = sum of cluster_sizes. Powers are normalized to sum
/// to 1 per link so pathloss alone carries the large-scale power.
struct SubpathParams {
  std::vector<double> power;           // linear power spread P_kl
  std::vector<double> aoa_rel_motion;  // omega_kl, radians vs. direction of motion
  std::vector<double> delay_s;         // tau_kl
  std::vector<int> cluster_sizes;      // L_k per cluster k

  std::size_t count() const { return power.size(); }
};

/// One spatial instance of a radio link: the two per-subpath signature
/// matrices (one unit-norm column per subpath) plus the subpath parameter
/// set, together with the link-scale draws that persist between refreshes.
struct ChannelRealization {
  LinkState link_state = LinkState::Los;
  double shadowing_db = 0.0;
  Eigen::MatrixXcd tx_spatial;  // tx_antennas x P
  Eigen::MatrixXcd rx_spatial;  // rx_antennas x P
  SubpathParams subpaths;
  TimeNs last_large_scale_update = 0;
  int realization_id = -1;      // pool index, carried into traces
};

/// Unit-norm uniform-linear-array response, element n weighted by
/// exp(-i pi n sin(theta)) / sqrt(N). Elevation is accepted by callers but
/// ignored by this default array.
Eigen::VectorXcd ula_signature(int num_antennas, double theta_rad);

/// Small-scale fading phasor of one subpath:
/// sqrt(P) * exp(i (2 pi f_d cos(omega) t - 2 pi tau f)). `freq_offset_hz`
/// is the offset from the carrier across the band; magnitude is sqrt(P)
/// for every (t, f).
Complex small_scale_gain(double t_s, double freq_offset_hz, double power,
                         double aoa_rel_motion, double delay_s, double doppler_max_hz);

/// Full channel matrix at (t, f): sum over subpaths of g_p u_rx,p u_tx,p^H.
/// Dimensions rx_antennas x tx_antennas. Throws if the spatial matrices
/// disagree on subpath count.
Eigen::MatrixXcd assemble_channel(const ChannelRealization& rel, double t_s,
                                  double freq_offset_hz, double doppler_max_hz);

/// Sub-band center frequencies as offsets from the carrier, band centered
/// on zero: f_i = (i - (S-1)/2) * subband_width for i = 0..S-1.
std::vector<double> subband_offsets_hz(int total_subbands, double subband_width_hz);

}  // namespace mmwavesim
