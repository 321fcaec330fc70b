// SPDX-License-Identifier: Apache-2.0
//
// Frequency-domain snapshot synthesis: occupied bins carry a random complex
// amplitude, every bin carries circular Gaussian noise; the time-domain view
// is the unitary inverse DFT.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "css/rng.hpp"

namespace css {

struct NoiseModel {
  double snr_db;
  double noise_variance;  // sigma^2, per-bin noise power
  double signal_power;    // per occupied bin

  static NoiseModel from_snr(double snr_db, double signal_power = 1.0);
};

struct SnapshotSpectrum {
  int time_index;
  Eigen::VectorXcd spectrum;            // X, length N
  std::vector<std::uint8_t> occupied;   // ground truth
};

// Unitary N-point DFT via a precomputed matrix; N here is the channel count
// (small), so a dense multiply is fine.
class DftPlan {
 public:
  explicit DftPlan(int n);
  int size() const { return n_; }
  Eigen::VectorXcd inverse(const Eigen::VectorXcd& freq) const;
  Eigen::VectorXcd forward(const Eigen::VectorXcd& time) const;
  const Eigen::MatrixXcd& inverse_matrix() const { return inv_; }

 private:
  int n_;
  Eigen::MatrixXcd inv_;  // F^{-1}, unitary
};

// Amplitudes are redrawn each call; the draw order is fixed (amplitude then
// noise, bin by bin) so snapshots are reproducible per stream.
SnapshotSpectrum synthesize_snapshot(const std::vector<std::uint8_t>& occupancy,
                                     const NoiseModel& noise, int time_index,
                                     RngStream& rng);

Eigen::VectorXcd to_time_domain(const DftPlan& plan, const Eigen::VectorXcd& x);

}  // namespace css
