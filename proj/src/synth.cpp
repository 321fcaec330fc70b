// SPDX-License-Identifier: Apache-2.0

#include "css/synth.hpp"

#include <cmath>
#include <stdexcept>

namespace css {

NoiseModel NoiseModel::from_snr(double snr_db, double signal_power) {
  NoiseModel m;
  m.snr_db = snr_db;
  m.signal_power = signal_power;
  m.noise_variance = signal_power / std::pow(10.0, snr_db / 10.0);
  return m;
}

DftPlan::DftPlan(int n) : n_(n), inv_(n, n) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m) {
      const double phase = 2.0 * M_PI * static_cast<double>(k) *
                           static_cast<double>(m) / static_cast<double>(n);
      inv_(k, m) = scale * std::complex<double>(std::cos(phase), std::sin(phase));
    }
}

Eigen::VectorXcd DftPlan::inverse(const Eigen::VectorXcd& freq) const {
  return inv_ * freq;
}

Eigen::VectorXcd DftPlan::forward(const Eigen::VectorXcd& time) const {
  return inv_.adjoint() * time;
}

SnapshotSpectrum synthesize_snapshot(const std::vector<std::uint8_t>& occupancy,
                                     const NoiseModel& noise, int time_index,
                                     RngStream& rng) {
  const int n = static_cast<int>(occupancy.size());
  SnapshotSpectrum snap;
  snap.time_index = time_index;
  snap.occupied = occupancy;
  snap.spectrum.resize(n);
  for (int k = 0; k < n; ++k) {
    std::complex<double> x{0.0, 0.0};
    if (occupancy[static_cast<std::size_t>(k)])
      x = rng.cnormal(noise.signal_power);
    if (noise.noise_variance > 0.0) x += rng.cnormal(noise.noise_variance);
    snap.spectrum(k) = x;
  }
  return snap;
}

Eigen::VectorXcd to_time_domain(const DftPlan& plan, const Eigen::VectorXcd& x) {
  if (x.size() != plan.size())
    throw std::invalid_argument("to_time_domain: length mismatch");
  return plan.inverse(x);
}

}  // namespace css
