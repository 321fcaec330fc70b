// SPDX-License-Identifier: Apache-2.0
//
// Compressive sensing front end: Gaussian measurement operator, snapshot
// compression, l1-regularized recovery of the frequency-domain spectrum and
// threshold decisions. Includes the full-rate energy-detection baseline.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "css/rng.hpp"
#include "css/synth.hpp"

namespace css {

// Measurement-count sizing guide: ceil(C * L * ln(N/L)), clamped to [L+1, N].
int required_measurements(int l_max, int n, double c);

struct MeasurementOperator {
  Eigen::MatrixXd phi;  // M x N, i.i.d. Gaussian(0, 1/M)

  int rows() const { return static_cast<int>(phi.rows()); }
  int cols() const { return static_cast<int>(phi.cols()); }
  double compression_ratio() const {
    return static_cast<double>(phi.rows()) / static_cast<double>(phi.cols());
  }
};

MeasurementOperator build_measurement_operator(int m, int n, RngStream& rng);

Eigen::VectorXcd compress(const MeasurementOperator& op,
                          const Eigen::VectorXcd& x);

struct RecoverySettings {
  // Penalty on the quadratic misfit: objective ||x||_1 + penalty*||y-Ax||^2.
  // <= 0 selects the universal-threshold default for the given noise sigma.
  double penalty = 0.0;
  int max_iterations = 500;
  double convergence_tol = 1e-6;  // relative objective change
  double binarize_threshold = 0.0;

  // Penalty whose implied soft-threshold scale is sigma*sqrt(2 ln n).
  static double default_penalty(double noise_sigma, int n);
};

struct BpdnResult {
  Eigen::VectorXcd x;  // recovered spectrum, length N
  int iterations = 0;
  bool converged = false;
  double objective = 0.0;
};

// Proximal-gradient solver for min ||x||_1 + penalty*||y - A x||^2 with
// A = Phi * F^{-1}. Momentum-accelerated with a monotone safeguard, so the
// reported objective never increases across iterations. The composite
// operator and its step size are precomputed once per measurement operator.
class BpdnSolver {
 public:
  BpdnSolver(const MeasurementOperator& op, const DftPlan& dft);

  BpdnResult solve(const Eigen::VectorXcd& y, const RecoverySettings& settings,
                   const Eigen::VectorXcd* warm_start = nullptr) const;

  double objective(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y,
                   double penalty) const;
  double lipschitz() const { return lipschitz_; }
  const Eigen::MatrixXcd& composite() const { return a_; }

 private:
  Eigen::MatrixXcd a_;   // Phi * F^{-1}, M x N
  Eigen::MatrixXcd ah_;  // adjoint
  double lipschitz_;     // largest squared singular value of A
};

std::vector<std::uint8_t> binarize(const Eigen::VectorXcd& x_hat, double tau);

// Per-bin energy detection on the uncompressed spectrum.
std::vector<std::uint8_t> nyquist_baseline_detect(const Eigen::VectorXcd& x,
                                                  double tau);

// Exact threshold for |CN(0,sigma^2)|^2 at false-alarm probability pfa.
double nyquist_threshold(const NoiseModel& noise, double pfa);

// Monte-Carlo threshold: runs n_snapshots noise-only recoveries and takes the
// (1 - pfa) quantile of the pooled recovered bin powers. If the solver zeroed
// too many bins for that quantile to be positive, falls back to the analytic
// per-bin noise threshold (false alarms then land below pfa).
double calibrate_bpdn_threshold(const BpdnSolver& solver,
                                const MeasurementOperator& op,
                                const NoiseModel& noise,
                                const RecoverySettings& settings, double pfa,
                                int n_snapshots, RngStream& rng);

}  // namespace css
