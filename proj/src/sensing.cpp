// SPDX-License-Identifier: Apache-2.0

#include "css/sensing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace css {

int required_measurements(int l_max, int n, double c) {
  if (!(l_max > 0 && l_max < n))
    throw std::invalid_argument("required_measurements: need 0 < L < N");
  const double raw = c * static_cast<double>(l_max) *
                     std::log(static_cast<double>(n) / static_cast<double>(l_max));
  int m = static_cast<int>(std::ceil(raw));
  m = std::max(m, l_max + 1);
  return std::min(m, n);
}

MeasurementOperator build_measurement_operator(int m, int n, RngStream& rng) {
  if (!(m > 0 && m <= n))
    throw std::invalid_argument("build_measurement_operator: need 0 < M <= N");
  MeasurementOperator op;
  op.phi.resize(m, n);
  const double sigma = 1.0 / std::sqrt(static_cast<double>(m));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) op.phi(r, c) = sigma * rng.normal();
  return op;
}

Eigen::VectorXcd compress(const MeasurementOperator& op,
                          const Eigen::VectorXcd& x) {
  if (x.size() != op.cols())
    throw std::invalid_argument("compress: dimension mismatch");
  return op.phi * x;
}

double RecoverySettings::default_penalty(double noise_sigma, int n) {
  const double thresh =
      noise_sigma * std::sqrt(2.0 * std::log(static_cast<double>(n)));
  if (!(thresh > 0.0)) return 1e12;  // noiseless: near-pure l1 feasibility
  return 1.0 / (2.0 * thresh);
}

BpdnSolver::BpdnSolver(const MeasurementOperator& op, const DftPlan& dft) {
  if (op.cols() != dft.size())
    throw std::invalid_argument("BpdnSolver: operator/DFT size mismatch");
  a_ = op.phi * dft.inverse_matrix();
  ah_ = a_.adjoint();

  // Power iteration on A^H A; fixed start vector keeps this deterministic.
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(a_.cols());
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    v(i) += std::complex<double>(0.0, 1e-3 * static_cast<double>(i + 1));
  v.normalize();
  double prev = 0.0;
  lipschitz_ = 1.0;
  for (int it = 0; it < 50; ++it) {
    Eigen::VectorXcd w = ah_ * (a_ * v);
    const double norm = w.norm();
    if (norm == 0.0) break;
    lipschitz_ = norm;
    v = w / norm;
    if (std::abs(lipschitz_ - prev) <= 1e-6 * lipschitz_) break;
    prev = lipschitz_;
  }
}

double BpdnSolver::objective(const Eigen::VectorXcd& x,
                             const Eigen::VectorXcd& y, double penalty) const {
  const double l1 = x.cwiseAbs().sum();
  const double misfit = (a_ * x - y).squaredNorm();
  return l1 + penalty * misfit;
}

namespace {

// Complex soft threshold: shrink magnitude, keep phase.
void soft_threshold(Eigen::VectorXcd& v, double t) {
  for (int i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    v(i) = (mag <= t) ? std::complex<double>(0.0, 0.0)
                      : v(i) * ((mag - t) / mag);
  }
}

}  // namespace

BpdnResult BpdnSolver::solve(const Eigen::VectorXcd& y,
                             const RecoverySettings& settings,
                             const Eigen::VectorXcd* warm_start) const {
  if (y.size() != a_.rows())
    throw std::invalid_argument("BpdnSolver::solve: measurement length mismatch");
  const double penalty = settings.penalty;
  if (!(penalty > 0.0))
    throw std::invalid_argument("BpdnSolver::solve: penalty must be > 0");

  const double step = 1.0 / (2.0 * penalty * lipschitz_);
  const int n = static_cast<int>(a_.cols());

  Eigen::VectorXcd x = (warm_start != nullptr && warm_start->size() == n)
                           ? *warm_start
                           : Eigen::VectorXcd::Zero(n);
  Eigen::VectorXcd z = x;
  Eigen::VectorXcd x_prev = x;
  double t_k = 1.0;
  double obj = objective(x, y, penalty);

  BpdnResult result;
  int it = 0;
  for (; it < settings.max_iterations; ++it) {
    Eigen::VectorXcd grad = ah_ * (a_ * z - y);
    Eigen::VectorXcd cand = z - (2.0 * penalty * step) * grad;
    soft_threshold(cand, step);

    const double cand_obj = objective(cand, y, penalty);
    // Monotone safeguard: keep the best iterate, momentum still uses cand.
    if (cand_obj <= obj) {
      x = cand;
    }
    const double new_obj = std::min(cand_obj, obj);

    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t_k * t_k));
    z = x + (t_k / t_next) * (cand - x) + ((t_k - 1.0) / t_next) * (x - x_prev);
    x_prev = x;
    t_k = t_next;

    const double denom = std::max(std::abs(obj), 1e-12);
    const bool done = std::abs(obj - new_obj) <= settings.convergence_tol * denom;
    obj = new_obj;
    if (done) {
      result.converged = true;
      ++it;
      break;
    }
  }
  result.x = std::move(x);
  result.iterations = it;
  result.objective = obj;
  return result;
}

std::vector<std::uint8_t> binarize(const Eigen::VectorXcd& x_hat, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("binarize: tau must be > 0");
  std::vector<std::uint8_t> out(static_cast<std::size_t>(x_hat.size()));
  for (int i = 0; i < x_hat.size(); ++i)
    out[static_cast<std::size_t>(i)] = std::norm(x_hat(i)) > tau ? 1 : 0;
  return out;
}

std::vector<std::uint8_t> nyquist_baseline_detect(const Eigen::VectorXcd& x,
                                                  double tau) {
  return binarize(x, tau);
}

double nyquist_threshold(const NoiseModel& noise, double pfa) {
  if (!(pfa > 0.0 && pfa < 1.0))
    throw std::invalid_argument("nyquist_threshold: pfa must be in (0, 1)");
  // |CN(0, sigma^2)|^2 is exponential with mean sigma^2.
  return noise.noise_variance * std::log(1.0 / pfa);
}

double calibrate_bpdn_threshold(const BpdnSolver& solver,
                                const MeasurementOperator& op,
                                const NoiseModel& noise,
                                const RecoverySettings& settings, double pfa,
                                int n_snapshots, RngStream& rng) {
  if (!(pfa > 0.0 && pfa < 1.0))
    throw std::invalid_argument("calibrate_bpdn_threshold: pfa in (0,1)");
  const int n = op.cols();
  const std::vector<std::uint8_t> empty(static_cast<std::size_t>(n), 0);
  DftPlan dft(n);

  std::vector<double> powers;
  powers.reserve(static_cast<std::size_t>(n) * n_snapshots);
  Eigen::VectorXcd warm = Eigen::VectorXcd::Zero(n);
  for (int s = 0; s < n_snapshots; ++s) {
    SnapshotSpectrum snap = synthesize_snapshot(empty, noise, s, rng);
    Eigen::VectorXcd y = compress(op, to_time_domain(dft, snap.spectrum));
    BpdnResult r = solver.solve(y, settings, &warm);
    warm = r.x;
    for (int i = 0; i < n; ++i) powers.push_back(std::norm(r.x(i)));
  }
  std::sort(powers.begin(), powers.end());
  const std::size_t idx = static_cast<std::size_t>(
      std::min<double>(static_cast<double>(powers.size()) - 1.0,
                       std::ceil((1.0 - pfa) * powers.size())));
  const double q = powers[idx];
  if (q > 0.0) return q;
  return nyquist_threshold(noise, pfa);
}

}  // namespace css
