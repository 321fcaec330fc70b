// SPDX-License-Identifier: Apache-2.0

#include "css/gp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace css {

GpParams::GpParams(double mu, double lambda, double alpha)
    : location(mu), scale(lambda), shape(alpha) {
  if (!(mu > 0.0)) throw std::invalid_argument("GpParams: location must be > 0");
  if (!(lambda > 0.0)) throw std::invalid_argument("GpParams: scale must be > 0");
  if (!(alpha < 0.5)) throw std::invalid_argument("GpParams: shape must be < 1/2");
}

double GpParams::upper_bound() const {
  if (shape < -kGpShapeEps) return location - scale / shape;
  return std::numeric_limits<double>::infinity();
}

GpMoments gp_moments(const GpParams& p) {
  const double one_minus_a = 1.0 - p.shape;
  const double mean = p.location + p.scale / one_minus_a;
  const double var =
      p.scale * p.scale / (one_minus_a * one_minus_a * (1.0 - 2.0 * p.shape));
  return {mean, var};
}

double gp_sample(const GpParams& p, double u) {
  if (!(u >= 0.0 && u < 1.0))
    throw std::invalid_argument("gp_sample: u must be in [0, 1)");
  if (std::abs(p.shape) < kGpShapeEps)
    return p.location - p.scale * std::log1p(-u);
  return p.location +
         (p.scale / p.shape) * (std::pow(1.0 - u, -p.shape) - 1.0);
}

double gp_cdf(const GpParams& p, double t) {
  if (t <= p.location) return 0.0;
  const double z = (t - p.location) / p.scale;
  if (std::abs(p.shape) < kGpShapeEps) return 1.0 - std::exp(-z);
  const double base = 1.0 + p.shape * z;
  if (base <= 0.0) return 1.0;  // beyond the bounded support (shape < 0)
  return 1.0 - std::pow(base, -1.0 / p.shape);
}

double gp_quantile(const GpParams& p, double prob) { return gp_sample(p, prob); }

double duty_cycle_of(const GpParams& busy, const GpParams& idle) {
  const double eb = gp_moments(busy).mean;
  const double ei = gp_moments(idle).mean;
  return eb / (eb + ei);
}

std::pair<GpParams, GpParams> solve_scale_for_dc(double psi, double mu,
                                                 double alpha,
                                                 double cycle_mean) {
  if (!(psi > 0.0 && psi < 1.0))
    throw std::invalid_argument("solve_scale_for_dc: psi must be in (0, 1)");
  const double mean_busy = psi * cycle_mean;
  const double mean_idle = (1.0 - psi) * cycle_mean;
  if (mean_busy <= mu || mean_idle <= mu)
    throw std::invalid_argument(
        "solve_scale_for_dc: target mean " +
        std::to_string(std::min(mean_busy, mean_idle)) +
        " does not exceed location " + std::to_string(mu));
  const double one_minus_a = 1.0 - alpha;
  GpParams busy(mu, (mean_busy - mu) * one_minus_a, alpha);
  GpParams idle(mu, (mean_idle - mu) * one_minus_a, alpha);
  return {busy, idle};
}

}  // namespace css
