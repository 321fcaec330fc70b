// SPDX-License-Identifier: Apache-2.0
//
// Generalized Pareto holding-time distribution: parameters, moments,
// CDF/quantile and inverse-CDF sampling.

#pragma once

#include <utility>

namespace css {

// Shape values closer to zero than this use the exponential-limit formulas
// to avoid cancellation in (1-u)^(-a) - 1.
inline constexpr double kGpShapeEps = 1e-8;

struct GpParams {
  double location;  // mu, seconds; minimum duration
  double scale;     // lambda, seconds
  double shape;     // alpha, dimensionless; must be < 1/2

  GpParams(double mu, double lambda, double alpha);

  // Upper end of the support: finite only for negative shape.
  double upper_bound() const;
};

struct GpMoments {
  double mean;
  double variance;
};

GpMoments gp_moments(const GpParams& p);

// Inverse-CDF sample at uniform variate u in [0, 1).
double gp_sample(const GpParams& p, double u);

double gp_cdf(const GpParams& p, double t);

// Inverse CDF; p in [0, 1).
double gp_quantile(const GpParams& p, double prob);

// Long-run busy fraction of an alternating busy/idle process.
double duty_cycle_of(const GpParams& busy, const GpParams& idle);

// Finds busy/idle scales so that the mean cycle length is cycle_mean and the
// busy fraction is psi, with both sides sharing location mu and shape alpha.
// Throws if either side's required mean does not exceed mu.
std::pair<GpParams, GpParams> solve_scale_for_dc(double psi, double mu,
                                                 double alpha,
                                                 double cycle_mean);

}  // namespace css
