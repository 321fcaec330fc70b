// SPDX-License-Identifier: Apache-2.0
//
// Multi-channel primary-user traffic: per-group GP profiles, the spectrum
// plan, semi-Markov on/off trace generation and grid sampling.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "css/gp.hpp"
#include "css/rng.hpp"

namespace css {

struct ChannelProfile {
  int channel_id;
  double duty_cycle;  // busy fraction implied by the two parameter sets
  GpParams busy;
  GpParams idle;
};

struct GroupSpec {
  double duty_cycle;  // group label
  int count;
};

struct SpectrumPlan {
  int n_channels;
  std::vector<double> group_duty_cycles;  // labels, one per group
  std::vector<int> group_counts;
  std::vector<ChannelProfile> profiles;  // length n_channels
  std::vector<int> group_of;             // channel -> group index

  double mean_duty_cycle() const;
};

struct Period {
  bool busy;
  double duration;  // seconds
};

struct ActivityTrace {
  int channel_id;
  std::vector<Period> periods;  // strictly alternating states
  double total_span;            // requested span; last period may overhang
};

// Table rows with measured GP parameters (duty cycles ~0.29, 0.5, 0.71).
// Group labels within 0.02 of a row's duty cycle use that row verbatim.
struct MeasuredGpRow {
  double duty_cycle;
  GpParams busy;
  GpParams idle;
};
std::span<const MeasuredGpRow> measured_gp_rows();

// Default 7-group split of 128 channels with mean duty cycle ~0.1.
std::vector<GroupSpec> default_group_spec();

// Builds per-channel profiles. Groups near a measured row use it directly;
// other groups get scales solved for their duty cycle at a cycle mean of
// max(default_cycle_mean, 2.01*mu / min(psi, 1-psi)) so both sides stay
// above the location. Throws if the achieved mean duty cycle is more than
// 0.005 from target_mean.
SpectrumPlan build_channel_plan(int n_channels, std::span<const GroupSpec> groups,
                                double target_mean,
                                double default_cycle_mean = 2.0101,
                                double mu = 0.5, double alpha = 0.01);

// Alternating idle/busy trace covering at least `span` seconds; the initial
// state is Bernoulli(duty_cycle) so the trace starts in steady state.
ActivityTrace generate_trace(const ChannelProfile& profile, double span,
                             RngStream& rng);

// State at times v*ts for v = 0..v_count-1. Periods are left-closed: a
// period [t, t+T) owns t. Throws if the grid extends past the trace.
std::vector<std::uint8_t> sample_occupancy(const ActivityTrace& trace,
                                           double ts, int v_count);

// CSV rows (channel_id, state, duration_s), one per period.
void write_trace_csv(std::ostream& os, const ActivityTrace& trace,
                     bool header = true);

}  // namespace css
