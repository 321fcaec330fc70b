// SPDX-License-Identifier: Apache-2.0

#include "css/traffic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace css {

double SpectrumPlan::mean_duty_cycle() const {
  double sum = 0.0;
  for (const auto& p : profiles) sum += p.duty_cycle;
  return sum / static_cast<double>(n_channels);
}

std::span<const MeasuredGpRow> measured_gp_rows() {
  static const std::array<MeasuredGpRow, 3> rows = {{
      {0.29, GpParams(0.5, 0.35, 0.0094), GpParams(0.5, 1.55, 0.0134)},
      {0.50, GpParams(0.5, 0.50, 0.0100), GpParams(0.5, 0.50, 0.0100)},
      {0.71, GpParams(0.5, 1.28, 0.0110), GpParams(0.5, 0.22, 0.0099)},
  }};
  return rows;
}

std::vector<GroupSpec> default_group_spec() {
  // Counts chosen so the weighted mean lands at ~0.1 over 128 channels.
  return {{0.01, 59}, {0.05, 30}, {0.1, 21}, {0.3, 9},
          {0.5, 4},   {0.7, 3},   {0.9, 2}};
}

SpectrumPlan build_channel_plan(int n_channels, std::span<const GroupSpec> groups,
                                double target_mean, double default_cycle_mean,
                                double mu, double alpha) {
  int total = 0;
  for (const auto& g : groups) total += g.count;
  if (total != n_channels)
    throw std::invalid_argument("build_channel_plan: group counts sum to " +
                                std::to_string(total) + ", expected " +
                                std::to_string(n_channels));

  SpectrumPlan plan;
  plan.n_channels = n_channels;
  int channel = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const GroupSpec& spec = groups[g];
    plan.group_duty_cycles.push_back(spec.duty_cycle);
    plan.group_counts.push_back(spec.count);

    const MeasuredGpRow* row = nullptr;
    for (const auto& r : measured_gp_rows())
      if (std::abs(r.duty_cycle - spec.duty_cycle) <= 0.02) row = &r;

    for (int k = 0; k < spec.count; ++k, ++channel) {
      if (row != nullptr) {
        plan.profiles.push_back({channel, duty_cycle_of(row->busy, row->idle),
                                 row->busy, row->idle});
      } else {
        // Keep both per-state means above the location; extreme duty cycles
        // get proportionally longer cycles.
        const double side = std::min(spec.duty_cycle, 1.0 - spec.duty_cycle);
        const double cycle_mean =
            std::max(default_cycle_mean, 2.01 * mu / side);
        auto [busy, idle] =
            solve_scale_for_dc(spec.duty_cycle, mu, alpha, cycle_mean);
        plan.profiles.push_back(
            {channel, duty_cycle_of(busy, idle), busy, idle});
      }
      plan.group_of.push_back(static_cast<int>(g));
    }
  }

  const double achieved = plan.mean_duty_cycle();
  if (std::abs(achieved - target_mean) > 0.005)
    throw std::invalid_argument(
        "build_channel_plan: achieved mean duty cycle " +
        std::to_string(achieved) + " violates target " +
        std::to_string(target_mean));
  return plan;
}

ActivityTrace generate_trace(const ChannelProfile& profile, double span,
                             RngStream& rng) {
  if (!(span > 0.0)) throw std::invalid_argument("generate_trace: span <= 0");
  ActivityTrace trace;
  trace.channel_id = profile.channel_id;
  trace.total_span = span;
  bool busy = rng.uniform() < profile.duty_cycle;
  double elapsed = 0.0;
  while (elapsed < span) {
    const GpParams& p = busy ? profile.busy : profile.idle;
    const double d = gp_sample(p, rng.uniform());
    trace.periods.push_back({busy, d});
    elapsed += d;
    busy = !busy;
  }
  return trace;
}

std::vector<std::uint8_t> sample_occupancy(const ActivityTrace& trace,
                                           double ts, int v_count) {
  if (!(ts > 0.0) || v_count < 0)
    throw std::invalid_argument("sample_occupancy: bad grid");
  std::vector<std::uint8_t> out(static_cast<std::size_t>(v_count));
  std::size_t idx = 0;
  double period_end =
      trace.periods.empty() ? 0.0 : trace.periods[0].duration;
  for (int v = 0; v < v_count; ++v) {
    const double t = static_cast<double>(v) * ts;
    while (t >= period_end) {
      ++idx;
      if (idx >= trace.periods.size())
        throw std::out_of_range("sample_occupancy: grid extends past trace");
      period_end += trace.periods[idx].duration;
    }
    out[static_cast<std::size_t>(v)] = trace.periods[idx].busy ? 1 : 0;
  }
  return out;
}

void write_trace_csv(std::ostream& os, const ActivityTrace& trace,
                     bool header) {
  if (header) os << "channel_id,state,duration_s\n";
  for (const auto& p : trace.periods)
    os << trace.channel_id << ',' << (p.busy ? "busy" : "idle") << ','
       << p.duration << '\n';
}

}  // namespace css
