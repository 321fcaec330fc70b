// SPDX-License-Identifier: Apache-2.0
//
// Deterministic random streams. Every stochastic quantity in the simulator
// is drawn from a stream keyed by (master seed, purpose tag, indices), so a
// run is reproducible regardless of evaluation order or worker count.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string_view>

namespace css {

// splitmix64 finalizer; used both as the stream generator and the key mixer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (pairs cached).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  // Circular complex Gaussian with E{|z|^2} = variance.
  std::complex<double> cnormal(double variance) {
    const double s = std::sqrt(variance / 2.0);
    const double re = s * normal();
    const double im = s * normal();
    return {re, im};
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Collision-free stream derivation: hash(master, tag, a, b, c).
inline RngStream make_stream(std::uint64_t master, std::string_view tag,
                             std::uint64_t a = 0, std::uint64_t b = 0,
                             std::uint64_t c = 0) {
  std::uint64_t h = mix64(master ^ fnv1a(tag));
  h = mix64(h ^ (a + 0x9e3779b97f4a7c15ull));
  h = mix64(h ^ (b + 0x9e3779b97f4a7c15ull));
  h = mix64(h ^ (c + 0x9e3779b97f4a7c15ull));
  return RngStream(h);
}

}  // namespace css
