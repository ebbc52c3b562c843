#pragma once

#include <cstdint>

#include "credal/types.hpp"

namespace credal {

// Counter-based substream derivation: one master seed plus a stream index
// give an independent generator, so chunked work is reproducible no
// matter how it is scheduled.
inline std::uint64_t splitmix64_step(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  splitmix64_step(s);
  return splitmix64_step(s);
}

// Small deterministic generator; the double path is pinned to 53-bit
// mantissa scaling so output does not depend on library distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64_step(state_); }

  // Uniform in [0, 1).
  Real next_double() {
    return static_cast<Real>(next() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (cached second value).
  Real next_gaussian();

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n);

 private:
  std::uint64_t state_;
  bool has_cache_ = false;
  Real cache_ = 0.0;
};

/// Uniform point of the unit simplex (normalized exponentials).
Vector random_simplex_point(Index d, SplitMix64& rng);

/// Uniform point on the unit sphere in R^d.
Vector random_sphere_point(Index d, SplitMix64& rng);

/// Random orthogonal k x k matrix built from Givens rotations with
/// angles scaled by `angle`; angle -> 0 approaches the identity.
Matrix random_rotation(Index k, Real angle, SplitMix64& rng);

}  // namespace credal
