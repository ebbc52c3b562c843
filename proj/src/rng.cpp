#include "credal/rng.hpp"

#include <cmath>

namespace credal {

Real SplitMix64::next_gaussian() {
  if (has_cache_) {
    has_cache_ = false;
    return cache_;
  }
  Real u1 = next_double();
  while (u1 <= 0.0) u1 = next_double();
  const Real u2 = next_double();
  const Real r = std::sqrt(-2.0 * std::log(u1));
  cache_ = r * std::sin(2.0 * M_PI * u2);
  has_cache_ = true;
  return r * std::cos(2.0 * M_PI * u2);
}

std::uint64_t SplitMix64::next_below(std::uint64_t n) {
  if (n == 0) return 0;
  // Rejection to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % n;
}

Vector random_simplex_point(Index d, SplitMix64& rng) {
  Vector p(d);
  for (Index i = 0; i < d; ++i) {
    Real u = rng.next_double();
    while (u <= 0.0) u = rng.next_double();
    p(i) = -std::log(u);
  }
  return p / p.sum();
}

Vector random_sphere_point(Index d, SplitMix64& rng) {
  Vector p(d);
  Real n2 = 0.0;
  do {
    for (Index i = 0; i < d; ++i) p(i) = rng.next_gaussian();
    n2 = p.squaredNorm();
  } while (n2 < 1e-24);
  return p / std::sqrt(n2);
}

Matrix random_rotation(Index k, Real angle, SplitMix64& rng) {
  Matrix r = Matrix::Identity(k, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = i + 1; j < k; ++j) {
      const Real theta = angle * (2.0 * rng.next_double() - 1.0);
      const Real c = std::cos(theta);
      const Real s = std::sin(theta);
      Matrix g = Matrix::Identity(k, k);
      g(i, i) = c;
      g(j, j) = c;
      g(i, j) = -s;
      g(j, i) = s;
      r = g * r;
    }
  }
  return r;
}

}  // namespace credal
