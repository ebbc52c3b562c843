#include "credal/measures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace credal {

namespace {

constexpr Index kMaxEventLabels = 16;

void require_enumerable(Index d) {
  if (d > kMaxEventLabels) {
    throw ValidationError("TooManyLabels",
                          "event enumeration capped at 16 labels");
  }
}

// Subset sums of one vertex for every mask, by peeling the lowest bit.
std::vector<Real> all_event_sums(const Vector& p) {
  const std::size_t n = std::size_t{1} << p.size();
  std::vector<Real> sums(n, 0.0);
  for (std::size_t mask = 1; mask < n; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const int bit = std::countr_zero(mask);
    sums[mask] = sums[mask ^ low] + p(bit);
  }
  return sums;
}

// Lower envelope over every event mask.
std::vector<Real> lower_envelope(const CredalPolytope& poly) {
  const std::size_t n = std::size_t{1} << poly.label_count();
  std::vector<Real> lower(n, std::numeric_limits<Real>::infinity());
  lower[0] = 0.0;
  for (Index v = 0; v < poly.vertex_count(); ++v) {
    const std::vector<Real> sums = all_event_sums(poly.vertex(v));
    for (std::size_t mask = 1; mask < n; ++mask) {
      lower[mask] = std::min(lower[mask], sums[mask]);
    }
  }
  return lower;
}

Real entropy_bits(const Vector& p) {
  Real s = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) s -= p(i) * std::log2(p(i));
  }
  return s;
}

// d/dp of -p log2 p with probabilities clamped below 1e-12 inside the
// gradient only (the entropy itself is evaluated unclamped).
Vector entropy_gradient(const Vector& p) {
  Vector g(p.size());
  for (Index i = 0; i < p.size(); ++i) {
    const Real pi = std::max(p(i), 1e-12);
    g(i) = -(std::log2(pi) + 1.0 / M_LN2);
  }
  return g;
}

}  // namespace

Envelope event_envelope(const CredalPolytope& poly, const Event& event) {
  if (event.d != poly.label_count()) {
    throw ValidationError("InvalidEvent",
                          "event label count does not match the polytope");
  }
  Envelope env;
  env.lower = std::numeric_limits<Real>::infinity();
  env.upper = -std::numeric_limits<Real>::infinity();
  for (Index v = 0; v < poly.vertex_count(); ++v) {
    Real s = 0.0;
    for (Index j = 0; j < poly.label_count(); ++j) {
      if (event.mask & (std::uint32_t{1} << j)) s += poly.vertices()(j, v);
    }
    env.lower = std::min(env.lower, s);
    env.upper = std::max(env.upper, s);
  }
  return env;
}

Real imprecision_width(const CredalPolytope& poly) {
  const Index d = poly.label_count();
  require_enumerable(d);
  const std::size_t n = std::size_t{1} << d;
  std::vector<Real> lo(n, std::numeric_limits<Real>::infinity());
  std::vector<Real> hi(n, -std::numeric_limits<Real>::infinity());
  for (Index v = 0; v < poly.vertex_count(); ++v) {
    const std::vector<Real> sums = all_event_sums(poly.vertex(v));
    for (std::size_t mask = 1; mask + 1 < n; ++mask) {
      lo[mask] = std::min(lo[mask], sums[mask]);
      hi[mask] = std::max(hi[mask], sums[mask]);
    }
  }
  Real width = 0.0;
  for (std::size_t mask = 1; mask + 1 < n; ++mask) {
    width = std::max(width, hi[mask] - lo[mask]);
  }
  return width;
}

Real shannon_entropy(const Vector& p) {
  return entropy_bits(p);
}

MaxEntropyResult max_entropy(const CredalPolytope& poly, Real tolerance,
                             int max_iter) {
  if (tolerance <= 0) {
    throw ValidationError("InvalidTolerance", "tolerance must be positive");
  }
  MaxEntropyResult res;
  if (poly.is_singleton()) {
    res.value = entropy_bits(poly.vertex(0));
    return res;
  }

  // The vertex centroid is feasible and interior to the vertex hull; it
  // is already optimal for the vacuous set.
  Vector x = poly.vertex_centroid();
  Real fx = entropy_bits(x);
  for (int it = 0; it < max_iter; ++it) {
    res.iterations = it + 1;
    const Vector g = entropy_gradient(x);
    Index best = 0;
    Real best_dot = g.dot(poly.vertex(0));
    for (Index v = 1; v < poly.vertex_count(); ++v) {
      const Real dv = g.dot(poly.vertex(v));
      if (dv > best_dot) {
        best_dot = dv;
        best = v;
      }
    }
    const Vector s = poly.vertex(best);
    res.gap = g.dot(s - x);
    if (res.gap <= tolerance) {
      res.value = fx;
      return res;
    }

    // Exact line search: the directional derivative of the entropy along
    // [x, s] is decreasing, so bisect on its sign.
    const Vector dir = s - x;
    auto deriv = [&](Real t) {
      return entropy_gradient(x + t * dir).dot(dir);
    };
    Real step = 1.0;
    if (deriv(1.0) < 0.0) {
      Real lo = 0.0, hi = 1.0;
      for (int b = 0; b < 60; ++b) {
        const Real mid = 0.5 * (lo + hi);
        (deriv(mid) > 0.0 ? lo : hi) = mid;
      }
      step = 0.5 * (lo + hi);
    }
    x += step * dir;
    fx = entropy_bits(x);
  }
  res.value = fx;
  res.converged = false;
  return res;
}

MassAssignment mobius_mass(const CredalPolytope& poly) {
  const Index d = poly.label_count();
  require_enumerable(d);
  MassAssignment out;
  out.d = d;
  out.masses = lower_envelope(poly);
  // In-place Mobius transform over the subset lattice.
  const std::size_t n = out.masses.size();
  for (Index bit = 0; bit < d; ++bit) {
    const std::size_t b = std::size_t{1} << bit;
    for (std::size_t mask = 0; mask < n; ++mask) {
      if (mask & b) out.masses[mask] -= out.masses[mask ^ b];
    }
  }
  for (Real m : out.masses) {
    if (m < -1e-8) {
      out.has_negative_mass = true;
      break;
    }
  }
  return out;
}

HartleyResult generalized_hartley(const CredalPolytope& poly) {
  const MassAssignment mass = mobius_mass(poly);
  HartleyResult res;
  res.negative_mass_warning = mass.has_negative_mass;
  for (std::size_t mask = 1; mask < mass.masses.size(); ++mask) {
    const int card = std::popcount(mask);
    if (card > 1) {
      res.value += mass.masses[mask] * std::log2(static_cast<Real>(card));
    }
  }
  return res;
}

}  // namespace credal
