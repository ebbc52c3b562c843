#include "credal/idm.hpp"

#include <cmath>
#include <numeric>

#include "credal/measures.hpp"
#include "credal/packing.hpp"
#include "credal/rng.hpp"
#include "credal/simplex.hpp"
#include "credal/volume.hpp"

namespace credal {

long IdmState::n() const {
  return std::accumulate(counts.begin(), counts.end(), 0L);
}

CredalPolytope idm_credal_set(const IdmState& state) {
  if (!(state.s > 0.0)) {
    throw ValidationError("InvalidHyperparameter", "s must be positive");
  }
  const Index d = state.d();
  if (d < 2) {
    throw ValidationError("InvalidLabelCount", "IDM needs at least 2 labels");
  }
  for (long c : state.counts) {
    if (c < 0) {
      throw ValidationError("InvalidCounts", "counts must be nonnegative");
    }
  }
  const Real denom = static_cast<Real>(state.n()) + state.s;
  Matrix verts(d, d);
  for (Index j = 0; j < d; ++j) {
    for (Index y = 0; y < d; ++y) {
      verts(y, j) = (static_cast<Real>(state.counts[static_cast<std::size_t>(y)]) +
                     (y == j ? state.s : 0.0)) /
                    denom;
    }
  }
  return make_credal_polytope(verts);
}

std::vector<CurveRow> idm_curve(const Vector& p_true, long n_max, Real s,
                                std::uint64_t seed) {
  if (n_max < 1) {
    throw ValidationError("InvalidCount", "n_max must be >= 1");
  }
  const Vector p = make_probability_vector(p_true);
  const Index d = p.size();

  // Cumulative distribution for inverse-CDF draws.
  Vector cdf(d);
  Real acc = 0.0;
  for (Index i = 0; i < d; ++i) {
    acc += p(i);
    cdf(i) = acc;
  }

  IdmState state;
  state.counts.assign(static_cast<std::size_t>(d), 0L);
  state.s = s;

  SplitMix64 rng(mix_seed(seed, 0x1D4));
  std::vector<CurveRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);

  CredalPolytope prev = idm_credal_set(state);
  for (long n = 0; n <= n_max; ++n) {
    if (n > 0) {
      const Real u = rng.next_double();
      Index label = 0;
      while (label + 1 < d && u > cdf(label)) ++label;
      state.counts[static_cast<std::size_t>(label)] += 1;
    }
    const CredalPolytope set = idm_credal_set(state);
    CurveRow row;
    row.n = n;
    row.volume = volume_exact(set).value;
    row.width = imprecision_width(set);
    row.max_entropy = max_entropy(set).value;
    row.dh_prev = n == 0 ? 0.0 : hausdorff_distance(set, prev);
    rows.push_back(row);
    prev = set;
  }
  return rows;
}

std::vector<ShrinkageRow> prior_shrinkage(Real eps, Index c_min, Index c_max) {
  if (c_min < 2 || c_max < c_min) {
    throw ValidationError("InvalidRange", "need 2 <= c_min <= c_max");
  }
  if (!(eps > 0.0)) {
    throw ValidationError("EpsilonTooLarge", "eps must be positive");
  }
  std::vector<ShrinkageRow> rows;
  for (Index c = c_min; c <= c_max; ++c) {
    const Real radius = simplex_circumradius(c);
    if (eps >= radius) {
      throw ValidationError("EpsilonTooLarge",
                            "eps exceeds the simplex circumradius at c = " +
                                std::to_string(c));
    }
    ShrinkageRow row;
    row.c = c;
    row.eps = eps;
    row.scale = 1.0 - eps / radius;
    // Scaling law of the homothety erosion; exact by construction.
    row.vol_ratio = std::pow(row.scale, static_cast<Real>(c - 1));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace credal
