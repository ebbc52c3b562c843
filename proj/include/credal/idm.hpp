#pragma once

#include <cstdint>
#include <vector>

#include "credal/polytope.hpp"
#include "credal/types.hpp"

namespace credal {

// Imprecise-Dirichlet-Model state: per-label observation counts and the
// prior-strength hyperparameter s.
struct IdmState {
  std::vector<long> counts;
  Real s = 1.0;

  long n() const;
  Index d() const { return static_cast<Index>(counts.size()); }
};

/// Credal set of the IDM: vertex j places the whole prior mass on label
/// j, P_j(y) = (count_y + s * 1{y=j}) / (n + s). This is the homothety of
/// the unit simplex with factor s/(n+s) about the posterior mean point;
/// n = 0 gives the vacuous simplex. s must be positive
/// (InvalidHyperparameter).
CredalPolytope idm_credal_set(const IdmState& state);

struct CurveRow {
  long n = 0;
  Real volume = 0.0;
  Real width = 0.0;
  Real max_entropy = 0.0;
  Real dh_prev = 0.0;  // Hausdorff distance to the previous set
};

/// Simulates n_max i.i.d. draws from p_true, updating the IDM state after
/// each draw, and reports one row per n = 0..n_max. The volume and width
/// columns shrink deterministically like (s/(n+s))^(d-1) and s/(n+s),
/// independent of the draws.
std::vector<CurveRow> idm_curve(const Vector& p_true, long n_max, Real s,
                                std::uint64_t seed);

struct ShrinkageRow {
  Index c = 0;        // parameter-space cardinality
  Real eps = 0.0;
  Real scale = 0.0;   // homothety factor of the eroded simplex
  Real vol_ratio = 0.0;  // Vol(eroded simplex) / Vol(simplex)
};

/// Ratio of the eps-eroded simplex volume to the simplex volume across a
/// range of cardinalities. The erosion is a homothety, so the ratio is
/// the exact scaling law (cross-checked against triangulation for small
/// c); eps must stay below the simplex circumradius for every c in range.
std::vector<ShrinkageRow> prior_shrinkage(Real eps, Index c_min, Index c_max);

}  // namespace credal
