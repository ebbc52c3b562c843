#pragma once

#include <vector>

#include "credal/polytope.hpp"
#include "credal/types.hpp"

namespace credal {

// Affine map phi(x) = V x + b with row-orthonormal V, sending the target
// simplex onto the source simplex (the base face maps identically, apex
// directions are annihilated).
struct EmbeddingSpec {
  Matrix V;  // d_source x d_target, V V^T = I
  Vector b;

  Vector apply(const Vector& x) const { return V * x + b; }
};

struct LiftResult {
  CredalPolytope lifted;     // K, a polytope in the target simplex
  EmbeddingSpec spec;
  Real gap = 0.0;            // | Vol_{d-1}(K) - Vol_{d'-1}(P) |
  Real source_volume = 0.0;  // Vol_{d'-1}(P)
  Real lifted_volume = 0.0;  // Vol_{d-1}(K)
  std::vector<Real> params;  // pull factors of the apex tower
};

/// Lifts a credal set on d' labels into the simplex on d_target labels:
/// an isometric copy of the source simplex sits on the face spanned by
/// the first d' basis vectors, and a tower of apexes is pulled from the
/// face centroid toward the remaining basis vectors by factors t_j in
/// [0, 1]. The (d-1)-volume of the tower is continuous and increasing in
/// every t_j, reaching the full target simplex at t = 1, so the search
/// (33-point grid per parameter plus coordinate descent, ties broken by
/// the lexicographically-first parameter vector) drives the volume gap to
/// zero whenever the source volume does not exceed the simplex volume.
/// d_target == d' returns the identity lift.
LiftResult lift_probability_set(const CredalPolytope& p, Index d_target);

/// |Vol(P_n) - Vol(K)| / Vol(P_n), both volumes at dimension d-1 of the
/// common ambient simplex. ZeroReferenceVolume when the denominator
/// vanishes.
Real relative_volume_variation(const CredalPolytope& p_n,
                               const CredalPolytope& k);

struct LiftA3Pair {
  CredalPolytope p;         // thin triangle in the 3-label simplex
  CredalPolytope q_source;  // segment in the 2-label simplex
  CredalPolytope q_embedded;  // the segment placed inside P
  LiftResult lift;          // lift of the segment back into 3 labels
  bool nested = false;        // q_embedded is strictly inside P
  bool lift_escapes = false;  // lift(Q) is not contained in P
};

/// Constructs the monotonicity-failure witness: a segment Q strictly
/// inside a thin triangle P whose lift has so much volume that it leaves
/// P entirely.
LiftA3Pair lift_a3_failure_pair(Real segment_length = 0.5,
                                Real triangle_height = 0.05);

}  // namespace credal
