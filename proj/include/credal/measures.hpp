#pragma once

#include <vector>

#include "credal/polytope.hpp"
#include "credal/types.hpp"

namespace credal {

struct Envelope {
  Real lower = 0.0;
  Real upper = 0.0;
};

/// Lower/upper probability of an event: min/max over vertices of the
/// event's coordinate sum (a linear functional attains its extrema at
/// extreme points). Satisfies upper(A) = 1 - lower(complement(A)).
Envelope event_envelope(const CredalPolytope& poly, const Event& event);

/// Max over all nonempty proper events of upper - lower. Enumerates 2^d
/// events; d <= 16 (TooManyLabels beyond).
Real imprecision_width(const CredalPolytope& poly);

/// Shannon entropy in bits, with 0 log 0 := 0.
Real shannon_entropy(const Vector& p);

struct MaxEntropyResult {
  Real value = 0.0;   // bits
  Real gap = 0.0;     // final duality gap
  int iterations = 0;
  bool converged = true;
};

/// Maximal entropy over the polytope by conditional-gradient iteration:
/// the linear subproblem is an exact argmax of the gradient inner product
/// over the vertex list, followed by exact line search on the segment
/// (the entropy is concave, so the duality gap certifies optimality).
/// Returns the best value with converged = false if the gap is still
/// above tol after max_iter iterations.
MaxEntropyResult max_entropy(const CredalPolytope& poly, Real tolerance = 1e-6,
                             int max_iter = 10000);

// Mobius representation of the lower probability; masses indexed by event
// mask (size 2^d).
struct MassAssignment {
  Index d = 0;
  std::vector<Real> masses;
  bool has_negative_mass = false;

  Real mass(const Event& e) const { return masses[e.mask]; }
};

/// Mobius inversion of the lower envelope:
/// m(A) = sum_{B subset A} (-1)^{|A\B|} lower(B). Masses sum to 1 and
/// reproduce the lower envelope under the zeta transform. d <= 16.
MassAssignment mobius_mass(const CredalPolytope& poly);

struct HartleyResult {
  Real value = 0.0;  // bits
  bool negative_mass_warning = false;
};

/// Generalized Hartley measure GH = sum_A m(A) log2 |A|. Zero iff all
/// Mobius mass sits on singletons. When the lower envelope is not
/// 2-monotone some masses are negative; GH is still reported with the
/// warning flag set.
HartleyResult generalized_hartley(const CredalPolytope& poly);

}  // namespace credal
