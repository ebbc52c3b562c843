#pragma once

#include <cstdint>
#include <vector>

#include "credal/polytope.hpp"
#include "credal/types.hpp"

namespace credal {

/// Hausdorff distance between two credal polytopes. The distance to a
/// convex set is a convex function, so the sup over each set is attained
/// at a vertex; each vertex distance is a nearest-point solve.
Real hausdorff_distance(const CredalPolytope& p, const CredalPolytope& q);

/// Constructive inner perturbation: the centroid homothety with factor
/// 1 - eps/R, where R is the largest vertex-centroid distance. This gives
/// exactly hausdorff_distance(P, Q) = eps and Q strictly inside P.
/// eps must lie in (0, R) (EpsilonTooLarge otherwise).
CredalPolytope erode(const CredalPolytope& p, Real eps);

struct PackingResult {
  Real radius = 0.0;
  Matrix centers;           // chart coordinates, one column per ball
  Index count = 0;          // lower bound on the packing number
  int restarts_used = 0;
  Real grid_pitch = 0.0;
  // Certificate of the packing properties on the returned centers:
  // ball containment slack per center (>= 0) and the smallest pairwise
  // center distance minus 2r (>= -1e-12).
  Vector clearance;
  Real min_separation_slack = 0.0;
  // Greedy maximality verified against the candidate grid of the winning
  // restart: no grid point can be added.
  bool maximal_certified = false;
};

/// Greedy maximal packing of balls of radius r inside the polytope, in
/// chart coordinates. Candidates come from a grid of pitch r/4 anchored
/// at both bounding-box corners; restart 0 scans boundary-first, later
/// restarts jitter the grid (amplitude r/8) and randomize the order, and
/// the best count wins. Counts are lower bounds on the packing number.
/// Requires affine dimension in [1, 8].
PackingResult greedy_packing(const CredalPolytope& p, Real r,
                             std::uint64_t seed = 0, int restarts = 16);

/// Same, with centers restricted to P minus the interior of Q (balls must
/// avoid Q): the shell packing used by the robustness experiment. Q must
/// share P's affine hull.
PackingResult greedy_shell_packing(const CredalPolytope& p,
                                   const CredalPolytope& q, Real r,
                                   std::uint64_t seed = 0, int restarts = 16);

struct Theorem1Report {
  Index d = 0;
  Real eps = 0.0;
  Real r = 0.0;
  Real vol_p = 0.0;
  Real vol_q = 0.0;
  Real vol_q_prime = 0.0;  // Vol(P) - Vol(Q), the shell volume
  Real lhs = 0.0;          // (Vol(P) - Vol(Q')) / Vol(P) = Vol(Q)/Vol(P)
  Real rhs = 0.0;          // 1 - (1 - eps/r)^d
  Real shell_ratio = 0.0;  // Vol(Q')/Vol(P), the complementary reading
  Index n_pack_p = 0;        // greedy estimate of N^pack_r(P)
  Index n_pack_shell = 0;    // greedy estimate of N^pack_{r-eps}(Q')
  Real c_hat_p = 0.0;        // N_r(P) * Vol(B_r) / Vol(P)
  Real c_hat_shell = 0.0;    // N_{r-eps}(Q') * Vol(B_{r-eps}) / Vol(Q')
  bool identity_ok = false;      // Vol(Q) + Vol(Q') = Vol(P) within 1e-10
  bool condition_c_ok = false;   // certificate N_r(P) >= N_{r-eps}(Q')
  bool inequality_evaluated = false;  // only when the certificate holds
  bool inequality_holds = false;      // lhs >= rhs
  bool estimates_uncertain = true;    // packing numbers are greedy bounds
};

/// Runs the boundary-robustness experiment on P = (a homothety of) the
/// unit simplex: erodes by eps, packs P with radius r and the shell with
/// radius r - eps, and fills the report. Requires 0 < eps < r
/// (InvalidRadii). Volumes are exact up to affine dimension 8,
/// Monte Carlo beyond.
Theorem1Report theorem1_experiment(Index d, Real eps, Real r,
                                   Real base_scale = 1.0,
                                   std::uint64_t seed = 0, int restarts = 16,
                                   std::uint64_t mc_samples = 1000000);

/// Optimal sphere-packing density of R^d, known only for d in
/// {1, 2, 3, 8, 24} (UnknownDimension otherwise).
Real c_star(Index d);

struct CarlPajorReport {
  Index d = 0;
  Index m = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Real bound = 0.0;      // (4 sqrt(log m / d))^d, natural log
  Real ratio = 0.0;      // MC estimate of Vol(P)/Vol(unit ball)
  Real std_error = 0.0;
  Index hull_dim = 0;    // affine dimension of the sampled hull
};

/// Samples m points uniformly on the unit sphere in R^d, forms their
/// convex hull and Monte Carlo estimates Vol(hull)/Vol(ball) by sampling
/// in the ball. Degenerate hulls (affine dimension < d) report ratio 0.
CarlPajorReport carl_pajor_experiment(Index d, Index m, std::uint64_t samples,
                                      std::uint64_t seed = 0);

}  // namespace credal
