#include "credal/lift.hpp"

#include <algorithm>
#include <cmath>

#include "credal/axioms.hpp"
#include "credal/simplex.hpp"
#include "credal/volume.hpp"

namespace credal {

namespace {

// Vertices of the apex tower: the face spanned by the first d' basis
// vectors plus one apex per remaining basis vector, pulled from the face
// centroid toward that vector by t_j.
Matrix tower_vertices(Index d_source, Index d_target,
                      const std::vector<Real>& pulls) {
  Vector g = Vector::Zero(d_target);
  for (Index i = 0; i < d_source; ++i) g(i) = 1.0 / static_cast<Real>(d_source);
  Matrix verts(d_target, d_source + static_cast<Index>(pulls.size()));
  verts.setZero();
  for (Index i = 0; i < d_source; ++i) verts(i, i) = 1.0;
  for (std::size_t j = 0; j < pulls.size(); ++j) {
    const Real t = pulls[j];
    Vector apex = (1.0 - t) * g;
    apex(d_source + static_cast<Index>(j)) += t;
    verts.col(d_source + static_cast<Index>(j)) = apex;
  }
  return verts;
}

Real tower_volume(Index d_source, Index d_target,
                  const std::vector<Real>& pulls) {
  const auto k = make_credal_polytope(tower_vertices(d_source, d_target, pulls));
  return volume_fixed_dim(k, d_target - 1);
}

EmbeddingSpec face_embedding_spec(Index d_source, Index d_target) {
  // Rows span the source sum-zero directions (padded) plus the all-ones
  // direction, so apex directions e_j - g are annihilated and the base
  // face maps onto the source simplex identically.
  const Matrix u_src =
      affine_hull_chart(Matrix::Identity(d_source, d_source)).basis;
  Matrix u_pad = Matrix::Zero(d_target, d_source - 1);
  u_pad.topRows(d_source) = u_src;
  const Vector gamma_src =
      Vector::Ones(d_source) / std::sqrt(static_cast<Real>(d_source));
  const Vector gamma_tgt =
      Vector::Ones(d_target) / std::sqrt(static_cast<Real>(d_target));
  EmbeddingSpec spec;
  spec.V = u_src * u_pad.transpose() + gamma_src * gamma_tgt.transpose();
  spec.b = gamma_src * (1.0 / std::sqrt(static_cast<Real>(d_source)) -
                        1.0 / std::sqrt(static_cast<Real>(d_target)));
  return spec;
}

}  // namespace

LiftResult lift_probability_set(const CredalPolytope& p, Index d_target) {
  const Index d_source = p.label_count();
  if (d_source > d_target) {
    throw ValidationError("InfeasibleEmbedding",
                          "target label space smaller than the source");
  }
  LiftResult res;
  res.source_volume = volume_fixed_dim(p, d_source - 1);
  if (d_source == d_target) {  // identity lift
    res.lifted = p;
    res.spec.V = Matrix::Identity(d_source, d_source);
    res.spec.b = Vector::Zero(d_source);
    res.lifted_volume = res.source_volume;
    res.gap = 0.0;
    return res;
  }
  if (d_target - 1 > CredalPolytope::kMaxExactDimension) {
    throw NumericError("DimensionTooLarge",
                       "lift search needs exact volumes (d_target <= 9)");
  }

  const Real target = res.source_volume;
  const std::size_t m = static_cast<std::size_t>(d_target - d_source);
  std::vector<Real> pulls(m, 1.0);

  auto objective = [&](const std::vector<Real>& t) {
    return std::abs(tower_volume(d_source, d_target, t) - target);
  };

  // Coordinate sweeps: 33-point grid per parameter, then a ternary
  // refinement (the objective is |affine| in each coordinate). Ties take
  // the smallest coordinate value, so the final parameter vector is the
  // lexicographically-first minimizer.
  Real best = objective(pulls);
  for (int sweep = 0; sweep < 10 && best > 1e-8; ++sweep) {
    const Real before = best;
    for (std::size_t j = 0; j < m; ++j) {
      Real best_t = pulls[j];
      constexpr int kGrid = 33;
      for (int gi = 0; gi < kGrid; ++gi) {
        const Real t = static_cast<Real>(gi) / (kGrid - 1);
        std::vector<Real> trial = pulls;
        trial[j] = t;
        const Real f = objective(trial);
        if (f < best - 1e-15 || (f <= best + 1e-15 && t < best_t)) {
          best = f;
          best_t = t;
        }
      }
      Real lo = std::max(0.0, best_t - 1.0 / (kGrid - 1));
      Real hi = std::min(1.0, best_t + 1.0 / (kGrid - 1));
      for (int it = 0; it < 100 && hi - lo > 1e-12; ++it) {
        const Real t1 = lo + (hi - lo) / 3.0;
        const Real t2 = hi - (hi - lo) / 3.0;
        std::vector<Real> a = pulls, b = pulls;
        a[j] = t1;
        b[j] = t2;
        if (objective(a) <= objective(b)) {
          hi = t2;
        } else {
          lo = t1;
        }
      }
      std::vector<Real> refined = pulls;
      refined[j] = 0.5 * (lo + hi);
      const Real f = objective(refined);
      if (f < best) {
        best = f;
        best_t = refined[j];
      }
      pulls[j] = best_t;
    }
    if (before - best < 1e-12) break;
  }

  res.params = pulls;
  res.lifted = make_credal_polytope(tower_vertices(d_source, d_target, pulls));
  res.lifted_volume = volume_fixed_dim(res.lifted, d_target - 1);
  res.gap = std::abs(res.lifted_volume - target);
  res.spec = face_embedding_spec(d_source, d_target);
  return res;
}

Real relative_volume_variation(const CredalPolytope& p_n,
                               const CredalPolytope& k) {
  if (p_n.label_count() != k.label_count()) {
    throw ValidationError("DimensionMismatch",
                          "sets live on different label spaces");
  }
  const Index dim = p_n.label_count() - 1;
  const Real ref = volume_fixed_dim(p_n, dim);
  if (!(ref > 0.0)) {
    throw ValidationError("ZeroReferenceVolume",
                          "reference set has zero volume at dimension " +
                              std::to_string(dim));
  }
  return std::abs(ref - volume_fixed_dim(k, dim)) / ref;
}

LiftA3Pair lift_a3_failure_pair(Real segment_length, Real triangle_height) {
  LiftA3Pair pair;
  pair.p = example_triangle(segment_length, triangle_height);
  pair.q_embedded = example_segment(segment_length);

  // The same segment seen on its own two-label space.
  const Real half = 0.5 * segment_length / std::sqrt(2.0);
  Matrix q(2, 2);
  q.col(0) = Vector{{0.5 - half, 0.5 + half}};
  q.col(1) = Vector{{0.5 + half, 0.5 - half}};
  pair.q_source = make_credal_polytope(q);

  pair.nested = contains_polytope(pair.p, pair.q_embedded) &&
                pair.p.vertex_count() > pair.q_embedded.vertex_count();
  pair.lift = lift_probability_set(pair.q_source, 3);
  pair.lift_escapes = !contains_polytope(pair.p, pair.lift.lifted);
  return pair;
}

}  // namespace credal
