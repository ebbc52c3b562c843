#include "credal/nearest.hpp"

#include <Eigen/LU>
#include <algorithm>
#include <vector>

namespace credal {

namespace {

// Affine minimizer of ||Z alpha||^2 subject to sum(alpha) = 1 over the
// active columns, via the bordered Gram system.
Vector affine_minimizer(const Matrix& z, const std::vector<Index>& active) {
  const Index s = static_cast<Index>(active.size());
  Matrix sys = Matrix::Zero(s + 1, s + 1);
  for (Index a = 0; a < s; ++a) {
    for (Index b = 0; b <= a; ++b) {
      const Real g = z.col(active[a]).dot(z.col(active[b]));
      sys(a, b) = g;
      sys(b, a) = g;
    }
    sys(a, s) = 1.0;
    sys(s, a) = 1.0;
  }
  Vector rhs = Vector::Zero(s + 1);
  rhs(s) = 1.0;
  Vector sol = sys.fullPivLu().solve(rhs);
  return sol.head(s);
}

}  // namespace

NearestPointResult nearest_point_in_hull(const Matrix& vertices,
                                         const Vector& p) {
  const Index n = vertices.cols();
  if (n < 1 || vertices.rows() != p.size()) {
    throw ValidationError("DimensionMismatch",
                          "nearest_point_in_hull: bad shapes");
  }
  Matrix z = vertices.colwise() - p;

  // Start from the closest vertex.
  Index start = 0;
  Real best = z.col(0).squaredNorm();
  for (Index i = 1; i < n; ++i) {
    const Real s2 = z.col(i).squaredNorm();
    if (s2 < best) {
      best = s2;
      start = i;
    }
  }

  std::vector<Index> active = {start};
  Vector weights = Vector::Ones(1);
  Vector x = z.col(start);

  const Real scale2 = std::max<Real>(1.0, best);
  const Real eps = 1e-14 * scale2;
  const int max_outer = static_cast<int>(16 * (n + p.size())) + 64;

  for (int outer = 0; outer < max_outer; ++outer) {
    // Linear minimization oracle over all vertices.
    Index j = 0;
    Real dj = x.dot(z.col(0));
    for (Index i = 1; i < n; ++i) {
      const Real di = x.dot(z.col(i));
      if (di < dj) {
        dj = di;
        j = i;
      }
    }
    if (dj >= x.squaredNorm() - eps) break;  // optimality condition
    if (std::find(active.begin(), active.end(), j) == active.end()) {
      active.push_back(j);
      weights.conservativeResize(weights.size() + 1);
      weights(weights.size() - 1) = 0.0;
    }

    // Minor cycle: project onto the affine hull of the active set and
    // clip back into the convex hull, dropping vanished vertices.
    for (int inner = 0; inner < 2 * max_outer; ++inner) {
      Vector alpha = affine_minimizer(z, active);
      if ((alpha.array() > 1e-12).all()) {
        weights = alpha;
        break;
      }
      Real theta = 1.0;
      for (Index a = 0; a < alpha.size(); ++a) {
        if (alpha(a) < 1e-12) {
          const Real denom = weights(a) - alpha(a);
          if (denom > 0) theta = std::min(theta, weights(a) / denom);
        }
      }
      weights = (1.0 - theta) * weights + theta * alpha;
      std::vector<Index> kept;
      std::vector<Real> kept_w;
      for (Index a = 0; a < weights.size(); ++a) {
        if (weights(a) > 1e-12) {
          kept.push_back(active[a]);
          kept_w.push_back(weights(a));
        }
      }
      if (kept.empty()) {  // numeric underflow: keep the heaviest vertex
        Index heavy = 0;
        weights.maxCoeff(&heavy);
        kept.push_back(active[heavy]);
        kept_w.push_back(1.0);
      }
      active = std::move(kept);
      weights = Eigen::Map<Vector>(kept_w.data(), kept_w.size());
      weights /= weights.sum();
    }

    x.setZero();
    for (Index a = 0; a < static_cast<Index>(active.size()); ++a) {
      x += weights(a) * z.col(active[a]);
    }
  }

  NearestPointResult res;
  res.point = x + p;
  res.distance = x.norm();
  return res;
}

Real distance_to_hull(const Matrix& vertices, const Vector& p) {
  return nearest_point_in_hull(vertices, p).distance;
}

}  // namespace credal
