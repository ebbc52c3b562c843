#include "credal/hull.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <limits>
#include <map>

namespace credal {

namespace {

// Unit normal of the hyperplane through the k facet points, oriented away
// from `interior`. Returns (normal, offset).
std::pair<Vector, Real> facet_plane(const Matrix& pts,
                                    const std::vector<Index>& ids,
                                    const Vector& interior) {
  const Index k = pts.rows();
  Matrix diffs(k, k - 1);
  for (Index j = 1; j < k; ++j) {
    diffs.col(j - 1) = pts.col(ids[j]) - pts.col(ids[0]);
  }
  // Last column of the full Q factor is orthogonal to all difference
  // vectors, i.e. the facet normal.
  Eigen::HouseholderQR<Matrix> qr(diffs);
  Matrix q = qr.householderQ();
  Vector normal = q.col(k - 1);
  Real offset = normal.dot(pts.col(ids[0]));
  if (normal.dot(interior) > offset) {
    normal = -normal;
    offset = -offset;
  }
  return {normal, offset};
}

ConvexHull hull_1d(const Matrix& pts) {
  Index lo = 0, hi = 0;
  for (Index i = 1; i < pts.cols(); ++i) {
    if (pts(0, i) < pts(0, lo)) lo = i;
    if (pts(0, i) > pts(0, hi)) hi = i;
  }
  ConvexHull hull;
  hull.dim = 1;
  hull.interior = Vector::Constant(1, 0.5 * (pts(0, lo) + pts(0, hi)));
  HullFacet fa{{lo}, Vector::Constant(1, -1.0), -pts(0, lo)};
  HullFacet fb{{hi}, Vector::Constant(1, 1.0), pts(0, hi)};
  hull.facets = {fa, fb};
  hull.vertex_ids = {lo, hi};
  std::sort(hull.vertex_ids.begin(), hull.vertex_ids.end());
  hull.vertex_ids.erase(
      std::unique(hull.vertex_ids.begin(), hull.vertex_ids.end()),
      hull.vertex_ids.end());
  return hull;
}

// Greedy affinely-independent seed: k+1 point indices spanning R^k.
std::vector<Index> initial_simplex_ids(const Matrix& pts, Real eps) {
  const Index k = pts.rows();
  const Index n = pts.cols();
  std::vector<Index> ids = {0};
  Matrix basis(k, 0);  // orthonormal directions accumulated so far
  while (static_cast<Index>(ids.size()) < k + 1) {
    Real best = -1.0;
    Index best_i = -1;
    Vector best_res;
    for (Index i = 0; i < n; ++i) {
      Vector r = pts.col(i) - pts.col(ids[0]);
      if (basis.cols() > 0) r -= basis * (basis.transpose() * r);
      const Real rn = r.norm();
      if (rn > best) {
        best = rn;
        best_i = i;
        best_res = r;
      }
    }
    if (best <= eps) {
      throw NumericError("DegenerateHull",
                         "points do not span the chart space");
    }
    ids.push_back(best_i);
    basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
    basis.col(basis.cols() - 1) = best_res / best;
  }
  return ids;
}

}  // namespace

Real ConvexHull::margin(const Vector& x) const {
  Real m = std::numeric_limits<Real>::infinity();
  for (const auto& f : facets) {
    m = std::min(m, f.offset - f.normal.dot(x));
  }
  return m;
}

ConvexHull convex_hull(const Matrix& pts, Real eps) {
  const Index k = pts.rows();
  const Index n = pts.cols();
  if (k < 1) {
    throw ValidationError("InvalidInput", "convex_hull needs dimension >= 1");
  }
  if (n < k + 1 && k > 1) {
    throw NumericError("DegenerateHull", "too few points for dimension");
  }
  if (k == 1) return hull_1d(pts);

  const Real scale =
      (pts.rowwise().maxCoeff() - pts.rowwise().minCoeff()).norm();
  const Real vis_eps = eps * std::max<Real>(1.0, scale);

  const std::vector<Index> seed = initial_simplex_ids(pts, vis_eps);
  ConvexHull hull;
  hull.dim = k;
  hull.interior = Vector::Zero(k);
  for (Index id : seed) hull.interior += pts.col(id);
  hull.interior /= static_cast<Real>(seed.size());

  std::vector<bool> seeded(n, false);
  for (Index id : seed) seeded[id] = true;
  for (Index drop = 0; drop < k + 1; ++drop) {
    std::vector<Index> ids;
    for (Index j = 0; j < k + 1; ++j) {
      if (j != drop) ids.push_back(seed[j]);
    }
    auto [normal, offset] = facet_plane(pts, ids, hull.interior);
    hull.facets.push_back({std::move(ids), std::move(normal), offset});
  }

  for (Index p = 0; p < n; ++p) {
    if (seeded[p]) continue;
    const Vector x = pts.col(p);

    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < hull.facets.size(); ++f) {
      if (hull.facets[f].normal.dot(x) - hull.facets[f].offset > vis_eps) {
        visible.push_back(f);
      }
    }
    if (visible.empty()) continue;  // beneath every facet

    // Ridges of visible facets that are shared with an invisible facet
    // form the horizon; ridges shared between two visible facets vanish.
    std::map<std::vector<Index>, std::pair<int, std::vector<Index>>> ridges;
    for (std::size_t f : visible) {
      const auto& verts = hull.facets[f].vertices;
      for (std::size_t drop = 0; drop < verts.size(); ++drop) {
        std::vector<Index> ridge;
        for (std::size_t j = 0; j < verts.size(); ++j) {
          if (j != drop) ridge.push_back(verts[j]);
        }
        std::vector<Index> key = ridge;
        std::sort(key.begin(), key.end());
        auto it = ridges.find(key);
        if (it == ridges.end()) {
          ridges.emplace(std::move(key), std::make_pair(1, std::move(ridge)));
        } else {
          it->second.first += 1;
        }
      }
    }

    std::vector<HullFacet> next;
    next.reserve(hull.facets.size());
    std::vector<bool> is_visible(hull.facets.size(), false);
    for (std::size_t f : visible) is_visible[f] = true;
    for (std::size_t f = 0; f < hull.facets.size(); ++f) {
      if (!is_visible[f]) next.push_back(std::move(hull.facets[f]));
    }
    for (auto& [key, entry] : ridges) {
      if (entry.first != 1) continue;  // interior ridge
      std::vector<Index> ids = entry.second;
      ids.push_back(p);
      auto [normal, offset] = facet_plane(pts, ids, hull.interior);
      next.push_back({std::move(ids), std::move(normal), offset});
    }
    hull.facets = std::move(next);
  }

  std::vector<bool> on_hull(n, false);
  for (const auto& f : hull.facets) {
    for (Index id : f.vertices) on_hull[id] = true;
  }
  for (Index i = 0; i < n; ++i) {
    if (on_hull[i]) hull.vertex_ids.push_back(i);
  }
  return hull;
}

std::vector<Index> extreme_point_ids(const Matrix& pts, Real eps) {
  if (pts.rows() == 0 || pts.cols() == 1) {
    return {0};
  }
  return convex_hull(pts, eps).vertex_ids;
}

}  // namespace credal
