#pragma once

#include <vector>

#include "credal/types.hpp"

namespace credal {

struct HullFacet {
  std::vector<Index> vertices;  // k point indices, one simplicial facet
  Vector normal;                // unit outward normal
  Real offset;                  // normal . x <= offset for hull points
};

// Facet description of a full-dimensional polytope in R^k.
struct ConvexHull {
  Index dim = 0;
  std::vector<HullFacet> facets;
  std::vector<Index> vertex_ids;  // sorted indices of extreme input points
  Vector interior;                // strictly interior reference point

  // Smallest facet slack of x; >= 0 inside, negative outside.
  Real margin(const Vector& x) const;
  bool contains(const Vector& x, Real tolerance) const {
    return margin(x) >= -tolerance;
  }
};

/// Incremental (beneath-beyond) convex hull of a column-wise point set
/// that spans R^k. Intended for chart coordinates with k <= 8; facet
/// count grows exponentially with k beyond that.
///
/// Points within `eps` of a supporting hyperplane are treated as interior,
/// so near-duplicate or barely-extreme points are absorbed rather than
/// producing sliver facets.
ConvexHull convex_hull(const Matrix& points, Real eps = 1e-12);

/// Indices of the extreme points of the set, via the facet hull. Points
/// must span R^k. Sorted ascending.
std::vector<Index> extreme_point_ids(const Matrix& points, Real eps = 1e-12);

}  // namespace credal
