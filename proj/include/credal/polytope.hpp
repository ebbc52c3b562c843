#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "credal/chart.hpp"
#include "credal/hull.hpp"
#include "credal/types.hpp"

namespace credal {

// Subset of the label space {0, ..., d-1} as a bitmask.
struct Event {
  std::uint32_t mask = 0;
  Index d = 0;

  Event() = default;
  Event(std::uint32_t m, Index labels);

  Event complement() const { return Event(~mask & full_mask(d), d); }
  int cardinality() const;
  bool empty() const { return mask == 0; }
  bool full() const { return mask == full_mask(d); }

  static std::uint32_t full_mask(Index d) {
    return d >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << d) - 1);
  }
};

// Factorization of a joint label space: joint label j corresponds to the
// pair assign[j] = (index in Y1, index in Y2). The assignment must be
// injective into the d1 x d2 grid; it need not be surjective (the
// two-element diagonal space {(y1,y2),(y3,y4)} maps its labels to (0,0)
// and (1,1)).
struct Grouping {
  Index d1 = 0;
  Index d2 = 0;
  std::vector<std::pair<Index, Index>> assign;

  void validate(Index joint_d) const;

  // Full product grid, joint label j = i1*d2 + i2.
  static Grouping product(Index d1, Index d2);
  // The paper's two-element diagonal space: d1 = d2 = 2, labels on the
  // grid diagonal.
  static Grouping diagonal();
  // First factor collapsed to a single label (y1 = y3): d1 = 1.
  static Grouping degenerate_first(Index d2);
};

// Credal set as the convex hull of its extreme probability vectors.
// Vertices are stored column-wise in canonical (lexicographic) order.
// Immutable after construction; the isometric chart is always computed,
// the facet hull only when the affine dimension is at most
// kMaxExactDimension (facet counts explode beyond that).
class CredalPolytope {
 public:
  static constexpr Index kMaxExactDimension = 8;

  // Empty shell; meaningful instances come from make_credal_polytope.
  CredalPolytope() = default;

  Index label_count() const { return d_; }
  Index vertex_count() const { return vertices_.cols(); }
  const Matrix& vertices() const { return vertices_; }
  Vector vertex(Index i) const { return vertices_.col(i); }
  Vector vertex_centroid() const { return vertices_.rowwise().mean(); }

  Index affine_dim() const { return chart_.dim(); }
  const Chart& chart() const { return chart_; }
  // Vertices in chart coordinates (k x m).
  const Matrix& chart_vertices() const { return chart_vertices_; }
  bool has_hull() const { return hull_ != nullptr; }
  // Facet hull in chart coordinates; throws DimensionTooLarge for k > 8.
  const ConvexHull& hull() const;

  bool is_singleton() const { return vertices_.cols() == 1; }

  friend CredalPolytope make_credal_polytope(const Matrix&);

 private:
  Index d_ = 0;
  Matrix vertices_;
  Chart chart_;
  Matrix chart_vertices_;
  std::shared_ptr<const ConvexHull> hull_;
};

/// Builds a credal polytope from a column-wise set of probability vectors:
/// validates each point, deduplicates at tol::dedupe, extracts the extreme
/// points of the convex hull, and sorts them lexicographically.
CredalPolytope make_credal_polytope(const Matrix& points);

/// Convenience overload for an initializer-style list of points.
CredalPolytope make_credal_polytope(const std::vector<Vector>& points);

/// True iff p lies within `tolerance` of the polytope (nearest-point
/// distance in the ambient space).
bool contains(const CredalPolytope& poly, const Vector& p,
              Real tolerance = tol::membership);

/// Distance from an ambient point to the polytope.
Real distance_to(const CredalPolytope& poly, const Vector& p);

/// True iff every vertex of inner lies within `tolerance` of outer.
bool contains_polytope(const CredalPolytope& outer,
                       const CredalPolytope& inner,
                       Real tolerance = tol::membership);

/// Marginal credal set on factor 1 or 2 (which = 0 or 1): the linear
/// marginalization map is applied to every vertex and extreme points are
/// re-extracted.
CredalPolytope marginalize(const CredalPolytope& poly, const Grouping& g,
                           int which);

/// Strong-independence joint: convex hull of all tensor products of
/// extreme points, on the full product grid (label (i1,i2) -> i1*d2+i2).
CredalPolytope strong_product(const CredalPolytope& p1,
                              const CredalPolytope& p2);

/// Scales the polytope about its vertex centroid by t in (0, 1]. The
/// image stays inside the simplex by convexity.
CredalPolytope homothety(const CredalPolytope& poly, Real t);

}  // namespace credal
