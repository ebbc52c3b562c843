#include "credal/polytope.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "credal/nearest.hpp"
#include "credal/simplex.hpp"

namespace credal {

Event::Event(std::uint32_t m, Index labels) : mask(m), d(labels) {
  if (labels < 1 || labels > 31) {
    throw ValidationError("InvalidEvent", "label count out of range");
  }
  if (m & ~full_mask(labels)) {
    throw ValidationError("InvalidEvent", "mask outside label space");
  }
}

int Event::cardinality() const {
  return static_cast<int>(std::popcount(mask));
}

void Grouping::validate(Index joint_d) const {
  if (d1 < 1 || d2 < 1) {
    throw ValidationError("InvalidGrouping", "factor sizes must be >= 1");
  }
  if (static_cast<Index>(assign.size()) != joint_d) {
    throw ValidationError("InvalidGrouping",
                          "every joint label must be mapped");
  }
  std::set<std::pair<Index, Index>> seen;
  for (const auto& [i1, i2] : assign) {
    if (i1 < 0 || i1 >= d1 || i2 < 0 || i2 >= d2) {
      throw ValidationError("InvalidGrouping", "pair outside product grid");
    }
    if (!seen.insert({i1, i2}).second) {
      throw ValidationError("InvalidGrouping",
                            "assignment not injective into the grid");
    }
  }
}

Grouping Grouping::product(Index d1, Index d2) {
  Grouping g;
  g.d1 = d1;
  g.d2 = d2;
  for (Index i1 = 0; i1 < d1; ++i1) {
    for (Index i2 = 0; i2 < d2; ++i2) {
      g.assign.emplace_back(i1, i2);
    }
  }
  return g;
}

Grouping Grouping::diagonal() {
  Grouping g;
  g.d1 = 2;
  g.d2 = 2;
  g.assign = {{0, 0}, {1, 1}};
  return g;
}

Grouping Grouping::degenerate_first(Index d2) {
  Grouping g;
  g.d1 = 1;
  g.d2 = d2;
  for (Index i = 0; i < d2; ++i) g.assign.emplace_back(0, i);
  return g;
}

const ConvexHull& CredalPolytope::hull() const {
  if (!hull_) {
    throw NumericError("DimensionTooLarge",
                       "facet hull unavailable for affine dimension " +
                           std::to_string(affine_dim()));
  }
  return *hull_;
}

namespace {

bool lex_less(const Vector& a, const Vector& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (a(i) > b(i)) return false;
  }
  return false;
}

// Extreme points for affine dimension > 8: leave-one-out membership
// solves instead of facet enumeration.
std::vector<Index> extreme_ids_by_membership(const Matrix& pts, Real eps) {
  const Index n = pts.cols();
  std::vector<Index> ids;
  std::vector<bool> alive(n, true);
  for (Index i = 0; i < n; ++i) {
    Matrix others(pts.rows(), 0);
    for (Index j = 0; j < n; ++j) {
      if (j != i && alive[j]) {
        others.conservativeResize(Eigen::NoChange, others.cols() + 1);
        others.col(others.cols() - 1) = pts.col(j);
      }
    }
    if (others.cols() == 0) {
      ids.push_back(i);
      continue;
    }
    if (distance_to_hull(others, pts.col(i)) > eps) {
      ids.push_back(i);
    } else {
      alive[i] = false;
    }
  }
  return ids;
}

}  // namespace

CredalPolytope make_credal_polytope(const Matrix& points) {
  if (points.cols() == 0) {
    throw ValidationError("EmptyInput", "need at least one point");
  }
  const Index d = points.rows();
  if (d < 1) {
    throw ValidationError("DimensionMismatch", "label count must be >= 1");
  }

  Matrix clean(d, points.cols());
  for (Index i = 0; i < points.cols(); ++i) {
    clean.col(i) = make_probability_vector(points.col(i));
  }

  // Deduplicate (multisets collapse to sets).
  std::vector<Index> keep;
  for (Index i = 0; i < clean.cols(); ++i) {
    bool dup = false;
    for (Index j : keep) {
      if ((clean.col(i) - clean.col(j)).norm() <= tol::dedupe) {
        dup = true;
        break;
      }
    }
    if (!dup) keep.push_back(i);
  }
  Matrix unique(d, keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    unique.col(i) = clean.col(keep[i]);
  }

  CredalPolytope poly;
  poly.d_ = d;

  Chart chart = affine_hull_chart(unique);
  const Index k = chart.dim();

  std::vector<Index> extreme;
  if (k == 0) {
    extreme = {0};
  } else {
    const Matrix coords = chart.to_chart(unique);
    if (k <= CredalPolytope::kMaxExactDimension) {
      extreme = extreme_point_ids(coords, tol::dedupe);
    } else {
      extreme = extreme_ids_by_membership(coords, tol::dedupe);
    }
  }

  Matrix verts(d, extreme.size());
  for (std::size_t i = 0; i < extreme.size(); ++i) {
    verts.col(i) = unique.col(extreme[i]);
  }
  std::vector<Index> order(verts.cols());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    return lex_less(verts.col(a), verts.col(b));
  });
  poly.vertices_.resize(d, verts.cols());
  for (Index i = 0; i < verts.cols(); ++i) {
    poly.vertices_.col(i) = verts.col(order[i]);
  }

  // Rebuild the chart from the canonical vertex order so that chart
  // coordinates are reproducible, then cache the facet hull when exact
  // geometry is feasible.
  poly.chart_ = affine_hull_chart(poly.vertices_);
  poly.chart_vertices_ = poly.chart_.to_chart(poly.vertices_);
  const Index kk = poly.chart_.dim();
  if (kk >= 1 && kk <= CredalPolytope::kMaxExactDimension) {
    poly.hull_ = std::make_shared<const ConvexHull>(
        convex_hull(poly.chart_vertices_, tol::dedupe));
  }
  return poly;
}

CredalPolytope make_credal_polytope(const std::vector<Vector>& points) {
  if (points.empty()) {
    throw ValidationError("EmptyInput", "need at least one point");
  }
  const Index d = points.front().size();
  Matrix m(d, static_cast<Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d) {
      throw ValidationError("DimensionMismatch",
                            "points have differing label counts");
    }
    m.col(static_cast<Index>(i)) = points[i];
  }
  return make_credal_polytope(m);
}

bool contains(const CredalPolytope& poly, const Vector& p, Real tolerance) {
  if (p.size() != poly.label_count()) {
    throw ValidationError("DimensionMismatch",
                          "point and polytope label counts differ");
  }
  if (tolerance <= 0) {
    throw ValidationError("InvalidTolerance", "tolerance must be positive");
  }
  return distance_to_hull(poly.vertices(), p) <= tolerance;
}

Real distance_to(const CredalPolytope& poly, const Vector& p) {
  if (p.size() != poly.label_count()) {
    throw ValidationError("DimensionMismatch",
                          "point and polytope label counts differ");
  }
  return distance_to_hull(poly.vertices(), p);
}

bool contains_polytope(const CredalPolytope& outer,
                       const CredalPolytope& inner, Real tolerance) {
  for (Index i = 0; i < inner.vertex_count(); ++i) {
    if (!contains(outer, inner.vertex(i), tolerance)) return false;
  }
  return true;
}

CredalPolytope marginalize(const CredalPolytope& poly, const Grouping& g,
                           int which) {
  g.validate(poly.label_count());
  if (which != 0 && which != 1) {
    throw ValidationError("InvalidGrouping", "factor selector must be 0 or 1");
  }
  const Index dm = which == 0 ? g.d1 : g.d2;
  Matrix mapped = Matrix::Zero(dm, poly.vertex_count());
  for (Index v = 0; v < poly.vertex_count(); ++v) {
    for (Index j = 0; j < poly.label_count(); ++j) {
      const Index target =
          which == 0 ? g.assign[static_cast<std::size_t>(j)].first
                     : g.assign[static_cast<std::size_t>(j)].second;
      mapped(target, v) += poly.vertices()(j, v);
    }
  }
  return make_credal_polytope(mapped);
}

CredalPolytope strong_product(const CredalPolytope& p1,
                              const CredalPolytope& p2) {
  const Index d1 = p1.label_count();
  const Index d2 = p2.label_count();
  Matrix prod(d1 * d2, p1.vertex_count() * p2.vertex_count());
  Index col = 0;
  for (Index a = 0; a < p1.vertex_count(); ++a) {
    for (Index b = 0; b < p2.vertex_count(); ++b) {
      for (Index i = 0; i < d1; ++i) {
        prod.block(i * d2, col, d2, 1) =
            p1.vertices()(i, a) * p2.vertices().col(b);
      }
      ++col;
    }
  }
  return make_credal_polytope(prod);
}

CredalPolytope homothety(const CredalPolytope& poly, Real t) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw ValidationError("InvalidScale", "homothety factor must be in (0,1]");
  }
  const Vector c = poly.vertex_centroid();
  Matrix scaled(poly.label_count(), poly.vertex_count());
  for (Index i = 0; i < poly.vertex_count(); ++i) {
    scaled.col(i) = c + t * (poly.vertex(i) - c);
  }
  return make_credal_polytope(scaled);
}

}  // namespace credal
