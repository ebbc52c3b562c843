#pragma once

#include "credal/types.hpp"

namespace credal {

// Isometric coordinates of an affine hull. origin is the first point,
// basis has orthonormal columns spanning the direction space, so chart
// Lebesgue volume equals the k-dimensional Hausdorff measure of the
// embedded set.
struct Chart {
  Vector origin;
  Matrix basis;  // ambient_dim x k, orthonormal columns

  Index dim() const { return basis.cols(); }
  Index ambient_dim() const { return origin.size(); }

  Vector to_chart(const Vector& p) const { return basis.transpose() * (p - origin); }
  Vector from_chart(const Vector& x) const { return origin + basis * x; }

  // Column-wise versions.
  Matrix to_chart(const Matrix& pts) const {
    return basis.transpose() * (pts.colwise() - origin);
  }
  Matrix from_chart(const Matrix& xs) const {
    return (basis * xs).colwise() + origin;
  }

  // Distance from p to the affine hull (norm of the residual after
  // projecting onto the chart).
  Real off_hull_distance(const Vector& p) const;
};

/// Builds the isometric chart of the affine hull of a column-wise point
/// set. The affine dimension k is the rank of the difference matrix at
/// tol::rank (relative to the largest singular value).
Chart affine_hull_chart(const Matrix& points);

}  // namespace credal
