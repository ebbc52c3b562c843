#pragma once

#include "credal/types.hpp"

namespace credal {

struct NearestPointResult {
  Vector point;    // nearest point of the hull to the query
  Real distance;   // Euclidean distance
};

/// Nearest point of conv(columns of V) to p, via Wolfe's min-norm-point
/// algorithm on the translated set {v_i - p}. Finite sequence of small
/// equality-constrained least-squares solves; the active vertex set never
/// exceeds dim+1 points (Caratheodory), so each solve is cheap.
NearestPointResult nearest_point_in_hull(const Matrix& vertices,
                                         const Vector& p);

/// Distance from p to conv(columns of V).
Real distance_to_hull(const Matrix& vertices, const Vector& p);

}  // namespace credal
