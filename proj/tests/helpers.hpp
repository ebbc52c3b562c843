#pragma once

#include <initializer_list>
#include <vector>

#include "credal/polytope.hpp"
#include "credal/rng.hpp"
#include "credal/types.hpp"

namespace credal::testing {

inline Vector vec(std::initializer_list<Real> xs) {
  Vector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (Real x : xs) v(i++) = x;
  return v;
}

inline CredalPolytope poly(std::initializer_list<std::initializer_list<Real>> pts) {
  std::vector<Vector> cols;
  for (const auto& p : pts) cols.push_back(vec(p));
  return make_credal_polytope(cols);
}

inline CredalPolytope vacuous(Index d) {
  return make_credal_polytope(Matrix::Identity(d, d));
}

inline CredalPolytope random_polytope(Index d, Index points, SplitMix64& rng) {
  Matrix m(d, points);
  for (Index i = 0; i < points; ++i) m.col(i) = random_simplex_point(d, rng);
  return make_credal_polytope(m);
}

}  // namespace credal::testing
