#include "credal/simplex.hpp"

#include <cmath>

namespace credal {

Vector make_probability_vector(const Vector& raw) {
  if (raw.size() < 1) {
    throw ValidationError("InvalidProbabilityVector", "empty vector");
  }
  if (!raw.allFinite()) {
    throw ValidationError("InvalidProbabilityVector", "non-finite entry");
  }
  if ((raw.array() < -tol::sum).any()) {
    throw ValidationError("InvalidProbabilityVector",
                          "negative entry beyond tolerance");
  }
  Vector p = raw.cwiseMax(0.0);
  const Real s = p.sum();
  if (std::abs(s - 1.0) > tol::sum + raw.size() * 1e-16) {
    throw ValidationError("InvalidProbabilityVector",
                          "entries sum to " + std::to_string(s));
  }
  return p / s;
}

Matrix simplex_vertex_matrix(Index d) {
  return Matrix::Identity(d, d);
}

Real simplex_circumradius(Index d) {
  return std::sqrt(static_cast<Real>(d - 1) / static_cast<Real>(d));
}

Real simplex_inradius(Index d) {
  return 1.0 / std::sqrt(static_cast<Real>(d) * static_cast<Real>(d - 1));
}

}  // namespace credal
