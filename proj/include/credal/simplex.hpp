#pragma once

#include "credal/types.hpp"

namespace credal {

/// Validates a raw vector as a point of the unit simplex: entries may dip
/// to -tol::sum (clamped to zero) and the sum may be off by tol::sum.
/// Returns the clamped, renormalized vector. Throws ValidationError
/// (InvalidProbabilityVector) otherwise.
Vector make_probability_vector(const Vector& raw);

/// d x d identity columns: the extreme points of the vacuous credal set.
Matrix simplex_vertex_matrix(Index d);

/// Max distance from a vertex of the regular simplex to its barycenter,
/// sqrt((d-1)/d). Circumradius of the geometric representation.
Real simplex_circumradius(Index d);

/// Inradius of the chart image of the unit simplex, 1/sqrt(d(d-1)).
Real simplex_inradius(Index d);

}  // namespace credal
