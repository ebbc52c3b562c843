#pragma once

#include <cstdint>
#include <string>

#include "credal/polytope.hpp"
#include "credal/types.hpp"

namespace credal {

struct VolumeResult {
  Index k = 0;          // affine dimension the volume was taken at
  Real value = 0.0;     // k-dimensional Hausdorff measure
  Real std_error = 0.0; // 0 for exact results
  std::string method;   // "exact" or "monte-carlo"
};

/// (d-1)-dimensional Hausdorff measure of the unit simplex embedded in
/// R^d: sqrt(d)/(d-1)!. Evaluated in log space so large d does not
/// overflow the factorial.
Real simplex_volume(Index d);

/// Volume of the unit ball in R^k: pi^(k/2) / Gamma(k/2 + 1).
Real unit_ball_volume(Index k);

/// Exact volume at the polytope's own affine dimension k: vertices are
/// mapped to the isometric chart, the facet hull is fan-triangulated from
/// the first canonical vertex, and |det|/k! terms are summed. A point has
/// volume 0. Requires k <= 8 (DimensionTooLarge otherwise; use volume_mc).
VolumeResult volume_exact(const CredalPolytope& poly);

/// Hit-or-miss Monte Carlo estimate in chart coordinates: samples
/// uniformly in the chart bounding box and counts membership hits.
/// Deterministic for fixed (seed, samples): sampling is chunked with
/// per-chunk counter-based substreams, so parallel and serial runs give
/// identical results. threads = 0 picks the hardware count.
VolumeResult volume_mc(const CredalPolytope& poly, std::uint64_t samples,
                       std::uint64_t seed, int threads = 0);

/// Volume at a requested dimension: equals volume_exact when k_requested
/// matches the affine dimension, is 0 when k_requested is larger (a
/// lower-dimensional set has zero higher-dimensional measure) and errors
/// (DimensionTooSmall) when it is smaller.
Real volume_fixed_dim(const CredalPolytope& poly, Index k_requested);

}  // namespace credal
