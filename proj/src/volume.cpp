#include "credal/volume.hpp"

#include <Eigen/LU>
#include <cmath>
#include <thread>
#include <vector>

#include "credal/nearest.hpp"
#include "credal/rng.hpp"

namespace credal {

Real simplex_volume(Index d) {
  if (d < 2) {
    throw ValidationError("InvalidLabelCount", "simplex_volume needs d >= 2");
  }
  return std::exp(0.5 * std::log(static_cast<Real>(d)) -
                  std::lgamma(static_cast<Real>(d)));
}

Real unit_ball_volume(Index k) {
  if (k < 0) {
    throw ValidationError("InvalidDimension", "ball dimension must be >= 0");
  }
  if (k == 0) return 1.0;
  const Real kk = static_cast<Real>(k);
  return std::exp(0.5 * kk * std::log(M_PI) - std::lgamma(0.5 * kk + 1.0));
}

VolumeResult volume_exact(const CredalPolytope& poly) {
  const Index k = poly.affine_dim();
  VolumeResult res;
  res.k = k;
  res.method = "exact";
  if (k == 0) return res;  // a point has zero volume
  if (k > CredalPolytope::kMaxExactDimension) {
    throw NumericError("DimensionTooLarge",
                       "exact volume capped at affine dimension 8");
  }

  const Matrix& coords = poly.chart_vertices();
  const ConvexHull& hull = poly.hull();
  const Vector apex = coords.col(0);

  Real total = 0.0;
  Real inv_fact = 1.0;
  for (Index i = 2; i <= k; ++i) inv_fact /= static_cast<Real>(i);
  Matrix edges(k, k);
  for (const auto& facet : hull.facets) {
    bool has_apex = false;
    for (Index id : facet.vertices) {
      if (id == 0) {
        has_apex = true;
        break;
      }
    }
    if (has_apex) continue;  // degenerate cone, zero contribution
    for (Index j = 0; j < k; ++j) {
      edges.col(j) = coords.col(facet.vertices[static_cast<std::size_t>(j)]) - apex;
    }
    total += std::abs(edges.determinant()) * inv_fact;
  }
  res.value = total;
  return res;
}

namespace {

struct ChartBox {
  Vector lo;
  Vector hi;
  Real volume = 0.0;
};

ChartBox bounding_box(const Matrix& coords) {
  ChartBox box;
  box.lo = coords.rowwise().minCoeff();
  box.hi = coords.rowwise().maxCoeff();
  box.volume = (box.hi - box.lo).prod();
  return box;
}

constexpr std::uint64_t kChunk = 1 << 16;

std::uint64_t chunk_hits(const ConvexHull* hull, const Matrix* verts,
                         const ChartBox& box, std::uint64_t seed,
                         std::uint64_t chunk_index, std::uint64_t count) {
  SplitMix64 stream(mix_seed(seed, chunk_index));
  std::uint64_t hits = 0;
  const Index k = box.lo.size();
  Vector x(k);
  for (std::uint64_t s = 0; s < count; ++s) {
    for (Index i = 0; i < k; ++i) {
      x(i) = box.lo(i) + (box.hi(i) - box.lo(i)) * stream.next_double();
    }
    if (hull != nullptr) {
      if (hull->contains(x, 0.0)) ++hits;
    } else {
      // No facet hull at this dimension: fall back to the nearest-point
      // membership test in chart coordinates.
      if (distance_to_hull(*verts, x) <= tol::membership) ++hits;
    }
  }
  return hits;
}

}  // namespace

VolumeResult volume_mc(const CredalPolytope& poly, std::uint64_t samples,
                       std::uint64_t seed, int threads) {
  if (samples < 1) {
    throw ValidationError("InvalidSampleCount", "samples must be >= 1");
  }
  const Index k = poly.affine_dim();
  if (k == 0) {
    VolumeResult res;
    res.method = "exact";  // ZeroDimensional: exact 0, nothing to sample
    return res;
  }

  const Matrix& coords = poly.chart_vertices();
  const ChartBox box = bounding_box(coords);
  const ConvexHull* hull = poly.has_hull() ? &poly.hull() : nullptr;

  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads) : hw;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(chunks));

  std::vector<std::uint64_t> partial(workers, 0);
  auto run = [&](unsigned w) {
    std::uint64_t local = 0;
    for (std::uint64_t c = w; c < chunks; c += workers) {
      const std::uint64_t count =
          (c + 1 == chunks) ? samples - c * kChunk : kChunk;
      local += chunk_hits(hull, &coords, box, seed, c, count);
    }
    partial[w] = local;
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::uint64_t hits = 0;
  for (std::uint64_t h : partial) hits += h;

  const Real p_hat = static_cast<Real>(hits) / static_cast<Real>(samples);
  VolumeResult res;
  res.k = k;
  res.method = "monte-carlo";
  res.value = p_hat * box.volume;
  res.std_error =
      box.volume * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<Real>(samples));
  return res;
}

Real volume_fixed_dim(const CredalPolytope& poly, Index k_requested) {
  const Index k = poly.affine_dim();
  if (k_requested < k) {
    throw ValidationError("DimensionTooSmall",
                          "requested dimension below the affine dimension");
  }
  if (k_requested > k) return 0.0;
  return volume_exact(poly).value;
}

}  // namespace credal
