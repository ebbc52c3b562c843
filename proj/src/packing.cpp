#include "credal/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "credal/nearest.hpp"
#include "credal/rng.hpp"
#include "credal/simplex.hpp"
#include "credal/volume.hpp"

namespace credal {

Real hausdorff_distance(const CredalPolytope& p, const CredalPolytope& q) {
  if (p.label_count() != q.label_count()) {
    throw ValidationError("DimensionMismatch",
                          "polytopes live on different label spaces");
  }
  Real worst = 0.0;
  for (Index i = 0; i < p.vertex_count(); ++i) {
    worst = std::max(worst, distance_to_hull(q.vertices(), p.vertex(i)));
  }
  for (Index i = 0; i < q.vertex_count(); ++i) {
    worst = std::max(worst, distance_to_hull(p.vertices(), q.vertex(i)));
  }
  return worst;
}

CredalPolytope erode(const CredalPolytope& p, Real eps) {
  const Vector c = p.vertex_centroid();
  Real radius = 0.0;
  for (Index i = 0; i < p.vertex_count(); ++i) {
    radius = std::max(radius, (p.vertex(i) - c).norm());
  }
  if (!(eps > 0.0) || eps >= radius * (1.0 - 1e-12)) {
    throw ValidationError("EpsilonTooLarge",
                          "eps must lie in (0, R); R = " + std::to_string(radius));
  }
  return homothety(p, 1.0 - eps / radius);
}

namespace {

// Packing domain in the chart of the outer polytope. The optional
// exclusion hull (shell packings) is expressed in the same chart.
struct PackDomain {
  const ConvexHull* outer = nullptr;
  const ConvexHull* exclusion = nullptr;
  Matrix exclusion_vertices;  // chart coords, for exact distance checks
  Vector lo, hi;              // chart bounding box of the outer polytope
};

// A center is admissible when the r-ball fits inside the outer hull and,
// for shell packings, stays clear of the exclusion hull. The largest
// facet excess lower-bounds the distance to the exclusion hull, which
// settles most candidates cheaply; the remaining band near the hull
// corners gets an exact nearest-point solve.
bool center_admissible(const PackDomain& dom, const Vector& x, Real r) {
  if (dom.outer->margin(x) < r) return false;
  if (dom.exclusion != nullptr) {
    Real excess = -std::numeric_limits<Real>::infinity();
    for (const auto& f : dom.exclusion->facets) {
      excess = std::max(excess, f.normal.dot(x) - f.offset);
    }
    if (excess >= r) return true;
    if (excess <= 0.0) return false;  // inside the exclusion hull
    return distance_to_hull(dom.exclusion_vertices, x) >= r;
  }
  return true;
}

// Streams the candidate grid of one restart into `out`: pitch r/4
// anchored at both box corners, plus (restarts >= 1) a jittered copy with
// amplitude r/8. Only admissible centers are kept.
void collect_candidates(const PackDomain& dom, Real r, Real pitch,
                        int restart, std::uint64_t seed,
                        std::vector<Vector>* out) {
  const Index k = dom.lo.size();
  std::vector<std::vector<Real>> axes_lo(k), axes_hi(k);
  for (Index i = 0; i < k; ++i) {
    for (Real v = dom.lo(i); v <= dom.hi(i) + 1e-15; v += pitch) {
      axes_lo[i].push_back(v);
    }
    for (Real v = dom.hi(i); v >= dom.lo(i) - 1e-15; v -= pitch) {
      axes_hi[i].push_back(v);
    }
  }
  SplitMix64 jitter_rng(mix_seed(seed, 0x9000 + restart));
  const Real amp = restart == 0 ? 0.0 : r / 8.0;

  for (int pass = 0; pass < 2; ++pass) {
    const auto& axes = pass == 0 ? axes_lo : axes_hi;
    std::vector<std::size_t> idx(k, 0);
    Vector x(k);
    bool done = false;
    while (!done) {
      for (Index i = 0; i < k; ++i) {
        Real v = axes[i][idx[i]];
        if (amp > 0.0) v += amp * (2.0 * jitter_rng.next_double() - 1.0);
        x(i) = v;
      }
      if (center_admissible(dom, x, r)) out->push_back(x);
      // Odometer increment.
      Index axis = 0;
      while (axis < k) {
        if (++idx[axis] < axes[axis].size()) break;
        idx[axis] = 0;
        ++axis;
      }
      done = axis == k;
    }
  }
}

struct GreedyOutcome {
  std::vector<Vector> centers;
};

GreedyOutcome greedy_from_candidates(std::vector<Vector> candidates, Real r,
                                     const PackDomain& dom, int restart,
                                     std::uint64_t seed) {
  if (restart == 0) {
    // Boundary-first: tight centers first tend to leave room for more.
    std::vector<std::pair<Real, std::size_t>> keyed(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      keyed[i] = {dom.outer->margin(candidates[i]), i};
    }
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Vector> ordered(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      ordered[i] = std::move(candidates[keyed[i].second]);
    }
    candidates = std::move(ordered);
  } else {
    SplitMix64 rng(mix_seed(seed, 0x5000 + restart));
    for (std::size_t i = candidates.size(); i > 1; --i) {
      std::swap(candidates[i - 1], candidates[rng.next_below(i)]);
    }
  }

  GreedyOutcome out;
  const Real min_sep = 2.0 * r - 1e-12;
  for (const Vector& x : candidates) {
    bool ok = true;
    for (const Vector& c : out.centers) {
      if ((x - c).norm() < min_sep) {
        ok = false;
        break;
      }
    }
    if (ok) out.centers.push_back(x);
  }
  return out;
}

PackingResult pack_domain(const CredalPolytope& p, const PackDomain& dom,
                          Real r, std::uint64_t seed, int restarts) {
  if (!(r > 0.0)) {
    throw ValidationError("InvalidRadius", "packing radius must be positive");
  }
  if (restarts < 1) {
    throw ValidationError("InvalidRestarts", "need at least one restart");
  }
  const Real pitch = r / 4.0;

  PackingResult best;
  best.radius = r;
  best.grid_pitch = pitch;
  best.restarts_used = restarts;
  int best_restart = 0;

  for (int restart = 0; restart < restarts; ++restart) {
    std::vector<Vector> candidates;
    collect_candidates(dom, r, pitch, restart, seed, &candidates);
    GreedyOutcome run =
        greedy_from_candidates(std::move(candidates), r, dom, restart, seed);
    if (static_cast<Index>(run.centers.size()) > best.count) {
      best.count = static_cast<Index>(run.centers.size());
      best.centers.resize(dom.lo.size(), best.count);
      for (Index i = 0; i < best.count; ++i) {
        best.centers.col(i) = run.centers[static_cast<std::size_t>(i)];
      }
      best_restart = restart;
    }
  }

  // Certificates for the winning configuration.
  best.clearance = Vector::Zero(best.count);
  for (Index i = 0; i < best.count; ++i) {
    Real slack = dom.outer->margin(best.centers.col(i)) - r;
    if (dom.exclusion != nullptr) {
      slack = std::min(slack, distance_to_hull(dom.exclusion_vertices,
                                               best.centers.col(i)) -
                                  r);
    }
    best.clearance(i) = slack;
  }
  best.min_separation_slack = std::numeric_limits<Real>::infinity();
  for (Index i = 0; i < best.count; ++i) {
    for (Index j = i + 1; j < best.count; ++j) {
      best.min_separation_slack =
          std::min(best.min_separation_slack,
                   (best.centers.col(i) - best.centers.col(j)).norm() - 2.0 * r);
    }
  }
  if (best.count < 2) best.min_separation_slack = 0.0;

  // Maximality against the winning restart's candidate grid.
  std::vector<Vector> candidates;
  collect_candidates(dom, r, pitch, best_restart, seed, &candidates);
  best.maximal_certified = true;
  const Real min_sep = 2.0 * r - 1e-12;
  for (const Vector& x : candidates) {
    bool clashes = false;
    for (Index i = 0; i < best.count; ++i) {
      if ((x - best.centers.col(i)).norm() < min_sep) {
        clashes = true;
        break;
      }
    }
    if (!clashes) {
      best.maximal_certified = false;
      break;
    }
  }
  (void)p;
  return best;
}

PackDomain make_domain(const CredalPolytope& p) {
  if (p.affine_dim() < 1 || p.affine_dim() > CredalPolytope::kMaxExactDimension) {
    throw NumericError("DimensionTooLarge",
                       "packing needs affine dimension in [1, 8]");
  }
  PackDomain dom;
  dom.outer = &p.hull();
  dom.lo = p.chart_vertices().rowwise().minCoeff();
  dom.hi = p.chart_vertices().rowwise().maxCoeff();
  return dom;
}

}  // namespace

PackingResult greedy_packing(const CredalPolytope& p, Real r,
                             std::uint64_t seed, int restarts) {
  PackDomain dom = make_domain(p);
  return pack_domain(p, dom, r, seed, restarts);
}

PackingResult greedy_shell_packing(const CredalPolytope& p,
                                   const CredalPolytope& q, Real r,
                                   std::uint64_t seed, int restarts) {
  PackDomain dom = make_domain(p);
  const Matrix q_coords = p.chart().to_chart(q.vertices());
  // Q must share P's affine hull for the chart to be faithful.
  for (Index i = 0; i < q.vertex_count(); ++i) {
    if (p.chart().off_hull_distance(q.vertex(i)) > 1e-9) {
      throw ValidationError("AffineHullMismatch",
                            "exclusion set leaves the packing chart");
    }
  }
  const ConvexHull q_hull = convex_hull(q_coords, tol::dedupe);
  dom.exclusion = &q_hull;
  dom.exclusion_vertices = q_coords;
  return pack_domain(p, dom, r, seed, restarts);
}

Theorem1Report theorem1_experiment(Index d, Real eps, Real r, Real base_scale,
                                   std::uint64_t seed, int restarts,
                                   std::uint64_t mc_samples) {
  if (!(eps > 0.0) || eps >= r) {
    throw ValidationError("InvalidRadii", "need 0 < eps < r");
  }
  if (d < 2) {
    throw ValidationError("InvalidLabelCount", "need d >= 2");
  }
  CredalPolytope p = make_credal_polytope(simplex_vertex_matrix(d));
  if (base_scale < 1.0) p = homothety(p, base_scale);

  Theorem1Report rep;
  rep.d = d;
  rep.eps = eps;
  rep.r = r;

  const CredalPolytope q = erode(p, eps);
  const Index k = p.affine_dim();
  auto vol_of = [&](const CredalPolytope& poly) {
    if (poly.affine_dim() <= CredalPolytope::kMaxExactDimension) {
      return volume_exact(poly).value;
    }
    return volume_mc(poly, mc_samples, seed).value;
  };
  rep.vol_p = vol_of(p);
  rep.vol_q = vol_of(q);
  rep.vol_q_prime = rep.vol_p - rep.vol_q;  // exact difference of convex volumes

  rep.lhs = (rep.vol_p - rep.vol_q_prime) / rep.vol_p;
  rep.rhs = 1.0 - std::pow(1.0 - eps / r, static_cast<Real>(d));
  rep.shell_ratio = rep.vol_q_prime / rep.vol_p;
  rep.identity_ok = std::abs(rep.vol_q + rep.vol_q_prime - rep.vol_p) <= 1e-10;

  const PackingResult pack_p = greedy_packing(p, r, seed, restarts);
  const PackingResult pack_shell =
      greedy_shell_packing(p, q, r - eps, seed, restarts);
  rep.n_pack_p = pack_p.count;
  rep.n_pack_shell = pack_shell.count;
  rep.condition_c_ok = rep.n_pack_p >= rep.n_pack_shell;

  if (rep.vol_p > 0.0) {
    rep.c_hat_p = static_cast<Real>(rep.n_pack_p) * unit_ball_volume(k) *
                  std::pow(r, static_cast<Real>(k)) / rep.vol_p;
  }
  if (rep.vol_q_prime > 0.0) {
    rep.c_hat_shell = static_cast<Real>(rep.n_pack_shell) *
                      unit_ball_volume(k) *
                      std::pow(r - eps, static_cast<Real>(k)) /
                      rep.vol_q_prime;
  }
  rep.inequality_evaluated = rep.condition_c_ok;
  rep.inequality_holds = rep.inequality_evaluated && rep.lhs >= rep.rhs;
  return rep;
}

Real c_star(Index d) {
  switch (d) {
    case 1: return 1.0;
    case 2: return M_PI / std::sqrt(12.0);          // hexagonal lattice
    case 3: return M_PI / std::sqrt(18.0);          // face-centered cubic
    case 8: return M_PI * M_PI * M_PI * M_PI / 384.0;  // E8 lattice
    case 24: {
      // Leech lattice: pi^12 / 12!.
      return std::pow(M_PI, 12.0) / 479001600.0;
    }
    default:
      throw ValidationError("UnknownDimension",
                            "optimal density known only for d in {1,2,3,8,24}");
  }
}

CarlPajorReport carl_pajor_experiment(Index d, Index m, std::uint64_t samples,
                                      std::uint64_t seed) {
  if (d < 2 || m < 2) {
    throw ValidationError("InvalidInput", "need d >= 2 and m >= 2");
  }
  if (samples < 1) {
    throw ValidationError("InvalidSampleCount", "samples must be >= 1");
  }
  CarlPajorReport rep;
  rep.d = d;
  rep.m = m;
  rep.samples = samples;
  rep.seed = seed;
  rep.bound = std::pow(
      4.0 * std::sqrt(std::log(static_cast<Real>(m)) / static_cast<Real>(d)),
      static_cast<Real>(d));

  SplitMix64 rng(mix_seed(seed, 0xCA71));
  Matrix pts(d, m);
  for (Index i = 0; i < m; ++i) pts.col(i) = random_sphere_point(d, rng);

  const Chart chart = affine_hull_chart(pts);
  rep.hull_dim = chart.dim();
  if (chart.dim() < d) {
    // A degenerate hull has zero d-volume; nothing to sample.
    return rep;
  }
  const ConvexHull hull = convex_hull(chart.to_chart(pts), tol::dedupe);

  std::uint64_t hits = 0;
  Vector z(d);
  for (std::uint64_t s = 0; s < samples; ++s) {
    // Uniform in the unit ball: spherical direction, radius ~ U^(1/d).
    const Vector dir = random_sphere_point(d, rng);
    const Real radius =
        std::pow(rng.next_double(), 1.0 / static_cast<Real>(d));
    z = radius * dir;
    if (hull.contains(chart.to_chart(z), 0.0)) ++hits;
  }
  const Real p_hat = static_cast<Real>(hits) / static_cast<Real>(samples);
  rep.ratio = p_hat;
  rep.std_error = std::sqrt(p_hat * (1.0 - p_hat) / static_cast<Real>(samples));
  return rep;
}

}  // namespace credal
