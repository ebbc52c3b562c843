#include "credal/axioms.hpp"

#include <cmath>
#include <sstream>

#include "credal/measures.hpp"
#include "credal/rng.hpp"
#include "credal/simplex.hpp"
#include "credal/volume.hpp"

namespace credal {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "not-applicable";
  }
}

MeasureKind parse_measure(const std::string& name) {
  if (name == "volume") return MeasureKind::volume;
  if (name == "maxent") return MeasureKind::max_entropy;
  if (name == "gh") return MeasureKind::generalized_hartley;
  throw ValidationError("UnknownMeasure", name);
}

std::string to_string(MeasureKind m) {
  switch (m) {
    case MeasureKind::volume: return "volume";
    case MeasureKind::max_entropy: return "maxent";
    default: return "gh";
  }
}

namespace {

std::string fmt(Real x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

Real measure_upper_bound(MeasureKind measure, Index d) {
  switch (measure) {
    case MeasureKind::volume: return simplex_volume(d);
    default: return std::log2(static_cast<Real>(d));
  }
}

// An isometric copy of the polytope: rotation + translation applied in
// its own chart, with the motion shrunk until the image stays inside the
// probability simplex.
CredalPolytope random_isometric_copy(const CredalPolytope& p,
                                     SplitMix64& rng) {
  const Index k = p.affine_dim();
  if (k == 0) return p;
  const Matrix& coords = p.chart_vertices();
  const Vector center = coords.rowwise().mean();
  const Matrix rot = random_rotation(k, 0.5, rng);
  Vector shift(k);
  for (Index i = 0; i < k; ++i) shift(i) = 0.2 * (2.0 * rng.next_double() - 1.0);

  for (int attempt = 0; attempt < 60; ++attempt) {
    const Real s = std::pow(0.5, attempt);
    // Partial rotation: blend toward the identity and re-orthonormalize.
    Matrix blend = s * rot + (1.0 - s) * Matrix::Identity(k, k);
    Eigen::HouseholderQR<Matrix> qr(blend);
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index i = 0; i < k; ++i) {
      if (r(i, i) < 0) q.col(i) = -q.col(i);
    }
    Matrix moved = (q * (coords.colwise() - center)).colwise() +
                   (center + s * shift);
    Matrix ambient = p.chart().from_chart(moved);
    bool ok = true;
    for (Index c = 0; c < ambient.cols() && ok; ++c) {
      if (ambient.col(c).minCoeff() < 0.0) ok = false;
    }
    if (ok) return make_credal_polytope(ambient);
  }
  return p;  // fall back to the identity motion
}

}  // namespace

Real evaluate_measure(const CredalPolytope& poly, MeasureKind measure,
                      std::optional<Index> at_dim) {
  switch (measure) {
    case MeasureKind::volume:
      if (at_dim) return volume_fixed_dim(poly, *at_dim);
      return volume_exact(poly).value;
    case MeasureKind::max_entropy:
      return max_entropy(poly).value;
    default:
      return generalized_hartley(poly).value;
  }
}

std::vector<AxiomReport> check_axioms(const CredalPolytope& p,
                                      const CredalPolytope* q,
                                      MeasureKind measure,
                                      const AxiomConfig& config) {
  std::vector<AxiomReport> reports;
  const Index d = p.label_count();

  // A1: nonnegativity and the vacuous-set bound. Volumes compare
  // (d-1)-dimensional measures.
  {
    const Real u = measure == MeasureKind::volume
                       ? volume_fixed_dim(p, d - 1)
                       : evaluate_measure(p, measure);
    const Real bound = measure_upper_bound(measure, d);
    AxiomReport r;
    r.axiom = "A1";
    r.tolerance = config.tolerance;
    r.verdict = (u >= -config.tolerance && u <= bound + config.tolerance)
                    ? Verdict::pass
                    : Verdict::fail;
    r.witness = "U(P)=" + fmt(u) + ", bound=" + fmt(bound);
    reports.push_back(std::move(r));
  }

  // A3: monotonicity on a nested pair, both sets measured at P's affine
  // dimension for the volume.
  if (q != nullptr) {
    if (!contains_polytope(p, *q, tol::membership)) {
      throw ValidationError("NotNested", "Q is not contained in P");
    }
    const Index kp = p.affine_dim();
    const Real up = evaluate_measure(p, measure,
                                     measure == MeasureKind::volume
                                         ? std::optional<Index>(kp)
                                         : std::nullopt);
    const Real uq = evaluate_measure(*q, measure,
                                     measure == MeasureKind::volume
                                         ? std::optional<Index>(kp)
                                         : std::nullopt);
    AxiomReport r;
    r.axiom = "A3";
    r.tolerance = config.tolerance;
    r.verdict = uq <= up + config.tolerance ? Verdict::pass : Verdict::fail;
    r.witness = "U(Q)=" + fmt(uq) + ", U(P)=" + fmt(up) +
                ", dim=" + std::to_string(kp);
    reports.push_back(std::move(r));
  } else {
    reports.push_back(
        {"A3", Verdict::not_applicable, "no nested set supplied", 0.0});
  }

  // A7: invariance under sampled chart isometries.
  {
    SplitMix64 rng(mix_seed(config.seed, 0x417));
    const Real u0 = evaluate_measure(p, measure);
    Real worst = 0.0;
    for (int s = 0; s < config.isometry_samples; ++s) {
      const CredalPolytope moved = random_isometric_copy(p, rng);
      const Real um = evaluate_measure(moved, measure);
      worst = std::max(worst, std::abs(um - u0));
    }
    AxiomReport r;
    r.axiom = "A7";
    r.tolerance = 1e-10;
    r.verdict = worst <= 1e-10 ? Verdict::pass : Verdict::fail;
    r.witness = "max |U(iso(P)) - U(P)| = " + fmt(worst) + " over " +
                std::to_string(config.isometry_samples) + " isometries";
    reports.push_back(std::move(r));
  }
  return reports;
}

AxiomReport check_probability_consistency(
    const std::vector<CredalPolytope>& sequence, MeasureKind measure,
    const AxiomConfig& config) {
  if (sequence.size() < 3) {
    throw ValidationError("SequenceTooShort",
                          "need at least three sets in the sequence");
  }
  const std::size_t n = sequence.size();
  std::vector<Real> w(n), u(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = imprecision_width(sequence[i]);
    u[i] = evaluate_measure(sequence[i], measure);
  }

  AxiomReport report;
  report.axiom = "A4'";
  report.tolerance = config.u_eps;

  std::size_t argmax = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (u[i] > u[argmax]) argmax = i;
  }

  std::ostringstream witness;
  witness << "w: " << fmt(w.front()) << " -> " << fmt(w.back())
          << "; U: " << fmt(u.front()) << " -> " << fmt(u.back());

  // Terminal jump: the measured value at the limit exceeds the trend.
  if (u[n - 1] > u[n - 2] + config.u_eps) {
    report.verdict = Verdict::fail;
    witness << "; limit jumps from " << fmt(u[n - 2]) << " to "
            << fmt(u[n - 1]);
    report.witness = witness.str();
    return report;
  }
  // The measure must be nonincreasing once past its maximum.
  for (std::size_t i = argmax; i + 1 < n; ++i) {
    if (u[i + 1] > u[i] + config.tolerance) {
      report.verdict = Verdict::fail;
      witness << "; U increases at step " << i + 1 << " (" << fmt(u[i])
              << " -> " << fmt(u[i + 1]) << ")";
      report.witness = witness.str();
      return report;
    }
  }
  const bool width_resolved = w[n - 1] < config.width_eps;
  const bool u_vanished = u[n - 1] < config.u_eps;
  if (width_resolved && !u_vanished) {
    report.verdict = Verdict::fail;
    witness << "; widths resolved but U stalls at " << fmt(u[n - 1]);
    report.witness = witness.str();
    return report;
  }
  if (u_vanished && !width_resolved) {
    report.verdict = Verdict::fail;
    witness << "; U vanished while width stalls at " << fmt(w[n - 1]);
    report.witness = witness.str();
    return report;
  }
  report.verdict = Verdict::pass;
  report.witness = witness.str();
  return report;
}

SubadditivityReport check_subadditivity(const CredalPolytope& joint,
                                        const Grouping& grouping,
                                        Real tolerance) {
  SubadditivityReport rep;
  const auto m1 = marginalize(joint, grouping, 0);
  const auto m2 = marginalize(joint, grouping, 1);
  rep.vol_joint = volume_exact(joint).value;
  rep.vol_marginal1 = volume_exact(m1).value;
  rep.vol_marginal2 = volume_exact(m2).value;
  rep.degenerate_factor = grouping.d1 == 1 || grouping.d2 == 1 ||
                          m1.is_singleton() || m2.is_singleton();

  const Real sum = rep.vol_marginal1 + rep.vol_marginal2;
  rep.a5.axiom = "A5";
  rep.a5.tolerance = tolerance;
  rep.a5.verdict =
      rep.vol_joint <= sum + tolerance ? Verdict::pass : Verdict::fail;
  rep.a5.witness = "Vol(P)=" + fmt(rep.vol_joint) + ", Vol(P')+Vol(P'')=" +
                   fmt(sum);

  rep.a6.axiom = "A6";
  rep.a6.tolerance = tolerance;
  rep.a6.verdict =
      std::abs(rep.vol_joint - sum) <= tolerance ? Verdict::pass : Verdict::fail;
  rep.a6.witness = rep.a5.witness +
                   (rep.degenerate_factor ? " (degenerate-factor SI)" : "");
  return rep;
}

CredalPolytope example_triangle(Real base, Real height) {
  const Real max_height = std::sqrt(6.0) / 2.0;
  if (!(base > 0.0) || base > std::sqrt(2.0) + 1e-12) {
    throw ValidationError("BaseTooLong",
                          "base must lie in (0, sqrt(2)] to fit the edge");
  }
  if (!(height >= 0.0) || height > max_height + 1e-12) {
    throw ValidationError("ApexOutsideSimplex",
                          "triangle height capped at sqrt(6)/2");
  }
  const Vector e1 = Vector::Unit(3, 0);
  const Vector e2 = Vector::Unit(3, 1);
  const Vector e3 = Vector::Unit(3, 2);
  const Vector mid = 0.5 * (e1 + e2);
  const Vector along = (e2 - e1) / std::sqrt(2.0);
  const Vector up = (e3 - mid) / (e3 - mid).norm();
  std::vector<Vector> pts = {mid - 0.5 * base * along,
                             mid + 0.5 * base * along};
  if (height > 0.0) pts.push_back(mid + height * up);
  return make_credal_polytope(pts);
}

CredalPolytope example_segment(Real base) {
  return example_triangle(base, 0.0);
}

CounterexampleTable continuity_counterexample(Real base, int n_max,
                                              Real a3_height,
                                              const AxiomConfig& config) {
  if (n_max < 2) {
    throw ValidationError("InvalidCount", "n_max must be >= 2");
  }
  CounterexampleTable table;
  table.base = base;

  std::vector<CredalPolytope> sequence;
  for (int n = 1; n <= n_max; ++n) {
    const Real h = 1.0 / static_cast<Real>(n);
    const auto tri = example_triangle(base, h);
    CounterexampleRow row;
    row.n = n;
    row.height = h;
    row.vol2 = volume_exact(tri).value;
    row.width = imprecision_width(tri);
    table.rows.push_back(row);
    sequence.push_back(tri);
  }
  const auto segment = example_segment(base);
  table.limit_vol1 = volume_exact(segment).value;
  table.limit_vol2 = volume_fixed_dim(segment, 2);
  table.limit_width = imprecision_width(segment);
  sequence.push_back(segment);

  // The A3 defect: the triangle strictly contains its base segment, yet
  // own-dimension volumes compare the wrong way whenever h < 2.
  const auto tri = example_triangle(base, a3_height);
  table.a3_height = a3_height;
  table.a3_vol2_triangle = volume_exact(tri).value;
  table.a3_vol1_segment = table.limit_vol1;
  table.a3_verdict = table.a3_vol1_segment <= table.a3_vol2_triangle + 1e-12
                         ? Verdict::pass
                         : Verdict::fail;

  table.sequence_report =
      check_probability_consistency(sequence, MeasureKind::volume, config);
  return table;
}

}  // namespace credal
