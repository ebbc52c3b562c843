#include <doctest.h>

#include <cmath>

#include "credal/axioms.hpp"
#include "credal/volume.hpp"
#include "helpers.hpp"

using namespace credal;
using credal::testing::poly;
using credal::testing::random_polytope;
using credal::testing::vacuous;

TEST_CASE("check_axioms: volume on the simplex and a nested pair") {
  const auto simplex3 = vacuous(3);
  const auto half = homothety(simplex3, 0.5);

  const auto reports =
      check_axioms(simplex3, &half, MeasureKind::volume, {});
  REQUIRE(reports.size() == 3);

  CHECK(reports[0].axiom == "A1");
  CHECK(reports[0].verdict == Verdict::pass);

  CHECK(reports[1].axiom == "A3");
  CHECK(reports[1].verdict == Verdict::pass);

  CHECK(reports[2].axiom == "A7");
  CHECK(reports[2].verdict == Verdict::pass);
}

TEST_CASE("check_axioms rejects non-nested pairs") {
  const auto simplex3 = vacuous(3);
  const auto half = homothety(simplex3, 0.5);
  CHECK_THROWS_AS(check_axioms(half, &simplex3, MeasureKind::volume, {}),
                  ValidationError);
}

TEST_CASE("volume axioms on random polytopes") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const Index d = 2 + static_cast<Index>(rng.next_below(3));
    const auto p = random_polytope(d, d + 2, rng);
    const auto q = homothety(p, 0.3 + 0.5 * rng.next_double());
    AxiomConfig config;
    config.seed = rng.next();
    const auto reports = check_axioms(p, &q, MeasureKind::volume, config);
    for (const auto& r : reports) {
      CHECK(r.verdict == Verdict::pass);
    }
  }
}

TEST_CASE("probability consistency: homothety sequences pass") {
  const auto simplex3 = vacuous(3);
  std::vector<CredalPolytope> seq;
  for (int n = 1; n <= 20; ++n) {
    seq.push_back(homothety(simplex3, 1.0 / n));
  }
  const auto report =
      check_probability_consistency(seq, MeasureKind::volume, {});
  CHECK(report.verdict == Verdict::pass);
}

TEST_CASE("probability consistency: constant singleton sequence passes") {
  std::vector<CredalPolytope> seq(4, poly({{0.2, 0.3, 0.5}}));
  const auto report =
      check_probability_consistency(seq, MeasureKind::volume, {});
  CHECK(report.verdict == Verdict::pass);
  CHECK_THROWS_AS(check_probability_consistency(
                      {seq[0], seq[1]}, MeasureKind::volume, {}),
                  ValidationError);
}

TEST_CASE("probability consistency: shrinking triangles fail at the limit") {
  // Heights 1/n with the base fixed: widths stall while the own-dimension
  // volume first vanishes and then jumps to the segment length.
  std::vector<CredalPolytope> seq;
  for (int n = 1; n <= 25; ++n) {
    seq.push_back(example_triangle(0.5, 1.0 / n));
  }
  seq.push_back(example_segment(0.5));
  const auto report =
      check_probability_consistency(seq, MeasureKind::volume, {});
  CHECK(report.verdict == Verdict::fail);
}

TEST_CASE("subadditivity on the diagonal space") {
  // Interval of chart length 0.3 sqrt(2): both marginals are isometric
  // copies, so the marginal volumes sum to twice the joint volume.
  const auto joint = poly({{0.2, 0.8}, {0.5, 0.5}});
  const auto rep = check_subadditivity(joint, Grouping::diagonal());
  const Real len = 0.3 * std::sqrt(2.0);
  CHECK(rep.vol_joint == doctest::Approx(len).epsilon(1e-12));
  CHECK(rep.vol_marginal1 + rep.vol_marginal2 ==
        doctest::Approx(2.0 * len).epsilon(1e-12));
  CHECK(rep.a5.verdict == Verdict::pass);
  CHECK(rep.a6.verdict == Verdict::fail);
  CHECK_FALSE(rep.degenerate_factor);

  // Strictness: the joint volume is strictly below the marginal sum.
  CHECK(rep.vol_joint < rep.vol_marginal1 + rep.vol_marginal2 - 1e-12);
}

TEST_CASE("subadditivity with a degenerate factor is additive") {
  const auto joint = poly({{0.2, 0.8}, {0.5, 0.5}});
  const auto rep =
      check_subadditivity(joint, Grouping::degenerate_first(2));
  CHECK(rep.vol_marginal1 == doctest::Approx(0.0));
  CHECK(rep.a5.verdict == Verdict::pass);
  CHECK(rep.a6.verdict == Verdict::pass);
  CHECK(rep.degenerate_factor);

  const auto single = poly({{0.7, 0.3}});
  const auto rep2 = check_subadditivity(single, Grouping::diagonal());
  CHECK(rep2.a5.verdict == Verdict::pass);
  CHECK(rep2.a6.verdict == Verdict::pass);
}

TEST_CASE("strong products with a point-mass factor are additive") {
  SplitMix64 rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    const Index d2 = 2 + static_cast<Index>(rng.next_below(2));
    Matrix delta = Matrix::Zero(2, 1);
    delta(static_cast<Index>(rng.next_below(2)), 0) = 1.0;
    const auto p2 = random_polytope(d2, d2 + 2, rng);
    const auto joint =
        strong_product(make_credal_polytope(delta), p2);
    const auto rep = check_subadditivity(joint, Grouping::product(2, d2));
    CHECK(rep.degenerate_factor);
    CHECK(rep.a6.verdict == Verdict::pass);
    CHECK(std::abs(rep.vol_marginal1 + rep.vol_marginal2 - rep.vol_joint) <=
          1e-10);
  }
}

TEST_CASE("continuity counterexample table") {
  const auto table = continuity_counterexample(0.5, 12);
  REQUIRE(table.rows.size() == 12);
  for (const auto& row : table.rows) {
    // Triangle area b*h/2 with b = 0.5, h = 1/n.
    CHECK(std::abs(row.vol2 - 0.25 / row.n) <= 1e-12);
    CHECK(row.width > 0.3);
  }
  CHECK(table.limit_vol1 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(table.limit_vol2 == 0.0);
  CHECK(table.sequence_report.verdict == Verdict::fail);

  // The paper's arithmetic instance: b = 0.9, h = 1 gives 0.45 < 0.9.
  const auto a3 = continuity_counterexample(0.9, 3, 1.0);
  CHECK(a3.a3_vol2_triangle == doctest::Approx(0.45).epsilon(1e-12));
  CHECK(a3.a3_vol1_segment == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(a3.a3_verdict == Verdict::fail);

  CHECK_THROWS_AS(continuity_counterexample(2.0, 5), ValidationError);
  CHECK_THROWS_AS(continuity_counterexample(0.5, 1), ValidationError);
}

TEST_CASE("example triangle geometry") {
  // The base segment is strictly inside the triangle.
  const auto tri = example_triangle(0.9, 1.0);
  const auto seg = example_segment(0.9);
  CHECK(contains_polytope(tri, seg, 1e-9));
  CHECK(volume_exact(tri).k == 2);
  CHECK(volume_exact(seg).k == 1);
  CHECK_THROWS_AS(example_triangle(0.5, 1.5), ValidationError);
}
