#include <doctest.h>

#include <cmath>
#include <limits>

#include "credal/packing.hpp"
#include "credal/volume.hpp"
#include "helpers.hpp"

using namespace credal;
using credal::testing::poly;
using credal::testing::random_polytope;
using credal::testing::vacuous;

namespace {

// Segment in the 2-label simplex with a given chart length.
CredalPolytope segment_of_length(Real len) {
  const Real half = 0.5 * len / std::sqrt(2.0);
  return poly({{0.5 - half, 0.5 + half}, {0.5 + half, 0.5 - half}});
}

}  // namespace

TEST_CASE("hausdorff distance basics") {
  const auto simplex3 = vacuous(3);
  CHECK(hausdorff_distance(simplex3, simplex3) == doctest::Approx(0.0));

  const auto half = homothety(simplex3, 0.5);
  CHECK(hausdorff_distance(simplex3, half) ==
        doctest::Approx(std::sqrt(6.0) / 6.0).epsilon(1e-9));

  const auto a = poly({{0.2, 0.8}, {0.5, 0.5}});
  const auto b = poly({{0.2, 0.8}, {0.4, 0.6}});
  CHECK(hausdorff_distance(a, b) ==
        doctest::Approx(0.1 * std::sqrt(2.0)).epsilon(1e-9));

  CHECK_THROWS_AS(hausdorff_distance(a, simplex3), ValidationError);
}

TEST_CASE("hausdorff distance is a metric on random triples") {
  SplitMix64 rng(55);
  for (int trial = 0; trial < 8; ++trial) {
    const Index d = 2 + static_cast<Index>(rng.next_below(3));
    const auto p = random_polytope(d, d + 2, rng);
    const auto q = random_polytope(d, d + 2, rng);
    const auto s = random_polytope(d, d + 2, rng);
    const Real pq = hausdorff_distance(p, q);
    const Real qp = hausdorff_distance(q, p);
    CHECK(pq == doctest::Approx(qp).epsilon(1e-12));
    CHECK(pq <= hausdorff_distance(p, s) + hausdorff_distance(s, q) + 1e-9);
  }
}

TEST_CASE("erode gives exact hausdorff control") {
  const auto simplex3 = vacuous(3);
  const auto q = erode(simplex3, std::sqrt(6.0) / 6.0);
  const auto expected = homothety(simplex3, 0.5);
  CHECK((q.vertices() - expected.vertices()).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(hausdorff_distance(simplex3, q) ==
        doctest::Approx(std::sqrt(6.0) / 6.0).epsilon(1e-9));

  const auto thin = erode(simplex3, 1e-3);
  CHECK(std::abs(hausdorff_distance(simplex3, thin) - 1e-3) <= 1e-9);

  // eps at or above the circumradius collapses the set.
  CHECK_THROWS_AS(erode(simplex3, std::sqrt(6.0) / 3.0), ValidationError);
}

TEST_CASE("greedy packing on a segment") {
  const auto seg = segment_of_length(1.0);
  REQUIRE(seg.affine_dim() == 1);

  // Two radius-0.25 balls fit, centered at the eroded endpoints.
  const auto two = greedy_packing(seg, 0.25, 0, 8);
  CHECK(two.count == 2);
  CHECK(two.clearance.minCoeff() >= 0.0);
  CHECK(two.min_separation_slack >= -1e-12);
  CHECK(two.maximal_certified);

  // Ball diameter 1.2 exceeds the segment.
  CHECK(greedy_packing(seg, 0.6, 0, 4).count == 0);

  // 1-D brute force: three balls would need span >= 4r = 1 inside a
  // feasible span of 0.5, so two is optimal.
  CHECK(2 * 0.25 + 2 * 0.25 > 0.75 - 0.25);
}

TEST_CASE("greedy packing on the simplex chart") {
  const auto simplex3 = vacuous(3);
  // Feasible center region for r = 0.35 is the inradius-eroded triangle
  // whose diameter stays below 2r, so only one ball fits.
  const auto one = greedy_packing(simplex3, 0.35, 0, 8);
  CHECK(one.count == 1);
  CHECK(one.maximal_certified);

  // Brute-force diameter bound of the eroded region: the homothety of
  // the chart triangle that keeps margin >= r has scale
  // 1 - r/inradius < 0.15, so diameter < 0.15 * sqrt(2) < 0.7 = 2r.
  const Real inradius = 1.0 / std::sqrt(6.0);
  const Real scale = 1.0 - 0.35 / inradius;
  CHECK(scale * std::sqrt(2.0) < 0.7);
}

TEST_CASE("packing certificates hold on seeded random runs") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 12; ++trial) {
    const Index d = 2 + static_cast<Index>(rng.next_below(2));
    const auto p = random_polytope(d, d + 3, rng);
    const Real inradius_guess = 0.2 * std::sqrt(volume_exact(p).value);
    const Real r = std::max(0.02, inradius_guess);
    const auto pack = greedy_packing(p, r, rng.next(), 4);
    if (pack.count > 0) {
      CHECK(pack.clearance.minCoeff() >= 0.0);
      CHECK(pack.min_separation_slack >= -1e-12);
    }
    CHECK(pack.maximal_certified);
  }
}

TEST_CASE("packing count is monotone in the radius") {
  const auto simplex3 = vacuous(3);
  Index prev = std::numeric_limits<Index>::max();
  for (Real r : {0.05, 0.1, 0.2, 0.3}) {
    const auto pack = greedy_packing(simplex3, r, 0, 4);
    CHECK(pack.count <= prev);
    prev = pack.count;
  }
}

TEST_CASE("shell packing avoids the eroded core") {
  const auto simplex3 = vacuous(3);
  const auto q = erode(simplex3, 0.15);
  // The deepest shell ball sits in a corner pocket of radius just under
  // 0.05, so r = 0.04 admits one ball per corner and no more.
  const auto pack = greedy_shell_packing(simplex3, q, 0.04, 0, 4);
  REQUIRE(pack.count == 3);
  // Certificates include the distance to the exclusion hull.
  CHECK(pack.clearance.minCoeff() >= -1e-12);
  for (Index i = 0; i < pack.count; ++i) {
    const Vector ambient =
        simplex3.chart().from_chart(Vector(pack.centers.col(i)));
    CHECK(distance_to(q, ambient) >= 0.04 - 1e-9);
  }
  // A radius past the pocket depth cannot fit anywhere.
  CHECK(greedy_shell_packing(simplex3, q, 0.06, 0, 2).count == 0);
}

TEST_CASE("theorem 1 report") {
  // Closed-form right-hand side.
  const auto rep = theorem1_experiment(3, 0.1, 0.2, 1.0, 0, 4);
  CHECK(rep.rhs == doctest::Approx(0.875).epsilon(1e-12));
  CHECK(rep.identity_ok);
  CHECK(rep.lhs >= 0.0);
  CHECK(rep.lhs <= 1.0);
  CHECK(rep.vol_p == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));

  // rhs = 1 - (1 - eps/r)^d grows with d at a fixed ratio.
  const auto r2 = theorem1_experiment(2, 0.1, 0.2, 1.0, 0, 2);
  const auto r5 = theorem1_experiment(5, 0.05, 0.1, 1.0, 0, 2);
  CHECK(r2.rhs == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(r5.rhs == doctest::Approx(0.96875).epsilon(1e-12));

  // Identity at eps = 0.2 on the full simplex.
  const auto r3 = theorem1_experiment(3, 0.2, 0.3, 1.0, 0, 2);
  CHECK(std::abs(r3.vol_q + r3.vol_q_prime - std::sqrt(3.0) / 2.0) <= 1e-10);

  CHECK_THROWS_AS(theorem1_experiment(3, 0.3, 0.2), ValidationError);
  CHECK_THROWS_AS(theorem1_experiment(3, 0.2, 0.2), ValidationError);
}

TEST_CASE("packing constant ratio direction") {
  // Packing with smaller balls retains at least as much relative volume,
  // up to grid noise.
  const auto simplex3 = vacuous(3);
  const auto coarse = greedy_packing(simplex3, 0.2, 0, 8);
  const auto fine = greedy_packing(simplex3, 0.1, 0, 8);
  const Real vol = std::sqrt(3.0) / 2.0;
  const Real c_coarse =
      coarse.count * unit_ball_volume(2) * 0.2 * 0.2 / vol;
  const Real c_fine = fine.count * unit_ball_volume(2) * 0.1 * 0.1 / vol;
  CHECK(c_fine >= c_coarse - 0.05);
}

TEST_CASE("optimal packing densities") {
  CHECK(c_star(1) == doctest::Approx(1.0));
  CHECK(c_star(2) == doctest::Approx(M_PI / std::sqrt(12.0)).epsilon(1e-14));
  CHECK(c_star(8) ==
        doctest::Approx(std::pow(M_PI, 4.0) / 384.0).epsilon(1e-14));
  CHECK(c_star(24) > 0.0);
  CHECK_THROWS_AS(c_star(5), ValidationError);
  CHECK_THROWS_AS(c_star(4), ValidationError);

  // Face-centered-cubic oracle: minimal vectors like (1,1,0) have norm
  // sqrt(2), the basis covolume is 2, so the density is
  // ball(sqrt(2)/2) / 2.
  Matrix basis(3, 3);
  basis << 0, 1, 1, 1, 0, 1, 1, 1, 0;
  const Real covolume = std::abs(basis.determinant());
  const Real radius = std::sqrt(2.0) / 2.0;
  const Real density =
      unit_ball_volume(3) * std::pow(radius, 3.0) / covolume;
  CHECK(c_star(3) == doctest::Approx(density).epsilon(1e-12));
}

TEST_CASE("carl-pajor experiment") {
  // Two sphere points span a segment: zero 3-volume.
  const auto degenerate = carl_pajor_experiment(3, 2, 1000, 1);
  CHECK(degenerate.hull_dim < 3);
  CHECK(degenerate.ratio == 0.0);

  // Direct evaluation of the bound (natural log).
  const auto b = carl_pajor_experiment(4, 16, 1000, 2);
  CHECK(b.bound ==
        doctest::Approx(std::pow(4.0 * std::sqrt(std::log(16.0) / 4.0), 4.0))
            .epsilon(1e-12));
  CHECK(b.bound == doctest::Approx(122.98).epsilon(1e-3));

  const auto rep = carl_pajor_experiment(3, 8, 100000, 3);
  CHECK(rep.ratio >= 0.0);
  CHECK(rep.ratio <= 1.0);
  CHECK(rep.ratio <= rep.bound + 3.0 * rep.std_error);

  CHECK_THROWS_AS(carl_pajor_experiment(1, 5, 100), ValidationError);
}
