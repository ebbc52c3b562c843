#include <doctest.h>

#include <cmath>

#include "credal/axioms.hpp"
#include "credal/lift.hpp"
#include "credal/volume.hpp"
#include "helpers.hpp"

using namespace credal;
using credal::testing::poly;
using credal::testing::vacuous;

namespace {

CredalPolytope segment_of_length(Real len) {
  const Real half = 0.5 * len / std::sqrt(2.0);
  return poly({{0.5 - half, 0.5 + half}, {0.5 + half, 0.5 - half}});
}

}  // namespace

TEST_CASE("lift of a short segment matches its length exactly") {
  const auto seg = segment_of_length(0.5);
  const auto lift = lift_probability_set(seg, 3);
  CHECK(lift.source_volume == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(lift.gap <= 1e-8);
  CHECK(lift.lifted_volume == doctest::Approx(0.5).epsilon(1e-7));
  CHECK(lift.lifted.label_count() == 3);
  // Triangle over the full base edge: height sqrt(2) * 0.5.
  REQUIRE(lift.params.size() == 1);
  const Real height = lift.params[0] * std::sqrt(6.0) / 2.0;
  CHECK(height == doctest::Approx(std::sqrt(2.0) * 0.5).epsilon(1e-6));
}

TEST_CASE("lift caps at the whole simplex for long segments") {
  const auto seg = segment_of_length(1.2);
  const auto lift = lift_probability_set(seg, 3);
  const Real best = std::sqrt(3.0) / 2.0;  // the simplex is the areal max
  CHECK(std::abs(lift.gap - (1.2 - best)) <= 1e-6);
  CHECK(lift.params[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("identity lift") {
  const auto seg = segment_of_length(0.4);
  const auto lift = lift_probability_set(seg, 2);
  CHECK(lift.gap == 0.0);
  CHECK((lift.spec.V - Matrix::Identity(2, 2)).norm() == 0.0);
  CHECK((lift.lifted.vertices() - seg.vertices()).norm() <= 1e-15);
  CHECK_THROWS_AS(lift_probability_set(vacuous(3), 2), ValidationError);
}

TEST_CASE("embedding spec maps the lift into the source simplex") {
  for (Real len : {0.3, 0.5, 0.8}) {
    const auto lift = lift_probability_set(segment_of_length(len), 3);
    const Matrix& v = lift.spec.V;
    CHECK((v * v.transpose() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <=
          1e-10);
    for (Index i = 0; i < lift.lifted.vertex_count(); ++i) {
      const Vector image = lift.spec.apply(lift.lifted.vertex(i));
      CHECK(image.minCoeff() >= -1e-9);
      CHECK(std::abs(image.sum() - 1.0) <= 1e-9);
    }
    // The base face maps onto the source simplex identically.
    Vector e1 = Vector::Zero(3);
    e1(0) = 1.0;
    CHECK((lift.spec.apply(e1) - Vector::Unit(2, 0)).norm() <= 1e-12);
  }
}

TEST_CASE("lift into four labels still closes the gap") {
  // Vol(simplex on 4 labels) = sqrt(4)/3! = 1/3, so 0.3 is achievable.
  const auto lift = lift_probability_set(segment_of_length(0.3), 4);
  CHECK(lift.gap <= 1e-8);
  CHECK(lift.lifted.affine_dim() == 3);
  // 0.5 exceeds it: the best tower is the whole simplex.
  const auto capped = lift_probability_set(segment_of_length(0.5), 4);
  CHECK(std::abs(capped.gap - (0.5 - 1.0 / 3.0)) <= 1e-6);
}

TEST_CASE("relative volume variation") {
  const auto p = example_triangle(1.0, 1.0);    // area 0.5
  const auto k = example_triangle(1.0, 0.8);    // area 0.4
  CHECK(relative_volume_variation(p, p) == doctest::Approx(0.0));
  CHECK(relative_volume_variation(p, k) == doctest::Approx(0.2).epsilon(1e-10));
  CHECK_THROWS_AS(relative_volume_variation(poly({{1.0, 0.0, 0.0}}), k),
                  ValidationError);
  // A thin set has zero volume at the ambient dimension.
  CHECK_THROWS_AS(relative_volume_variation(example_segment(0.5), k),
                  ValidationError);
}

TEST_CASE("monotonicity failure pair") {
  const auto pair = lift_a3_failure_pair();
  CHECK(pair.nested);
  CHECK(pair.lift_escapes);
  CHECK(pair.lift.gap <= 1e-8);
  // The lift has far more area than the thin triangle it escaped from.
  CHECK(volume_exact(pair.lift.lifted).value >
        volume_exact(pair.p).value);
}
