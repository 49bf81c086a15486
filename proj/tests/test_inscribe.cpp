// Copyright 2026 The inball Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"

#include "generators.hpp"
#include "inball/closedform.hpp"
#include "inball/inscribe.hpp"
#include "support.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace inball;

namespace {

Polygon2 square2() {
  return validate_polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
}

Polygon2 rect_4x2() {
  return validate_polygon({{0, 0}, {4, 0}, {4, 2}, {0, 2}});
}

}  // namespace

TEST_CASE("incircle of a square", "[inscribe]") {
  const InscribedBall2 ball = incircle(square2());
  REQUIRE_THAT(ball.radius, WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(ball.center.x, WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(ball.center.y, WithinAbs(1.0, 1e-12));
  REQUIRE(ball.center_unique);
  REQUIRE(ball.active == std::vector<int>{0, 1, 2, 3});

  const TangencyReport rep = tangency_report(square2(), ball);
  REQUIRE(rep.is_tangential);
  REQUIRE(rep.status.size() == 4);
  for (Contact c : rep.status) REQUIRE(c == Contact::Tangent);
  REQUIRE_THAT(rep.min_gap, WithinAbs(0.0, 1e-9));
}

TEST_CASE("incircle of a right triangle", "[inscribe]") {
  // Legs 3 and 4, hypotenuse 5: the incircle radius is (3 + 4 - 5) / 2.
  const Polygon2 tri = validate_polygon({{0, 0}, {4, 0}, {0, 3}});
  const InscribedBall2 ball = incircle(tri);
  REQUIRE_THAT(ball.radius, WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(ball.center.x, WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(ball.center.y, WithinAbs(1.0, 1e-12));
  REQUIRE(tangency_report(tri, ball).is_tangential);
}

TEST_CASE("incircle of a rectangle has a center segment", "[inscribe]") {
  const InscribedBall2 ball = incircle(rect_4x2());
  REQUIRE_THAT(ball.radius, WithinAbs(1.0, 1e-12));
  // Optimal centers run from (1, 1) to (3, 1); center is the lexicographic
  // minimum and face_center the midpoint of the segment.
  REQUIRE_FALSE(ball.center_unique);
  REQUIRE_THAT(ball.center.x, WithinAbs(1.0, 1e-9));
  REQUIRE_THAT(ball.center.y, WithinAbs(1.0, 1e-9));
  REQUIRE_THAT(ball.face_center.x, WithinAbs(2.0, 1e-9));
  REQUIRE_THAT(ball.face_center.y, WithinAbs(1.0, 1e-9));
  REQUIRE(ball.active == std::vector<int>{0, 2, 3});

  const TangencyReport rep = tangency_report(rect_4x2(), ball);
  REQUIRE_FALSE(rep.is_tangential);
  REQUIRE(rep.status == std::vector<Contact>{Contact::Tangent, Contact::Clear,
                                             Contact::Tangent, Contact::Clear});
}

TEST_CASE("incircle of a regular hexagon", "[inscribe]") {
  const Polygon2 hex = regular_ngon(6, 2.0);
  const InscribedBall2 ball = incircle(hex);
  REQUIRE_THAT(ball.radius, WithinRel(2.0, 1e-12));
  REQUIRE_THAT(ball.center.x, WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(ball.center.y, WithinAbs(0.0, 1e-12));
  REQUIRE(ball.active.size() == 6);
  REQUIRE(tangency_report(hex, ball).is_tangential);
}

TEST_CASE("ball in raw half-planes", "[inscribe]") {
  // Unit box around the origin, one normal deliberately not unit length.
  const std::vector<HalfPlane2> box = {{{7.0, 0.0}, -7.0},
                                       {{-1.0, 0.0}, -1.0},
                                       {{0.0, 1.0}, -1.0},
                                       {{0.0, -1.0}, -1.0}};
  const InscribedBall2 ball = max_inscribed_ball(box);
  REQUIRE_THAT(ball.radius, WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(ball.center.x, WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(ball.center.y, WithinAbs(0.0, 1e-12));
  REQUIRE(ball.center_unique);
}

TEST_CASE("degenerate half-plane systems fail", "[inscribe]") {
  // A wedge admits arbitrarily large balls.
  testutil::require_error(ErrorCode::Unbounded, [] {
    max_inscribed_ball(
        std::vector<HalfPlane2>{{{1.0, 0.0}, 0.0}, {{0.0, 1.0}, 0.0}});
  });
  // x >= 1 and x <= 0 cannot both hold.
  testutil::require_error(ErrorCode::Infeasible, [] {
    max_inscribed_ball(
        std::vector<HalfPlane2>{{{1.0, 0.0}, 1.0}, {{-1.0, 0.0}, 0.0}});
  });
  // x >= 0 and x <= 0 leave a slab with no interior.
  testutil::require_error(ErrorCode::Infeasible, [] {
    max_inscribed_ball(
        std::vector<HalfPlane2>{{{1.0, 0.0}, 0.0}, {{-1.0, 0.0}, 0.0}});
  });
  testutil::require_error(ErrorCode::InvalidArgument, [] {
    max_inscribed_ball(std::vector<HalfPlane2>{{{0.0, 0.0}, 1.0}});
  });
}

TEST_CASE("insphere of a cube", "[inscribe]") {
  const Polyhedron3 cube = named_solid(SolidKind::Cube, 1.0);
  const InscribedBall3 ball = insphere(cube);
  REQUIRE_THAT(ball.radius, WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(ball.center.x, WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(ball.center.y, WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(ball.center.z, WithinAbs(0.0, 1e-12));
  REQUIRE(ball.center_unique);
  REQUIRE(ball.active.size() == 6);

  const TangencyReport rep = tangency_report(cube, ball);
  REQUIRE(rep.is_tangential);
  for (Contact c : rep.status) REQUIRE(c == Contact::Tangent);
}

TEST_CASE("insphere of a translated cube", "[inscribe]") {
  const Polyhedron3 cube =
      testgen::box(0.5, 0.5, 0.5, {5.5, 5.5, 5.5});
  const InscribedBall3 ball = insphere(cube);
  REQUIRE_THAT(ball.radius, WithinAbs(0.5, 1e-12));
  REQUIRE_THAT(ball.center.x, WithinAbs(5.5, 1e-9));
  REQUIRE_THAT(ball.center.y, WithinAbs(5.5, 1e-9));
  REQUIRE_THAT(ball.center.z, WithinAbs(5.5, 1e-9));
}

TEST_CASE("insphere of a tall box has a center segment", "[inscribe]") {
  const Polyhedron3 tall = testgen::box(1.0, 1.0, 2.0);
  const InscribedBall3 ball = insphere(tall);
  REQUIRE_THAT(ball.radius, WithinAbs(1.0, 1e-12));
  REQUIRE_FALSE(ball.center_unique);
  // Optimal centers run along the z axis from (0, 0, -1) to (0, 0, 1).
  REQUIRE_THAT(ball.center.z, WithinAbs(-1.0, 1e-9));
  REQUIRE_THAT(ball.face_center.x, WithinAbs(0.0, 1e-9));
  REQUIRE_THAT(ball.face_center.y, WithinAbs(0.0, 1e-9));
  REQUIRE_THAT(ball.face_center.z, WithinAbs(0.0, 1e-9));
  REQUIRE(ball.active == std::vector<int>{0, 2, 3, 4, 5});

  const TangencyReport rep = tangency_report(tall, ball);
  REQUIRE_FALSE(rep.is_tangential);
  REQUIRE(rep.status ==
          std::vector<Contact>{Contact::Clear, Contact::Clear,
                               Contact::Tangent, Contact::Tangent,
                               Contact::Tangent, Contact::Tangent});
}

TEST_CASE("polygons built from tangent lines recover their circle", "[inscribe]") {
  testgen::Rng rng(20260425);
  for (int t = 0; t < 120; ++t) {
    const int k = rng.uniform_int(3, 12);
    const double r = rng.uniform(0.3, 4.0);
    const Vec2 offset = {rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    const Polygon2 p = testgen::tangent_polygon(rng, k, r, offset);
    const InscribedBall2 ball = incircle(p);
    REQUIRE_THAT(ball.radius, WithinRel(r, 1e-8));
    REQUIRE_THAT(ball.center.x, WithinAbs(offset.x, 1e-8 * (1.0 + r)));
    REQUIRE_THAT(ball.center.y, WithinAbs(offset.y, 1e-8 * (1.0 + r)));
    REQUIRE(ball.center_unique);
    REQUIRE(static_cast<int>(ball.active.size()) == k);
    REQUIRE(tangency_report(p, ball).is_tangential);
  }
}

TEST_CASE("polyhedra built from tangent planes recover their sphere", "[inscribe]") {
  testgen::Rng rng(20260426);
  for (int t = 0; t < 60; ++t) {
    const double r = rng.uniform(0.3, 3.0);
    Polyhedron3 p = [&] {
      switch (t % 3) {
        case 0: return testgen::tangent_tetrahedron(rng, r);
        case 1: return testgen::tangent_prism(rng, rng.uniform_int(3, 8), r);
        default: return testgen::rotated_cube(rng, r);
      }
    }();
    const InscribedBall3 ball = insphere(p);
    REQUIRE_THAT(ball.radius, WithinRel(r, 1e-8));
    REQUIRE(tangency_report(p, ball).is_tangential);
  }
}

TEST_CASE("every triangle admits a tangent incircle", "[inscribe]") {
  testgen::Rng rng(20260427);
  for (int t = 0; t < 50; ++t) {
    const Polygon2 tri = testgen::random_triangle(rng);
    const InscribedBall2 ball = incircle(tri);
    REQUIRE(ball.radius > 0.0);
    REQUIRE(ball.center_unique);
    const TangencyReport rep = tangency_report(tri, ball);
    REQUIRE(rep.is_tangential);
    REQUIRE(rep.status.size() == 3);
  }
}

TEST_CASE("every tetrahedron admits a tangent insphere", "[inscribe]") {
  testgen::Rng rng(20260428);
  for (int t = 0; t < 50; ++t) {
    const Polyhedron3 tet = testgen::random_tetrahedron(rng);
    const InscribedBall3 ball = insphere(tet);
    REQUIRE(ball.radius > 0.0);
    REQUIRE(ball.center_unique);
    const TangencyReport rep = tangency_report(tet, ball);
    REQUIRE(rep.is_tangential);
    REQUIRE(rep.status.size() == 4);
  }
}

TEST_CASE("inscribed balls follow scaling and translation", "[inscribe]") {
  testgen::Rng rng(20260429);
  for (int t = 0; t < 40; ++t) {
    const Polygon2 p = testgen::random_convex_polygon(rng, rng.uniform_int(5, 20));
    const InscribedBall2 ball = incircle(p);
    const double c = rng.uniform(0.2, 5.0);
    const InscribedBall2 scaled_ball = incircle(scale_polygon(p, c));
    REQUIRE_THAT(scaled_ball.radius, WithinRel(c * ball.radius, 1e-9));
    const Vec2 shift = {rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0)};
    const InscribedBall2 moved = incircle(translate_polygon(p, shift));
    REQUIRE_THAT(moved.radius, WithinRel(ball.radius, 1e-9));
    REQUIRE_THAT(moved.center.x, WithinAbs(ball.center.x + shift.x, 1e-7));
    REQUIRE_THAT(moved.center.y, WithinAbs(ball.center.y + shift.y, 1e-7));
  }
}

TEST_CASE("a foreign ball is rejected", "[inscribe]") {
  InscribedBall2 fake;
  fake.center = {1.0, 1.0};
  fake.face_center = {1.0, 1.0};
  fake.radius = 1.5;
  testutil::require_error(ErrorCode::MismatchedShape,
                          [&] { tangency_report(square2(), fake); });
}

TEST_CASE("a tangent line can touch outside its segment", "[inscribe]") {
  // The bottom edge ends at x = 2 while the ball below sits at x = 2 + 1e-6,
  // so the tangency foot lands just beyond the segment. The next edge leaves
  // the bottom line at a tiny angle and stays within the tangency slack.
  const double theta = 3e-4;
  const Polygon2 p = validate_polygon({{0, 0},
                                       {2, 0},
                                       {2 + 2 * std::cos(theta), 2 * std::sin(theta)},
                                       {4, 3},
                                       {0, 3}});
  InscribedBall2 ball;
  ball.center = {2 + 1e-6, 1.0};
  ball.face_center = ball.center;
  ball.radius = 1.0;
  const TangencyReport rep = tangency_report(p, ball);
  REQUIRE(rep.status.size() == 5);
  REQUIRE(rep.status[0] == Contact::TangentOutsideElement);
  REQUIRE(rep.status[1] == Contact::Tangent);
  REQUIRE_FALSE(rep.is_tangential);
}

TEST_CASE("no ball fits beyond the computed radius", "[inscribe]") {
  testgen::Rng rng(20260430);
  for (int t = 0; t < 40; ++t) {
    const Polygon2 p = testgen::random_convex_polygon(rng, rng.uniform_int(5, 16));
    const InscribedBall2 ball = incircle(p);

    // Rebuild the underlying program: maximize r subject to every merged
    // edge line keeping distance at least r from the center.
    std::vector<lp::Constraint> rows;
    for (const EdgeRun& run : merged_edges(p)) {
      const Vec2 a = p.vertices()[run.first];
      const Vec2 b = p.vertices()[run.last];
      Vec2 n = perp_left(b - a);
      n = n / norm(n);
      lp::Constraint row;
      row.a[0] = -n.x;
      row.a[1] = -n.y;
      row.a[2] = 1.0;
      row.b = -dot(n, a);
      rows.push_back(row);
    }
    const lp::Solution sol = lp::maximize(3, {0.0, 0.0, 1.0}, rows);
    REQUIRE(sol.status == lp::Status::Optimal);
    REQUIRE_THAT(sol.value, WithinRel(ball.radius, 1e-9));

    // Demanding a strictly larger radius must be infeasible.
    lp::Constraint demand;
    demand.a[2] = -1.0;
    demand.b = -(ball.radius + 1e-6 * (1.0 + ball.radius));
    rows.push_back(demand);
    REQUIRE(lp::maximize(3, {0.0, 0.0, 1.0}, rows).status ==
            lp::Status::Infeasible);
  }
}
