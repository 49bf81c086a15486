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

// Release gate: one pass/fail line per documented acceptance check, each at
// its stated tolerance. Exits with the number of failed checks.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "generators.hpp"
#include "inball/inball.hpp"

namespace {

using namespace inball;

// Collects sub-check failures; a criterion passes when no detail piled up.
class Outcome {
 public:
  void expect(bool ok, const std::string& problem) {
    if (ok) return;
    ++failures_;
    if (detail_.size() > 300) return;  // keep the line readable
    if (!detail_.empty()) detail_ += "; ";
    detail_ += problem;
  }

  void expect_close(const std::string& what, double got, double want,
                    double tol) {
    expect(std::abs(got - want) <= tol,
           what + " = " + fmt12(got) + ", want " + fmt12(want) + " within " +
               fmt12(tol));
  }

  void expect_rel(const std::string& what, double got, double want,
                  double rel_tol) {
    expect_close(what, got, want, rel_tol * std::abs(want));
  }

  bool ok() const { return failures_ == 0; }
  const std::string& detail() const { return detail_; }

 private:
  int failures_ = 0;
  std::string detail_;
};

Polygon2 square_side2() {
  return validate_polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
}

Polygon2 rectangle_2x4() {
  return validate_polygon({{0, 0}, {4, 0}, {4, 2}, {0, 2}});
}

// 1: full polygon pipeline on the side-2 square.
Outcome square_pipeline() {
  Outcome out;
  const AnalysisReport rep = analyze_polygon(square_side2(), {});
  out.expect(rep.ball.has_value() && rep.derivative.has_value(),
             "pipeline skipped the ball or derivative stage");
  if (!out.ok()) return out;
  out.expect_close("r", rep.ball->radius, 1.0, 1e-9);
  out.expect_close("A", rep.measure, 4.0, 1e-9);
  out.expect_close("L", rep.boundary, 8.0, 1e-9);
  out.expect_close("dA/dr", rep.derivative->fd_estimate, 8.0, 1e-9 * 8.0);
  out.expect(rep.derivative->residual <= 1e-9,
             "relative residual " + fmt12(rep.derivative->residual));
  return out;
}

// 2: equilateral triangle with unit inradius.
Outcome equilateral_closed_forms() {
  Outcome out;
  const AnalysisReport rep = analyze_polygon(regular_ngon(3, 1.0), {});
  const double root3 = std::numbers::sqrt3;
  out.expect_rel("A", rep.measure, 3.0 * root3, 1e-9);
  out.expect_rel("L", rep.boundary, 6.0 * root3, 1e-9);
  out.expect(rep.derivative.has_value() && rep.derivative->residual <= 1e-9,
             "derivative residual above 1e-9");
  return out;
}

// 3: n-gon sweep, finite difference against the closed forms.
Outcome ngon_sweep() {
  Outcome out;
  for (double r : {0.5, 1.0, 2.0}) {
    const NGonTable table = ngon_table(3, 64, r, 1e-3);
    for (const NGonRow& row : table.rows) {
      const double closed_l = ngon_perimeter(row.n, r);
      const double closed_a = ngon_area(row.n, r);
      if (std::abs(row.fd_estimate - closed_l) > 1e-9 * closed_l) {
        out.expect(false, "fd at n = " + std::to_string(row.n) + ", r = " +
                              fmt12(r) + " off by " +
                              fmt12(std::abs(row.fd_estimate - closed_l)));
      }
      if (std::abs(row.area - closed_a) > 1e-10 * closed_a) {
        out.expect(false, "area at n = " + std::to_string(row.n) + ", r = " +
                              fmt12(r) + " off by " +
                              fmt12(std::abs(row.area - closed_a)));
      }
    }
  }
  return out;
}

// 4: full polyhedron pipeline on the side-2 cube.
Outcome cube_pipeline() {
  Outcome out;
  const AnalysisReport rep =
      analyze_polyhedron(named_solid(SolidKind::Cube, 1.0), {});
  out.expect(rep.ball.has_value() && rep.derivative.has_value(),
             "pipeline skipped the ball or derivative stage");
  if (!out.ok()) return out;
  out.expect_close("r", rep.ball->radius, 1.0, 1e-9);
  out.expect_close("V", rep.measure, 8.0, 1e-9);
  out.expect_close("sigma", rep.boundary, 24.0, 1e-9);
  out.expect(rep.derivative->residual <= 1e-9,
             "relative residual " + fmt12(rep.derivative->residual));
  return out;
}

// 5: tetrahedron checked against mesh oracles before any golden value.
Outcome tetrahedron_oracle_then_goldens() {
  Outcome out;
  const Polyhedron3 tet = named_solid(SolidKind::Tetrahedron, 1.0);
  const double vol = volume(tet);
  const double surf = surface_area(tet);

  // Oracle stage: the ratio identity and the finite difference only use
  // mesh-derived quantities.
  bool oracle_ok = true;
  if (std::abs(surf * 1.0 / 3.0 - vol) > 1e-10 * vol) {
    oracle_ok = false;
    out.expect(false, "sigma r / 3 = " + fmt12(surf / 3.0) + " vs V = " +
                          fmt12(vol));
  }
  const ScalingFamily3 family = make_family(tet, insphere(tet));
  const DerivativeReport rep = verify_theorem(family, 1.0, 1e-3);
  if (std::abs(rep.fd_estimate - surf) > 1e-9 * surf) {
    oracle_ok = false;
    out.expect(false,
               "dV/dr = " + fmt12(rep.fd_estimate) + " vs sigma = " + fmt12(surf));
  }

  // Golden stage, entered only once the mesh oracles agree.
  if (oracle_ok) {
    out.expect_rel("V", vol, 8.0 * std::numbers::sqrt3, 1e-10);
    out.expect_rel("sigma", surf, 24.0 * std::numbers::sqrt3, 1e-10);
  } else {
    out.expect(false, "goldens skipped: mesh oracles disagree");
  }
  return out;
}

// 6: right triangle with legs 3 and 4.
Outcome right_triangle_incircle() {
  Outcome out;
  const Polygon2 tri = validate_polygon({{0, 0}, {4, 0}, {0, 3}});
  const InscribedBall2 ball = incircle(tri);
  out.expect_close("center.x", ball.center.x, 1.0, 1e-9);
  out.expect_close("center.y", ball.center.y, 1.0, 1e-9);
  out.expect_close("r", ball.radius, 1.0, 1e-9);
  const double area = signed_area(tri);
  const double perim = perimeter(tri);
  out.expect_close("A", area, 6.0, 1e-12);
  out.expect_close("L", perim, 12.0, 1e-12);
  out.expect_close("A - r L / 2", area - ball.radius * perim / 2.0, 0.0, 1e-12);
  return out;
}

// 7: rectangle tangency classification.
Outcome rectangle_classification() {
  Outcome out;
  const AnalysisReport rep = analyze_polygon(rectangle_2x4(), {});
  out.expect(rep.tangency.has_value(), "tangency stage missing");
  if (!out.ok()) return out;
  out.expect(!rep.tangency->is_tangential, "rectangle claimed tangential");
  int tangent = 0, clear = 0, other = 0;
  for (Contact c : rep.tangency->status) {
    if (c == Contact::Tangent) ++tangent;
    else if (c == Contact::Clear) ++clear;
    else ++other;
  }
  out.expect(tangent == 2 && clear == 2 && other == 0,
             "contact counts " + std::to_string(tangent) + " tangent, " +
                 std::to_string(clear) + " clear, " + std::to_string(other) +
                 " other");
  out.expect(rep.verdict == Verdict::NonTangentialErosionUsed,
             std::string("verdict ") + to_string(rep.verdict));
  return out;
}

// 8: rectangle erosion quotients and their extrapolated limit.
Outcome rectangle_erosion_table() {
  Outcome out;
  const ErosionTable table = erosion_derivative(rectangle_2x4(), 0.25, 3);
  out.expect(table.rows.size() == 3, "expected 3 rows");
  if (!out.ok()) return out;
  out.expect_close("quotient(0.25)", table.rows[0].quotient, 11.0, 1e-12);
  out.expect_close("quotient(0.125)", table.rows[1].quotient, 11.5, 1e-12);
  out.expect_close("quotient(0.0625)", table.rows[2].quotient, 11.75, 1e-12);
  out.expect_close("extrapolated", table.extrapolated_limit, 12.0, 1e-9);
  return out;
}

// 9: squeeze bounds strict across fuzz corpora built from tangent lines and
// planes; the difference quotient near the top of the interval approaches
// the boundary measure.
Outcome squeeze_fuzz() {
  Outcome out;
  testgen::Rng rng2(20260601);
  int polygons_checked = 0;
  for (int t = 0; t < 200; ++t) {
    const double r = rng2.uniform(0.3, 4.0);
    const Vec2 offset = {rng2.uniform(-5.0, 5.0), rng2.uniform(-5.0, 5.0)};
    const Polygon2 p =
        testgen::tangent_polygon(rng2, rng2.uniform_int(3, 12), r, offset);
    const InscribedBall2 ball = incircle(p);
    const ScalingFamily2 family = make_family(p, ball);
    const std::vector<SqueezeSample> samples =
        squeeze_check(family, ball.radius, default_squeeze_samples(ball.radius));
    for (const SqueezeSample& s : samples) {
      if (!s.strict) {
        out.expect(false, "loose polygon bound at s = " + fmt12(s.s) +
                              ", r = " + fmt12(ball.radius));
      }
    }
    const SqueezeSample& last = samples.back();
    const double quotient = last.middle / (ball.radius - last.s);
    const double l_at_r = perimeter(family.member(ball.radius));
    if (std::abs(quotient - l_at_r) > 1e-5 * l_at_r) {
      out.expect(false, "near-limit quotient " + fmt12(quotient) + " vs L = " +
                            fmt12(l_at_r));
    }
    ++polygons_checked;
  }
  out.expect(polygons_checked >= 200, "polygon corpus too small");

  testgen::Rng rng3(20260602);
  int solids_checked = 0;
  for (int t = 0; t < 50; ++t) {
    const double r = rng3.uniform(0.4, 3.0);
    Polyhedron3 p = [&] {
      switch (t % 3) {
        case 0: return testgen::tangent_tetrahedron(rng3, r);
        case 1: return testgen::tangent_prism(rng3, rng3.uniform_int(3, 8), r);
        default: return testgen::rotated_cube(rng3, r);
      }
    }();
    const InscribedBall3 ball = insphere(p);
    const ScalingFamily3 family = make_family(p, ball);
    const std::vector<SqueezeSample> samples =
        squeeze_check(family, ball.radius, default_squeeze_samples(ball.radius));
    for (const SqueezeSample& s : samples) {
      if (!s.strict) {
        out.expect(false, "loose polyhedron bound at s = " + fmt12(s.s) +
                              ", r = " + fmt12(ball.radius));
      }
    }
    ++solids_checked;
  }
  out.expect(solids_checked >= 50, "polyhedron corpus too small");
  return out;
}

// 10: scaled copies of lines and planes sit at |1 - c| times the original
// distance from the origin.
Outcome scaled_distance_fuzz() {
  Outcome out;
  testgen::Rng rng(20260603);
  for (int t = 0; t < 1000; ++t) {
    Vec2 n2;
    do {
      n2 = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    } while (norm(n2) < 0.2);
    n2 = n2 * rng.uniform(0.5, 3.0);
    const double offset2 = (rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) *
                           rng.uniform(0.1, 5.0) * norm(n2);
    // Independent distance: project the closest point onto the origin.
    const Vec2 foot2 = n2 * (offset2 / dot(n2, n2));
    const double d2 = norm(foot2);
    const double c = rng.uniform(1e-6, 3.0);
    const double got2 = scaled_line_distance({n2, offset2}, c);
    if (std::abs(got2 - std::abs(1.0 - c) * d2) > 1e-10) {
      out.expect(false, "line case " + std::to_string(t) + " off by " +
                            fmt12(std::abs(got2 - std::abs(1.0 - c) * d2)));
    }

    Vec3 n3;
    do {
      n3 = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
            rng.uniform(-1.0, 1.0)};
    } while (norm(n3) < 0.2);
    n3 = n3 * rng.uniform(0.5, 3.0);
    const double offset3 = (rng.uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) *
                           rng.uniform(0.1, 5.0) * norm(n3);
    const Vec3 foot3 = n3 * (offset3 / dot(n3, n3));
    const double d3 = norm(foot3);
    const double got3 = scaled_plane_distance({n3, offset3}, c);
    if (std::abs(got3 - std::abs(1.0 - c) * d3) > 1e-10) {
      out.expect(false, "plane case " + std::to_string(t) + " off by " +
                            fmt12(std::abs(got3 - std::abs(1.0 - c) * d3)));
    }
  }
  return out;
}

// 11: property suite on fixed seeds: scaling laws, translation invariance,
// isoperimetric inequalities, and solver certificates.
Outcome property_suite() {
  Outcome out;

  // Scaling laws: area c^2, volume c^3, perimeter c, surface c^2.
  testgen::Rng rng(20260604);
  for (int t = 0; t < 60; ++t) {
    const Polygon2 p =
        testgen::random_convex_polygon(rng, rng.uniform_int(4, 16));
    const double c = rng.uniform(0.2, 5.0);
    const Polygon2 q = scale_polygon(p, c);
    if (std::abs(signed_area(q) - c * c * signed_area(p)) >
        1e-10 * c * c * signed_area(p)) {
      out.expect(false, "area scaling broke at c = " + fmt12(c));
    }
    if (std::abs(perimeter(q) - c * perimeter(p)) > 1e-10 * c * perimeter(p)) {
      out.expect(false, "perimeter scaling broke at c = " + fmt12(c));
    }
  }
  for (int t = 0; t < 60; ++t) {
    Polyhedron3 p = [&]() -> Polyhedron3 {
      if (t % 2 == 0) return testgen::random_tetrahedron(rng);
      const int k = rng.uniform_int(3, 7);
      const double r = rng.uniform(0.5, 2.0);
      return testgen::tangent_prism(rng, k, r);
    }();
    const double c = rng.uniform(0.2, 4.0);
    const Polyhedron3 q = scale_polyhedron(p, c);
    if (std::abs(volume(q) - c * c * c * volume(p)) >
        1e-10 * c * c * c * volume(p)) {
      out.expect(false, "volume scaling broke at c = " + fmt12(c));
    }
    if (std::abs(surface_area(q) - c * c * surface_area(p)) >
        1e-10 * c * c * surface_area(p)) {
      out.expect(false, "surface scaling broke at c = " + fmt12(c));
    }
  }

  // Translation invariance.
  testgen::Rng rng_shift(20260605);
  for (int t = 0; t < 60; ++t) {
    const Polygon2 p =
        testgen::random_convex_polygon(rng_shift, rng_shift.uniform_int(4, 16));
    const Vec2 shift = {rng_shift.uniform(-50.0, 50.0),
                        rng_shift.uniform(-50.0, 50.0)};
    const Polygon2 q = translate_polygon(p, shift);
    if (std::abs(signed_area(q) - signed_area(p)) > 1e-9 * signed_area(p)) {
      out.expect(false, "area moved under translation");
    }
    if (std::abs(perimeter(q) - perimeter(p)) > 1e-9 * perimeter(p)) {
      out.expect(false, "perimeter moved under translation");
    }
    const Polyhedron3 s = testgen::random_tetrahedron(rng_shift);
    const Vec3 shift3 = {rng_shift.uniform(-10.0, 10.0),
                         rng_shift.uniform(-10.0, 10.0),
                         rng_shift.uniform(-10.0, 10.0)};
    const Polyhedron3 sq = translate_polyhedron(s, shift3);
    if (std::abs(volume(sq) - volume(s)) > 1e-9 * volume(s)) {
      out.expect(false, "volume moved under translation");
    }
    if (std::abs(surface_area(sq) - surface_area(s)) >
        1e-9 * surface_area(s)) {
      out.expect(false, "surface moved under translation");
    }
  }

  // Isoperimetric inequalities, strict for polygons and polyhedra.
  testgen::Rng rng_iso(20260606);
  for (int t = 0; t < 100; ++t) {
    const Polygon2 p = [&]() -> Polygon2 {
      if (t % 2 == 0) {
        return testgen::random_convex_polygon(rng_iso,
                                              rng_iso.uniform_int(4, 20));
      }
      const int k = rng_iso.uniform_int(3, 12);
      const double r = rng_iso.uniform(0.3, 3.0);
      return testgen::tangent_polygon(rng_iso, k, r);
    }();
    const double a = signed_area(p);
    const double l = perimeter(p);
    if (!(l * l > 4.0 * std::numbers::pi * a)) {
      out.expect(false, "planar isoperimetric inequality failed");
    }
    Polyhedron3 s = [&]() -> Polyhedron3 {
      switch (t % 3) {
        case 0: return testgen::random_tetrahedron(rng_iso);
        case 1: {
          const int k = rng_iso.uniform_int(3, 8);
          const double r = rng_iso.uniform(0.5, 2.0);
          return testgen::tangent_prism(rng_iso, k, r);
        }
        default: return testgen::rotated_cube(rng_iso, rng_iso.uniform(0.5, 2.0));
      }
    }();
    const double v = volume(s);
    const double sigma = surface_area(s);
    if (!(sigma * sigma * sigma > 36.0 * std::numbers::pi * v * v)) {
      out.expect(false, "spatial isoperimetric inequality failed");
    }
  }

  // Solver certificates: the returned center is feasible and no ball of a
  // strictly larger radius fits.
  testgen::Rng rng_lp(20260607);
  for (int t = 0; t < 50; ++t) {
    const Polygon2 p =
        testgen::random_convex_polygon(rng_lp, rng_lp.uniform_int(4, 14));
    const InscribedBall2 ball = incircle(p);
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
      // Feasibility: every edge line keeps at least the radius away.
      const double dist = dot(n, ball.center) - dot(n, a);
      if (dist < ball.radius - 1e-9 * std::max(1.0, ball.radius)) {
        out.expect(false, "center violates an edge constraint");
      }
    }
    lp::Constraint demand;
    demand.a[2] = -1.0;
    demand.b = -(ball.radius * (1.0 + 1e-6));
    rows.push_back(demand);
    if (lp::maximize(3, {0.0, 0.0, 1.0}, rows).status !=
        lp::Status::Infeasible) {
      out.expect(false, "a larger ball was accepted");
    }
  }
  return out;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"square pipeline (r, A, L, dA/dr)", square_pipeline},
      {"equilateral triangle closed forms", equilateral_closed_forms},
      {"n-gon sweep, n = 3..64, r in {0.5, 1, 2}", ngon_sweep},
      {"cube pipeline (r, V, sigma, dV/dr)", cube_pipeline},
      {"tetrahedron oracles before goldens", tetrahedron_oracle_then_goldens},
      {"3-4-5 triangle incircle and ratio identity", right_triangle_incircle},
      {"rectangle tangency classification", rectangle_classification},
      {"rectangle erosion quotients", rectangle_erosion_table},
      {"squeeze bounds on fuzz corpora", squeeze_fuzz},
      {"scaled line and plane distances", scaled_distance_fuzz},
      {"scaling, translation, isoperimetric, solver certificates",
       property_suite},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (const std::exception& e) {
      outcome.expect(false, std::string("exception: ") + e.what());
    }
    if (outcome.ok()) {
      std::printf("criterion %2zu: PASS  %s\n", i + 1, criteria[i].title);
    } else {
      ++failures;
      std::printf("criterion %2zu: FAIL  %s  (%s)\n", i + 1, criteria[i].title,
                  outcome.detail().c_str());
    }
  }
  if (failures == 0) {
    std::printf("all %zu criteria passed\n", criteria.size());
  } else {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  }
  return failures;
}
