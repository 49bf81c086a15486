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

#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "inball/error.hpp"
#include "inball/geometry2d.hpp"
#include "inball/geometry3d.hpp"
#include "inball/linprog.hpp"
#include "inball/vec.hpp"

namespace inball {

// Relative slack (in units of the radius) within which a boundary element
// counts as touching the ball.
inline constexpr double kTangencyRelTol = 1e-7;

// Half-plane {x : dot(normal, x) >= offset}; normal points to the interior.
struct HalfPlane2 {
  Vec2 normal;
  double offset = 0.0;
};

// Half-space {x : dot(normal, x) >= offset}; normal points to the interior.
struct HalfSpace3 {
  Vec3 normal;
  double offset = 0.0;
};

// Largest ball inside an intersection of half-planes/spaces.
//
// center is the lexicographically smallest optimal center. When the set of
// optimal centers is a segment or a box slice, face_center is the midpoint
// of the lexicographic minimum and maximum of that set: a point in the
// relative interior of the optimal face in the generic case, and therefore
// the right spot to classify tangency from. center_unique reports whether
// the optimal center spread is below 1e-9 in every coordinate; when it is,
// the two centers coincide.
//
// active lists the constraints whose distance from center equals the radius
// (within 1e-9 relative slack).
struct InscribedBall2 {
  Vec2 center;
  Vec2 face_center;
  double radius = 0.0;
  std::vector<int> active;
  bool center_unique = true;
};

struct InscribedBall3 {
  Vec3 center;
  Vec3 face_center;
  double radius = 0.0;
  std::vector<int> active;
  bool center_unique = true;
};

enum class Contact { Tangent, Clear, TangentOutsideElement };

inline const char* to_string(Contact c, int dimension) {
  switch (c) {
    case Contact::Tangent: return "Tangent";
    case Contact::Clear:   return "Clear";
    case Contact::TangentOutsideElement:
      return dimension == 2 ? "TangentLineButOutsideSegment"
                            : "TangentPlaneButOutsideFacet";
  }
  return "Unknown";
}

// Per-element contact classification of an inscribed ball against the
// shape it was computed for. 2D elements are collinear-merged edge runs, in
// merged_edges() order; 3D elements are facets.
struct TangencyReport {
  std::vector<Contact> status;
  bool is_tangential = false;
  // Smallest distance(center, element line/plane) - radius over all
  // elements; nonnegative up to rounding for a correctly computed ball.
  double min_gap = 0.0;
};

namespace detail {

struct BallCore {
  std::array<double, 4> center{};       // lexicographic minimum
  std::array<double, 4> face_center{};  // midpoint of lex min and lex max
  double radius = 0.0;
  std::vector<int> active;
  bool unique = true;
};

inline void check_lp(lp::Status status, const char* what) {
  switch (status) {
    case lp::Status::Optimal:
      return;
    case lp::Status::Unbounded:
      fail(ErrorCode::Unbounded,
           std::string(what) + ": constraints do not bound the region");
    case lp::Status::Infeasible:
      fail(ErrorCode::Infeasible,
           std::string(what) + ": constraints admit no interior");
    case lp::Status::NumericalFailure:
      fail(ErrorCode::NumericalFailure,
           std::string(what) + ": simplex failed to converge");
  }
}

// Solves max r s.t. dot(n_j, x) - offset_j >= r over x in R^dim, then
// resolves ties among optimal centers with sequential one-coordinate LPs.
// Normals must be unit length so that r is a true distance.
inline BallCore solve_ball(int dim,
                           const std::vector<std::array<double, 4>>& normals,
                           const std::vector<double>& offsets) {
  const int k = dim + 1;
  std::vector<lp::Constraint> base;
  base.reserve(normals.size() + 2 * dim + 1);
  double scale = 1.0;
  for (std::size_t j = 0; j < normals.size(); ++j) {
    lp::Constraint row;
    for (int i = 0; i < dim; ++i) row.a[i] = -normals[j][i];
    row.a[dim] = 1.0;
    row.b = -offsets[j];
    base.push_back(row);
    scale = std::max(scale, std::abs(offsets[j]));
  }

  std::array<double, 4> objective{};
  objective[dim] = 1.0;
  const lp::Solution top = lp::maximize(k, objective, base);
  check_lp(top.status, "inscribed ball");
  const double radius = top.value;
  if (radius <= 1e-10 * scale) {
    fail(ErrorCode::Infeasible, "interior is empty: max inscribed radius is " +
                                    std::to_string(radius));
  }

  // Pin r at the optimum, then walk coordinates. Each leg reuses the pins
  // accumulated so far, so the end point is the lexicographic extreme of
  // the optimal face.
  lp::Constraint pin_r;
  pin_r.a[dim] = -1.0;
  pin_r.b = -radius;
  base.push_back(pin_r);

  auto face_extreme = [&](int coord, double direction,
                          const std::vector<lp::Constraint>& pins) -> double {
    std::vector<lp::Constraint> prob = base;
    prob.insert(prob.end(), pins.begin(), pins.end());
    std::array<double, 4> obj{};
    obj[coord] = direction;
    const lp::Solution sol = lp::maximize(k, obj, prob);
    check_lp(sol.status, "center tie-break");
    return sol.point[coord];
  };
  auto pin_coord = [](std::vector<lp::Constraint>& pins, int coord,
                      double direction, double v) {
    lp::Constraint pin;
    pin.a[coord] = direction;
    pin.b = direction * v;  // direction * x_coord <= direction * v
    pins.push_back(pin);
  };

  BallCore out;
  out.radius = radius;
  std::vector<lp::Constraint> lo_pins, hi_pins;
  const std::vector<lp::Constraint> no_pins;
  std::array<double, 4> lex_max{};
  double spread = 0.0;
  for (int coord = 0; coord < dim; ++coord) {
    out.center[coord] = face_extreme(coord, -1.0, lo_pins);
    pin_coord(lo_pins, coord, -1.0, out.center[coord]);
    lex_max[coord] = face_extreme(coord, +1.0, hi_pins);
    pin_coord(hi_pins, coord, +1.0, lex_max[coord]);
    // Free spread of this coordinate over the whole optimal face.
    const double hi = face_extreme(coord, +1.0, no_pins);
    const double lo = face_extreme(coord, -1.0, no_pins);
    spread = std::max(spread, hi - lo);
  }
  out.unique = spread <= 1e-9 * std::max(1.0, radius);
  for (int coord = 0; coord < dim; ++coord) {
    out.face_center[coord] = 0.5 * (out.center[coord] + lex_max[coord]);
  }

  const double active_tol = 1e-9 * std::max(1.0, radius);
  for (std::size_t j = 0; j < normals.size(); ++j) {
    double dist = -offsets[j];
    for (int i = 0; i < dim; ++i) dist += normals[j][i] * out.center[i];
    if (std::abs(dist - radius) <= active_tol) {
      out.active.push_back(static_cast<int>(j));
    }
  }
  return out;
}

}  // namespace detail

inline InscribedBall2 max_inscribed_ball(const std::vector<HalfPlane2>& hs) {
  std::vector<std::array<double, 4>> normals;
  std::vector<double> offsets;
  normals.reserve(hs.size());
  offsets.reserve(hs.size());
  for (const HalfPlane2& h : hs) {
    const double len = norm(h.normal);
    if (len <= kDegeneracyTol) {
      fail(ErrorCode::InvalidArgument, "half-plane normal is zero");
    }
    normals.push_back({h.normal.x / len, h.normal.y / len, 0.0, 0.0});
    offsets.push_back(h.offset / len);
  }
  const detail::BallCore core = detail::solve_ball(2, normals, offsets);
  InscribedBall2 out;
  out.center = {core.center[0], core.center[1]};
  out.face_center = {core.face_center[0], core.face_center[1]};
  out.radius = core.radius;
  out.active = core.active;
  out.center_unique = core.unique;
  return out;
}

inline InscribedBall3 max_inscribed_ball(const std::vector<HalfSpace3>& hs) {
  std::vector<std::array<double, 4>> normals;
  std::vector<double> offsets;
  normals.reserve(hs.size());
  offsets.reserve(hs.size());
  for (const HalfSpace3& h : hs) {
    const double len = norm(h.normal);
    if (len <= kDegeneracyTol) {
      fail(ErrorCode::InvalidArgument, "half-space normal is zero");
    }
    normals.push_back({h.normal.x / len, h.normal.y / len, h.normal.z / len, 0.0});
    offsets.push_back(h.offset / len);
  }
  const detail::BallCore core = detail::solve_ball(3, normals, offsets);
  InscribedBall3 out;
  out.center = {core.center[0], core.center[1], core.center[2]};
  out.face_center = {core.face_center[0], core.face_center[1], core.face_center[2]};
  out.radius = core.radius;
  out.active = core.active;
  out.center_unique = core.unique;
  return out;
}

namespace detail {

// Interior half-plane of one merged edge run.
inline HalfPlane2 run_halfplane(const Polygon2& p, const EdgeRun& run) {
  const Vec2 a = p.vertices()[run.first];
  const Vec2 b = p.vertices()[run.last];
  Vec2 n = perp_left(b - a);
  n = n / norm(n);
  return {n, dot(n, a)};
}

}  // namespace detail

// Incircle of a convex polygon: constraints are the support lines of the
// collinear-merged edges, so active indices refer to merged_edges() order.
inline InscribedBall2 incircle(const Polygon2& p) {
  if (!is_convex(p)) {
    fail(ErrorCode::NotConvex, "incircle requires a convex polygon");
  }
  const std::vector<EdgeRun> runs = merged_edges(p);
  std::vector<HalfPlane2> hs;
  hs.reserve(runs.size());
  for (const EdgeRun& run : runs) {
    hs.push_back(detail::run_halfplane(p, run));
  }
  return max_inscribed_ball(hs);
}

// Insphere of a convex polyhedron; active indices refer to facets.
inline InscribedBall3 insphere(const Polyhedron3& p) {
  if (!is_convex(p)) {
    fail(ErrorCode::NotConvex, "insphere requires a convex polyhedron");
  }
  std::vector<HalfSpace3> hs;
  hs.reserve(p.facets().size());
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    const Plane3 plane = facet_plane(p, static_cast<int>(f));
    hs.push_back({-plane.normal, -plane.offset});
  }
  return max_inscribed_ball(hs);
}

// Classifies each merged edge run of p against the ball computed for p.
// Throws MismatchedShape when an edge line cuts into the ball by more than
// the tangency slack, which means the ball does not belong to this shape.
inline TangencyReport tangency_report(const Polygon2& p, const InscribedBall2& ball) {
  const std::vector<EdgeRun> runs = merged_edges(p);
  const double tau = kTangencyRelTol * ball.radius;
  TangencyReport report;
  report.status.reserve(runs.size());
  report.min_gap = std::numeric_limits<double>::infinity();
  bool all_tangent = true;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const HalfPlane2 h = detail::run_halfplane(p, runs[i]);
    const double dist = dot(h.normal, ball.face_center) - h.offset;
    const double gap = dist - ball.radius;
    report.min_gap = std::min(report.min_gap, gap);
    if (gap < -tau) {
      fail(ErrorCode::MismatchedShape,
           "edge run " + std::to_string(i) + " cuts into the ball by " +
               std::to_string(-gap));
    }
    if (gap > tau) {
      report.status.push_back(Contact::Clear);
      all_tangent = false;
      continue;
    }
    const Vec2 a = p.vertices()[runs[i].first];
    const Vec2 b = p.vertices()[runs[i].last];
    const Vec2 foot = ball.face_center - h.normal * dist;
    const double len = norm(b - a);
    const double t = dot(foot - a, (b - a) / len);
    if (t >= -tau && t <= len + tau) {
      report.status.push_back(Contact::Tangent);
    } else {
      report.status.push_back(Contact::TangentOutsideElement);
      all_tangent = false;
    }
  }
  report.is_tangential = all_tangent;
  return report;
}

// Facet-by-facet version of the polygon report.
inline TangencyReport tangency_report(const Polyhedron3& p, const InscribedBall3& ball) {
  const double tau = kTangencyRelTol * ball.radius;
  TangencyReport report;
  report.status.reserve(p.facets().size());
  report.min_gap = std::numeric_limits<double>::infinity();
  bool all_tangent = true;
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    const Plane3 plane = facet_plane(p, static_cast<int>(f));
    const double dist = plane.offset - dot(plane.normal, ball.face_center);
    const double gap = dist - ball.radius;
    report.min_gap = std::min(report.min_gap, gap);
    if (gap < -tau) {
      fail(ErrorCode::MismatchedShape,
           "facet " + std::to_string(f) + " cuts into the ball by " +
               std::to_string(-gap));
    }
    if (gap > tau) {
      report.status.push_back(Contact::Clear);
      all_tangent = false;
      continue;
    }
    const Vec3 foot = ball.face_center + plane.normal * dist;
    // Inside test against each facet edge, in the facet plane.
    const auto& idx = p.facets()[f].indices;
    bool inside = true;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const Vec3 a = p.vertices()[idx[i]];
      const Vec3 b = p.vertices()[idx[(i + 1) % idx.size()]];
      const double side = dot(cross(b - a, foot - a), plane.normal);
      if (side < -tau * norm(b - a)) {
        inside = false;
        break;
      }
    }
    if (inside) {
      report.status.push_back(Contact::Tangent);
    } else {
      report.status.push_back(Contact::TangentOutsideElement);
      all_tangent = false;
    }
  }
  report.is_tangential = all_tangent;
  return report;
}

}  // namespace inball
