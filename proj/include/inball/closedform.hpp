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

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "inball/error.hpp"
#include "inball/geometry2d.hpp"
#include "inball/geometry3d.hpp"
#include "inball/vec.hpp"

namespace inball {

// Regular n-gon with incircle radius r centered at the origin, first edge
// midpoint on the positive x axis: circumradius R = r / cos(pi/n), vertex
// angles pi/n + 2 pi k / n.
inline Polygon2 regular_ngon(int n, double r) {
  if (n < 3) {
    fail(ErrorCode::BadN, "regular polygon needs n >= 3, got " + std::to_string(n));
  }
  if (!(r > 0.0)) {
    fail(ErrorCode::NonPositiveRadius,
         "inscribed radius must be positive, got " + std::to_string(r));
  }
  const double big_r = r / std::cos(std::numbers::pi / n);
  std::vector<Vec2> verts;
  verts.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double theta = std::numbers::pi * (1.0 + 2.0 * k) / n;
    verts.push_back({big_r * std::cos(theta), big_r * std::sin(theta)});
  }
  // Strictly convex by construction (distinct sorted angles on a circle).
  return Polygon2::from_validated(std::move(verts), false);
}

inline double ngon_area(int n, double r) {
  if (n < 3) fail(ErrorCode::BadN, "need n >= 3, got " + std::to_string(n));
  return n * r * r * std::tan(std::numbers::pi / n);
}

inline double ngon_perimeter(int n, double r) {
  if (n < 3) fail(ErrorCode::BadN, "need n >= 3, got " + std::to_string(n));
  return 2.0 * n * r * std::tan(std::numbers::pi / n);
}

inline double circle_area(double r) { return std::numbers::pi * r * r; }
inline double circle_circumference(double r) { return 2.0 * std::numbers::pi * r; }
inline double sphere_volume(double r) {
  return 4.0 / 3.0 * std::numbers::pi * r * r * r;
}
inline double sphere_surface_area(double r) {
  return 4.0 * std::numbers::pi * r * r;
}

struct CircleSphereMetrics {
  double circle_area = 0.0;
  double circle_circumference = 0.0;
  double sphere_volume = 0.0;
  double sphere_surface_area = 0.0;
};

// Limits of the regular n-gon and its 3d analogues as n grows: the round
// body of the same inscribed radius.
inline CircleSphereMetrics circle_sphere_metrics(double r) {
  if (!(r > 0.0)) {
    fail(ErrorCode::NonPositiveRadius,
         "radius must be positive, got " + std::to_string(r));
  }
  return {circle_area(r), circle_circumference(r), sphere_volume(r),
          sphere_surface_area(r)};
}

enum class SolidKind { Cube, Tetrahedron };

// Closed forms for solids with insphere radius r.
inline double cube_volume(double r) { return 8.0 * r * r * r; }
inline double cube_surface_area(double r) { return 24.0 * r * r; }
inline double tetra_edge(double r) { return 2.0 * std::sqrt(6.0) * r; }
inline double tetra_volume(double r) { return 8.0 * std::numbers::sqrt3 * r * r * r; }
inline double tetra_surface_area(double r) { return 24.0 * std::numbers::sqrt3 * r * r; }

// Cube [-r, r]^3 or the regular tetrahedron with insphere radius r
// centered at the origin.
inline Polyhedron3 named_solid(SolidKind kind, double r) {
  if (!(r > 0.0)) {
    fail(ErrorCode::NonPositiveRadius,
         "inscribed radius must be positive, got " + std::to_string(r));
  }
  std::vector<Vec3> v;
  std::vector<Facet> f;
  switch (kind) {
    case SolidKind::Cube: {
      v = {{-r, -r, -r}, {r, -r, -r}, {r, r, -r}, {-r, r, -r},
           {-r, -r, r},  {r, -r, r},  {r, r, r},  {-r, r, r}};
      f = {{{0, 3, 2, 1}}, {{4, 5, 6, 7}}, {{0, 1, 5, 4}},
           {{1, 2, 6, 5}}, {{2, 3, 7, 6}}, {{3, 0, 4, 7}}};
      break;
    }
    case SolidKind::Tetrahedron: {
      // Vertices at (+-s, +-s, +-s) with an even number of minus signs,
      // s = sqrt(3) r: each facet plane sits at distance s / sqrt(3) = r.
      const double s = std::numbers::sqrt3 * r;
      v = {{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
      f = {{{0, 1, 2}}, {{0, 2, 3}}, {{0, 3, 1}}, {{1, 3, 2}}};
      break;
    }
  }
  // Validation also settles the global orientation, so the facet tables
  // above only need consistent winding.
  return validate_polyhedron(std::move(v), std::move(f));
}

inline SolidKind solid_kind_from_name(const std::string& name) {
  if (name == "cube") return SolidKind::Cube;
  if (name == "tetra" || name == "tetrahedron") return SolidKind::Tetrahedron;
  fail(ErrorCode::UnknownKind, "unknown solid kind '" + name + "'");
}

}  // namespace inball
