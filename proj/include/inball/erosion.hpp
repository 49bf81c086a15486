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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "inball/error.hpp"
#include "inball/geometry2d.hpp"
#include "inball/inscribe.hpp"
#include "inball/vec.hpp"

namespace inball {

namespace detail {

// Sutherland-Hodgman clip of a convex loop against {x : dot(n, x) >= dmin}.
inline std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, Vec2 n,
                                        double dmin) {
  std::vector<Vec2> out;
  const std::size_t k = poly.size();
  out.reserve(k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    const Vec2 cur = poly[i];
    const Vec2 nxt = poly[(i + 1) % k];
    const double din = dot(n, cur) - dmin;
    const double dnx = dot(n, nxt) - dmin;
    if (din >= 0.0) out.push_back(cur);
    if ((din >= 0.0) != (dnx >= 0.0)) {
      out.push_back(cur + (nxt - cur) * (din / (din - dnx)));
    }
  }
  return out;
}

}  // namespace detail

// Inner parallel body: every support line of the polygon moved inward by
// eps. Defined for convex polygons with 0 < eps < incircle radius; the
// result is again convex with the same incircle center.
inline Polygon2 inner_offset(const Polygon2& p, double eps) {
  const InscribedBall2 ball = incircle(p);  // throws NotConvex first
  if (!(eps > 0.0)) {
    fail(ErrorCode::InvalidArgument,
         "offset must be positive, got " + std::to_string(eps));
  }
  if (eps >= ball.radius) {
    fail(ErrorCode::EpsilonTooLarge,
         "offset " + std::to_string(eps) + " >= inscribed radius " +
             std::to_string(ball.radius) + "; inner body is empty");
  }

  std::vector<Vec2> verts = p.vertices();
  for (const EdgeRun& run : merged_edges(p)) {
    const HalfPlane2 h = detail::run_halfplane(p, run);
    verts = detail::clip_halfplane(verts, h.normal, h.offset + eps);
    if (verts.size() < 3) {
      fail(ErrorCode::EpsilonTooLarge,
           "inner body collapsed at offset " + std::to_string(eps));
    }
  }

  // Clipping at a corner can leave twin points a rounding error apart;
  // merge anything below the validator's duplicate threshold.
  std::vector<Vec2> merged;
  merged.reserve(verts.size());
  for (const Vec2& v : verts) {
    if (merged.empty() || norm(v - merged.back()) > 2.0 * kDegeneracyTol) {
      merged.push_back(v);
    }
  }
  while (merged.size() >= 2 && norm(merged.front() - merged.back()) <= 2.0 * kDegeneracyTol) {
    merged.pop_back();
  }
  if (merged.size() < 3) {
    fail(ErrorCode::EpsilonTooLarge,
         "inner body collapsed at offset " + std::to_string(eps));
  }
  try {
    return validate_polygon(std::move(merged));
  } catch (const Error& e) {
    fail(ErrorCode::EpsilonTooLarge,
         "inner body degenerate at offset " + std::to_string(eps) + " (" +
             e.what() + ")");
  }
}

struct ErosionRow {
  double epsilon = 0.0;
  double inner_area = 0.0;
  // (area(p) - inner_area) / epsilon
  double quotient = 0.0;
};

// Difference quotients of the eroded area at eps0, eps0/2, ..., plus the
// Richardson extrapolation of the two finest rows. The quotient is exactly
// affine in eps for a convex polygon, so the extrapolation reproduces the
// perimeter up to rounding.
struct ErosionTable {
  std::vector<ErosionRow> rows;
  double extrapolated_limit = 0.0;
  double exact_perimeter = 0.0;
  // |extrapolated_limit - exact_perimeter| / exact_perimeter
  double relative_error = 0.0;
};

inline ErosionTable erosion_derivative(const Polygon2& p, double eps0, int levels) {
  if (levels < 2) {
    fail(ErrorCode::BadRange,
         "need at least 2 erosion levels, got " + std::to_string(levels));
  }
  const InscribedBall2 ball = incircle(p);
  if (!(eps0 > 0.0)) {
    fail(ErrorCode::InvalidArgument,
         "eps0 must be positive, got " + std::to_string(eps0));
  }
  if (!(eps0 < 0.5 * ball.radius)) {
    fail(ErrorCode::EpsilonTooLarge,
         "eps0 = " + std::to_string(eps0) + " must stay below half the " +
             "inscribed radius " + std::to_string(ball.radius));
  }

  const double area = signed_area(p);
  ErosionTable table;
  table.exact_perimeter = perimeter(p);
  table.rows.reserve(levels);
  double eps = eps0;
  for (int t = 0; t < levels; ++t, eps *= 0.5) {
    const double inner = signed_area(inner_offset(p, eps));
    table.rows.push_back({eps, inner, (area - inner) / eps});
  }
  const ErosionRow& fine = table.rows[levels - 1];
  const ErosionRow& coarse = table.rows[levels - 2];
  table.extrapolated_limit = 2.0 * fine.quotient - coarse.quotient;
  table.relative_error =
      std::abs(table.extrapolated_limit - table.exact_perimeter) /
      table.exact_perimeter;
  return table;
}

// For an a x b rectangle the inner body is an (a - 2 eps) x (b - 2 eps)
// rectangle, so the difference quotient has the closed form
//   (ab - (a - 2 eps)(b - 2 eps)) / eps = 2a + 2b - 4 eps.
// Reference value for validating the clipping pipeline.
inline double rectangle_quotient_closed_form(double a, double b, double eps) {
  if (!(a > 0.0) || !(b > 0.0)) {
    fail(ErrorCode::InvalidArgument, "rectangle sides must be positive");
  }
  if (!(eps > 0.0) || !(eps < 0.5 * std::min(a, b))) {
    fail(ErrorCode::EpsilonTooLarge,
         "offset must satisfy 0 < eps < min(a, b) / 2");
  }
  return 2.0 * a + 2.0 * b - 4.0 * eps;
}

}  // namespace inball
