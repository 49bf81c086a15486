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
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "inball/error.hpp"
#include "inball/vec.hpp"

namespace inball {

namespace detail {

// Shoelace sum of raw vertices; positive for counterclockwise loops.
inline double shoelace(const std::vector<Vec2>& v) {
  double acc = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = v[i];
    const Vec2 b = v[(i + 1) % n];
    acc += cross(a, b);
  }
  return 0.5 * acc;
}

// Signed side of c relative to the directed line a->b, snapped to zero when
// c is within kDegeneracyTol (a distance) of the line.
inline int side_of(Vec2 a, Vec2 b, Vec2 c) {
  const double d = cross(b - a, c - a);
  const double tol = kDegeneracyTol * norm(b - a);
  if (d > tol) return 1;
  if (d < -tol) return -1;
  return 0;
}

// Whether c, already known to lie on the line of a..b, lies on the segment
// itself (with kDegeneracyTol slack at the ends).
inline bool on_segment(Vec2 a, Vec2 b, Vec2 c) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return norm(c - a) <= kDegeneracyTol;
  const double t = dot(c - a, ab) / len2;
  const double slack = kDegeneracyTol / std::sqrt(len2);
  return t >= -slack && t <= 1.0 + slack;
}

// True when segments p1..p2 and q1..q2 share any point, counting contact
// within kDegeneracyTol as sharing.
inline bool segments_touch(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2) {
  const int s1 = side_of(p1, p2, q1);
  const int s2 = side_of(p1, p2, q2);
  const int s3 = side_of(q1, q2, p1);
  const int s4 = side_of(q1, q2, p2);
  if (s1 * s2 < 0 && s3 * s4 < 0) return true;
  if (s1 == 0 && on_segment(p1, p2, q1)) return true;
  if (s2 == 0 && on_segment(p1, p2, q2)) return true;
  if (s3 == 0 && on_segment(q1, q2, p1)) return true;
  if (s4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

// Turn at the joint of consecutive edges e0, e1. |cross| is compared against
// a tolerance equivalent to the joint vertex sitting kDegeneracyTol off the
// shared line.
inline bool is_straight(Vec2 e0, Vec2 e1) {
  const double tol = kDegeneracyTol * std::max(norm(e0), norm(e1));
  return std::abs(cross(e0, e1)) <= tol;
}

}  // namespace detail

// Simple polygon with counterclockwise orientation, no duplicate
// consecutive vertices, no self-intersection. Collinear vertices are legal;
// has_collinear() reports whether any exist.
class Polygon2 {
 public:
  // vertices must already satisfy the class invariants. Untrusted input
  // goes through validate_polygon().
  static Polygon2 from_validated(std::vector<Vec2> vertices, bool has_collinear) {
    Polygon2 p;
    p.vertices_ = std::move(vertices);
    p.has_collinear_ = has_collinear;
    return p;
  }

  const std::vector<Vec2>& vertices() const { return vertices_; }
  bool has_collinear() const { return has_collinear_; }
  int size() const { return static_cast<int>(vertices_.size()); }

 private:
  Polygon2() = default;
  std::vector<Vec2> vertices_;
  bool has_collinear_ = false;
};

struct Metrics2 {
  double area = 0.0;
  double perimeter = 0.0;
};

// Checks finiteness, vertex count, duplicate consecutive vertices, edge
// fold-backs, and pairwise self-intersection, then normalizes orientation
// to counterclockwise. Throws Error on any violation.
inline Polygon2 validate_polygon(std::vector<Vec2> raw) {
  const std::size_t n = raw.size();
  if (n < 3) {
    fail(ErrorCode::TooFewVertices,
         "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_finite(raw[i])) {
      fail(ErrorCode::NonFinite, "vertex " + std::to_string(i) + " is not finite");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (norm(raw[j] - raw[i]) <= kDegeneracyTol) {
      fail(ErrorCode::DuplicateVertex,
           "vertices " + std::to_string(i) + " and " + std::to_string(j) +
               " coincide");
    }
  }

  if (detail::shoelace(raw) < 0.0) {
    std::reverse(raw.begin(), raw.end());
  }

  bool has_collinear = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = raw[(i + 1) % n] - raw[i];
    const Vec2 e1 = raw[(i + 2) % n] - raw[(i + 1) % n];
    if (detail::is_straight(e0, e1)) {
      if (dot(e0, e1) < 0.0) {
        fail(ErrorCode::SelfIntersecting,
             "edge folds back on itself at vertex " + std::to_string((i + 1) % n));
      }
      has_collinear = true;
    }
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (detail::segments_touch(raw[i], raw[(i + 1) % n], raw[j],
                                 raw[(j + 1) % n])) {
        fail(ErrorCode::SelfIntersecting,
             "edges " + std::to_string(i) + " and " + std::to_string(j) +
                 " intersect");
      }
    }
  }

  return Polygon2::from_validated(std::move(raw), has_collinear);
}

// Shoelace area. Positive: orientation is normalized at validation.
inline double signed_area(const Polygon2& p) {
  return detail::shoelace(p.vertices());
}

inline double perimeter(const Polygon2& p) {
  const auto& v = p.vertices();
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    acc += norm(v[(i + 1) % v.size()] - v[i]);
  }
  return acc;
}

// All turns left or straight. Fold-backs were rejected at validation, so a
// zero cross product here always means a forward continuation.
inline bool is_convex(const Polygon2& p) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = v[(i + 1) % n] - v[i];
    const Vec2 e1 = v[(i + 2) % n] - v[(i + 1) % n];
    const double tol = kDegeneracyTol * std::max(norm(e0), norm(e1));
    if (cross(e0, e1) < -tol) return false;
  }
  return true;
}

inline Polygon2 scale_polygon(const Polygon2& p, double c) {
  if (!(c > 0.0)) {
    fail(ErrorCode::NonPositiveScale, "scale factor must be positive, got " +
                                          std::to_string(c));
  }
  std::vector<Vec2> v = p.vertices();
  for (auto& x : v) x = x * c;
  // Scaling by c > 0 preserves every validity invariant, so no re-check.
  return Polygon2::from_validated(std::move(v), p.has_collinear());
}

inline Polygon2 translate_polygon(const Polygon2& p, Vec2 offset) {
  std::vector<Vec2> v = p.vertices();
  for (auto& x : v) x = x + offset;
  return Polygon2::from_validated(std::move(v), p.has_collinear());
}

inline Metrics2 polygon_metrics(const Polygon2& p) {
  return {signed_area(p), perimeter(p)};
}

// One maximal straight stretch of boundary: the chain of vertices from
// first to last (indices wrap) shares a single support line.
struct EdgeRun {
  int first = 0;
  int last = 0;
};

// Collinear-merged edges, in boundary order. For a polygon without
// collinear vertices this is exactly the edge list (i, i+1).
inline std::vector<EdgeRun> merged_edges(const Polygon2& p) {
  const auto& v = p.vertices();
  const int n = p.size();
  std::vector<int> corners;
  for (int i = 0; i < n; ++i) {
    const Vec2 e0 = v[i] - v[(i + n - 1) % n];
    const Vec2 e1 = v[(i + 1) % n] - v[i];
    if (!detail::is_straight(e0, e1)) corners.push_back(i);
  }
  std::vector<EdgeRun> runs;
  runs.reserve(corners.size());
  for (std::size_t t = 0; t < corners.size(); ++t) {
    runs.push_back({corners[t], corners[(t + 1) % corners.size()]});
  }
  return runs;
}

}  // namespace inball
