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
#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "inball/error.hpp"
#include "inball/vec.hpp"

namespace inball {

struct Facet {
  std::vector<int> indices;
};

// Closed, orientable, manifold polyhedral surface with planar convex
// facets, outward-oriented after validation.
class Polyhedron3 {
 public:
  // Input must already satisfy the class invariants. Untrusted input goes
  // through validate_polyhedron().
  static Polyhedron3 from_validated(std::vector<Vec3> vertices,
                                    std::vector<Facet> facets) {
    Polyhedron3 p;
    p.vertices_ = std::move(vertices);
    p.facets_ = std::move(facets);
    return p;
  }

  const std::vector<Vec3>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

 private:
  Polyhedron3() = default;
  std::vector<Vec3> vertices_;
  std::vector<Facet> facets_;
};

struct Metrics3 {
  double volume = 0.0;
  double surface_area = 0.0;
};

// Plane {x : dot(normal, x) = offset} with unit normal.
struct Plane3 {
  Vec3 normal;
  double offset = 0.0;
};

namespace detail {

// Newell vector of a facet loop: normal direction scaled by twice the
// enclosed area. Exact for planar loops regardless of convexity.
inline Vec3 newell(const std::vector<Vec3>& v, const Facet& f) {
  Vec3 acc{};
  const std::size_t k = f.indices.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vec3 a = v[f.indices[i]];
    const Vec3 b = v[f.indices[(i + 1) % k]];
    acc = acc + cross(a, b);
  }
  return acc;
}

inline double signed_volume(const std::vector<Vec3>& v,
                            const std::vector<Facet>& facets) {
  double acc = 0.0;
  for (const Facet& f : facets) {
    const Vec3 a = v[f.indices[0]];
    for (std::size_t t = 1; t + 1 < f.indices.size(); ++t) {
      acc += dot(a, cross(v[f.indices[t]], v[f.indices[t + 1]]));
    }
  }
  return acc / 6.0;
}

inline std::uint64_t edge_key(int a, int b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

}  // namespace detail

inline double bounding_box_diagonal(const std::vector<Vec3>& v) {
  if (v.empty()) return 0.0;
  Vec3 lo = v[0];
  Vec3 hi = v[0];
  for (const Vec3& p : v) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  return norm(hi - lo);
}

// Outward supporting plane of facet f. Requires a validated polyhedron.
inline Plane3 facet_plane(const Polyhedron3& p, int f) {
  const Facet& facet = p.facets()[f];
  Vec3 n = detail::newell(p.vertices(), facet);
  n = n / norm(n);
  Vec3 centroid{};
  for (int idx : facet.indices) centroid = centroid + p.vertices()[idx];
  centroid = centroid / static_cast<double>(facet.indices.size());
  return {n, dot(n, centroid)};
}

// Checks facet well-formedness, closed manifold pairing of directed edges,
// the Euler characteristic, facet planarity and convexity, then orients the
// surface outward (positive enclosed volume). Throws Error on violation.
inline Polyhedron3 validate_polyhedron(std::vector<Vec3> vertices,
                                       std::vector<Facet> facets) {
  const int nv = static_cast<int>(vertices.size());
  for (int i = 0; i < nv; ++i) {
    if (!is_finite(vertices[i])) {
      fail(ErrorCode::NonFinite, "vertex " + std::to_string(i) + " is not finite");
    }
  }
  if (facets.size() < 4) {
    fail(ErrorCode::NotClosed, "a closed surface needs at least 4 facets, got " +
                                   std::to_string(facets.size()));
  }

  const double diag = bounding_box_diagonal(vertices);
  const double planar_tol = kDegeneracyTol * std::max(1.0, diag);

  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    const auto& idx = facets[fi].indices;
    const std::string where = "facet " + std::to_string(fi);
    if (idx.size() < 3) {
      fail(ErrorCode::InvalidFacet, where + " has fewer than 3 vertices");
    }
    std::unordered_set<int> seen;
    for (int v : idx) {
      if (v < 0 || v >= nv) {
        fail(ErrorCode::InvalidFacet,
             where + " references vertex " + std::to_string(v) + " out of range");
      }
      if (!seen.insert(v).second) {
        fail(ErrorCode::InvalidFacet,
             where + " repeats vertex " + std::to_string(v));
      }
    }
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const Vec3 a = vertices[idx[i]];
      const Vec3 b = vertices[idx[(i + 1) % idx.size()]];
      if (norm(b - a) <= kDegeneracyTol) {
        fail(ErrorCode::InvalidFacet, where + " has a degenerate edge");
      }
    }
  }

  // Directed edges: each once, and each with its reverse. That makes every
  // undirected edge border exactly two facets with opposite orientation.
  std::unordered_map<std::uint64_t, int> directed;
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    const auto& idx = facets[fi].indices;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const int a = idx[i];
      const int b = idx[(i + 1) % idx.size()];
      auto [it, inserted] = directed.emplace(detail::edge_key(a, b), static_cast<int>(fi));
      if (!inserted) {
        fail(ErrorCode::NonManifoldEdge,
             "directed edge " + std::to_string(a) + "->" + std::to_string(b) +
                 " appears in facets " + std::to_string(it->second) + " and " +
                 std::to_string(fi));
      }
    }
  }
  for (const auto& [key, fi] : directed) {
    const int a = static_cast<int>(key >> 32);
    const int b = static_cast<int>(key & 0xffffffffu);
    if (directed.find(detail::edge_key(b, a)) == directed.end()) {
      fail(ErrorCode::NotClosed, "edge " + std::to_string(a) + "->" +
                                     std::to_string(b) + " of facet " +
                                     std::to_string(fi) + " has no partner");
    }
  }

  std::unordered_set<int> referenced;
  for (const Facet& f : facets) {
    referenced.insert(f.indices.begin(), f.indices.end());
  }
  const long long euler = static_cast<long long>(referenced.size()) -
                          static_cast<long long>(directed.size() / 2) +
                          static_cast<long long>(facets.size());
  if (euler != 2) {
    fail(ErrorCode::EulerMismatch,
         "V - E + F = " + std::to_string(euler) + ", expected 2");
  }

  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    const auto& idx = facets[fi].indices;
    const std::string where = "facet " + std::to_string(fi);
    Vec3 n = detail::newell(vertices, facets[fi]);
    const double nlen = norm(n);
    if (nlen <= 1e-12 * std::max(1.0, diag * diag)) {
      fail(ErrorCode::InvalidFacet, where + " has zero area");
    }
    n = n / nlen;

    Vec3 centroid{};
    for (int v : idx) centroid = centroid + vertices[v];
    centroid = centroid / static_cast<double>(idx.size());
    for (int v : idx) {
      if (std::abs(dot(n, vertices[v] - centroid)) > planar_tol) {
        fail(ErrorCode::NonPlanarFacet,
             where + ": vertex " + std::to_string(v) + " is off the facet plane");
      }
    }

    // In-plane convexity, with the Newell normal as the up direction: every
    // turn is a left turn or straight, and the loop winds exactly once.
    Vec3 u = vertices[idx[1]] - vertices[idx[0]];
    u = u / norm(u);
    const Vec3 w = cross(n, u);
    std::vector<Vec2> flat(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const Vec3 d = vertices[idx[i]] - centroid;
      flat[i] = {dot(d, u), dot(d, w)};
    }
    double total_turn = 0.0;
    for (std::size_t i = 0; i < flat.size(); ++i) {
      const Vec2 e0 = flat[(i + 1) % flat.size()] - flat[i];
      const Vec2 e1 = flat[(i + 2) % flat.size()] - flat[(i + 1) % flat.size()];
      const double c = cross(e0, e1);
      const double tol = kDegeneracyTol * std::max(norm(e0), norm(e1));
      if (std::abs(c) <= tol && dot(e0, e1) < 0.0) {
        fail(ErrorCode::NonConvexFacet, where + " folds back on itself");
      }
      if (c < -tol) {
        fail(ErrorCode::NonConvexFacet, where + " has a reflex vertex");
      }
      total_turn += std::atan2(c, dot(e0, e1));
    }
    if (std::abs(total_turn - 2.0 * std::acos(-1.0)) > 1e-6) {
      fail(ErrorCode::NonConvexFacet, where + " winds more than once");
    }
  }

  const double vol = detail::signed_volume(vertices, facets);
  if (std::abs(vol) <= 1e-9 * std::max(1.0, diag * diag * diag)) {
    fail(ErrorCode::NotClosed, "facets enclose zero volume");
  }
  if (vol < 0.0) {
    for (Facet& f : facets) std::reverse(f.indices.begin(), f.indices.end());
  }

  return Polyhedron3::from_validated(std::move(vertices), std::move(facets));
}

// Divergence-theorem volume over facet fans. Positive: orientation is
// normalized at validation.
inline double volume(const Polyhedron3& p) {
  return detail::signed_volume(p.vertices(), p.facets());
}

inline double surface_area(const Polyhedron3& p) {
  double acc = 0.0;
  for (const Facet& f : p.facets()) {
    acc += 0.5 * norm(detail::newell(p.vertices(), f));
  }
  return acc;
}

// Every vertex on or inside every facet plane.
inline bool is_convex(const Polyhedron3& p) {
  const double slack =
      kDegeneracyTol * std::max(1.0, bounding_box_diagonal(p.vertices()));
  for (std::size_t f = 0; f < p.facets().size(); ++f) {
    const Plane3 plane = facet_plane(p, static_cast<int>(f));
    for (const Vec3& v : p.vertices()) {
      if (dot(plane.normal, v) - plane.offset > slack) return false;
    }
  }
  return true;
}

inline Polyhedron3 scale_polyhedron(const Polyhedron3& p, double c) {
  if (!(c > 0.0)) {
    fail(ErrorCode::NonPositiveScale, "scale factor must be positive, got " +
                                          std::to_string(c));
  }
  std::vector<Vec3> v = p.vertices();
  for (auto& x : v) x = x * c;
  // Scaling by c > 0 preserves every validity invariant, so no re-check.
  return Polyhedron3::from_validated(std::move(v), p.facets());
}

inline Polyhedron3 translate_polyhedron(const Polyhedron3& p, Vec3 offset) {
  std::vector<Vec3> v = p.vertices();
  for (auto& x : v) x = x + offset;
  return Polyhedron3::from_validated(std::move(v), p.facets());
}

inline Metrics3 polyhedron_metrics(const Polyhedron3& p) {
  return {volume(p), surface_area(p)};
}

}  // namespace inball
