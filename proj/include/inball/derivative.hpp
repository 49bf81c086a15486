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
#include <string>
#include <vector>

#include "inball/error.hpp"
#include "inball/geometry2d.hpp"
#include "inball/geometry3d.hpp"
#include "inball/inscribe.hpp"
#include "inball/vec.hpp"

namespace inball {

// Distance between the boundary line of `line` and its image under
// scaling by c about the origin. Scaling a line not through the origin by
// c > 0 yields a parallel line at |1 - c| times the original distance.
inline double scaled_line_distance(const HalfPlane2& line, double c) {
  if (!(c > 0.0)) {
    fail(ErrorCode::InvalidArgument,
         "scale factor must be positive, got " + std::to_string(c));
  }
  const double len = norm(line.normal);
  if (len <= kDegeneracyTol) {
    fail(ErrorCode::InvalidArgument, "line normal is zero");
  }
  const double d0 = std::abs(line.offset) / len;
  if (d0 <= 1e-12) {
    fail(ErrorCode::LineThroughOrigin,
         "line passes through the origin; scaled copies are not parallel "
         "at a positive distance");
  }
  return std::abs(1.0 - c) * d0;
}

inline double scaled_plane_distance(const HalfSpace3& plane, double c) {
  if (!(c > 0.0)) {
    fail(ErrorCode::InvalidArgument,
         "scale factor must be positive, got " + std::to_string(c));
  }
  const double len = norm(plane.normal);
  if (len <= kDegeneracyTol) {
    fail(ErrorCode::InvalidArgument, "plane normal is zero");
  }
  const double d0 = std::abs(plane.offset) / len;
  if (d0 <= 1e-12) {
    fail(ErrorCode::LineThroughOrigin,
         "plane passes through the origin; scaled copies are not parallel "
         "at a positive distance");
  }
  return std::abs(1.0 - c) * d0;
}

// One-parameter family of scaled copies of a tangential shape, indexed by
// inscribed radius. member(rho) is centered at the origin with inscribed
// ball of radius exactly rho; every boundary element stays tangent for
// every rho because scaling about the ball center moves each support line
// of the shape parallel to itself (the scaled-line lemma above).
class ScalingFamily2 {
 public:
  const Polygon2& normalized() const { return normalized_; }
  double base_radius() const { return base_radius_; }
  Polygon2 member(double rho) const { return scale_polygon(normalized_, rho); }

 private:
  friend ScalingFamily2 make_family(const Polygon2&, const InscribedBall2&);
  ScalingFamily2(Polygon2 normalized, double base_radius)
      : normalized_(std::move(normalized)), base_radius_(base_radius) {}
  Polygon2 normalized_;
  double base_radius_;
};

class ScalingFamily3 {
 public:
  const Polyhedron3& normalized() const { return normalized_; }
  double base_radius() const { return base_radius_; }
  Polyhedron3 member(double rho) const { return scale_polyhedron(normalized_, rho); }

 private:
  friend ScalingFamily3 make_family(const Polyhedron3&, const InscribedBall3&);
  ScalingFamily3(Polyhedron3 normalized, double base_radius)
      : normalized_(std::move(normalized)), base_radius_(base_radius) {}
  Polyhedron3 normalized_;
  double base_radius_;
};

// Requires the ball to touch every edge run; the family construction is
// meaningless otherwise. The ball center is unique for tangential shapes,
// so centering on it is well defined.
inline ScalingFamily2 make_family(const Polygon2& p, const InscribedBall2& ball) {
  const TangencyReport report = tangency_report(p, ball);
  if (!report.is_tangential) {
    fail(ErrorCode::NotTangential,
         "shape is not tangent to its inscribed ball on every edge");
  }
  const Polygon2 centered = translate_polygon(p, -ball.center);
  return ScalingFamily2(scale_polygon(centered, 1.0 / ball.radius), ball.radius);
}

inline ScalingFamily3 make_family(const Polyhedron3& p, const InscribedBall3& ball) {
  const TangencyReport report = tangency_report(p, ball);
  if (!report.is_tangential) {
    fail(ErrorCode::NotTangential,
         "shape is not tangent to its inscribed ball on every facet");
  }
  const Polyhedron3 centered = translate_polyhedron(p, -ball.center);
  return ScalingFamily3(scale_polyhedron(centered, 1.0 / ball.radius), ball.radius);
}

// One evaluation of the squeeze bounds at sample radius s < r:
//   boundary(s) * (r - s)  <  measure(r) - measure(s)  <  boundary(r) * (r - s).
struct SqueezeSample {
  double s = 0.0;
  double lower = 0.0;
  double middle = 0.0;
  double upper = 0.0;
  bool strict = false;
};

struct DerivativeReport {
  double r = 0.0;
  double measure = 0.0;
  double boundary_measure = 0.0;
  double fd_estimate = 0.0;
  // |fd_estimate - boundary_measure| / boundary_measure
  double residual = 0.0;
  // |measure - r * boundary_measure / dim| / measure
  double ratio_identity_residual = 0.0;
  bool squeeze_ok = false;
  std::vector<SqueezeSample> samples;
};

// Sample radii spread across (0, r); the last one sits close to r so the
// difference quotient is exercised near its limit.
inline std::vector<double> default_squeeze_samples(double r) {
  return {0.1 * r, 0.25 * r, 0.5 * r, 0.75 * r, 0.9 * r, (1.0 - 1e-6) * r};
}

namespace detail {

template <class MeasureFn, class BoundaryFn>
std::vector<SqueezeSample> squeeze_core(double at_r,
                                        const std::vector<double>& samples,
                                        MeasureFn measure, BoundaryFn boundary) {
  const double m_r = measure(at_r);
  const double b_r = boundary(at_r);
  std::vector<SqueezeSample> out;
  out.reserve(samples.size());
  for (double s : samples) {
    if (!(s > 0.0) || !(s < at_r)) {
      fail(ErrorCode::SampleOutOfRange,
           "squeeze sample " + std::to_string(s) + " outside (0, " +
               std::to_string(at_r) + ")");
    }
    SqueezeSample sample;
    sample.s = s;
    sample.lower = boundary(s) * (at_r - s);
    sample.middle = m_r - measure(s);
    sample.upper = b_r * (at_r - s);
    const double margin = 1e-12 * sample.upper;
    sample.strict = (sample.middle - sample.lower > margin) &&
                    (sample.upper - sample.middle > margin);
    out.push_back(sample);
  }
  return out;
}

// Symmetric 4-point stencil, exact through cubic polynomials. Volume of a
// scaling family is exactly cubic in the radius, so the only residual left
// is floating-point rounding.
template <class Fn>
double fd4(Fn f, double r, double h) {
  return (f(r - 2.0 * h) - 8.0 * f(r - h) + 8.0 * f(r + h) - f(r + 2.0 * h)) /
         (12.0 * h);
}

template <class MeasureFn, class BoundaryFn>
DerivativeReport verify_core(double at_r, double h, int dim, MeasureFn measure,
                             BoundaryFn boundary) {
  if (!(at_r > 0.0)) {
    fail(ErrorCode::InvalidArgument,
         "evaluation radius must be positive, got " + std::to_string(at_r));
  }
  if (!(h > 0.0) || !(2.0 * h < at_r)) {
    fail(ErrorCode::StepTooLarge, "need 0 < 2h < r, got h = " +
                                      std::to_string(h) + " at r = " +
                                      std::to_string(at_r));
  }
  DerivativeReport report;
  report.r = at_r;
  report.measure = measure(at_r);
  report.boundary_measure = boundary(at_r);
  report.fd_estimate = fd4(measure, at_r, h);
  report.residual =
      std::abs(report.fd_estimate - report.boundary_measure) / report.boundary_measure;
  report.ratio_identity_residual =
      std::abs(report.measure - at_r * report.boundary_measure / dim) / report.measure;
  report.samples =
      squeeze_core(at_r, default_squeeze_samples(at_r), measure, boundary);
  report.squeeze_ok = true;
  for (const SqueezeSample& s : report.samples) {
    report.squeeze_ok = report.squeeze_ok && s.strict;
  }
  return report;
}

}  // namespace detail

inline std::vector<SqueezeSample> squeeze_check(const ScalingFamily2& family,
                                                double at_r,
                                                const std::vector<double>& samples) {
  return detail::squeeze_core(
      at_r, samples,
      [&](double rho) { return signed_area(family.member(rho)); },
      [&](double rho) { return perimeter(family.member(rho)); });
}

inline std::vector<SqueezeSample> squeeze_check(const ScalingFamily3& family,
                                                double at_r,
                                                const std::vector<double>& samples) {
  return detail::squeeze_core(
      at_r, samples,
      [&](double rho) { return volume(family.member(rho)); },
      [&](double rho) { return surface_area(family.member(rho)); });
}

// Checks dA/dr = L for the family at radius at_r: finite-difference
// derivative of the area, the ratio identity A = r L / 2, and strict
// squeeze bounds at the default samples.
inline DerivativeReport verify_theorem(const ScalingFamily2& family, double at_r,
                                       double h) {
  return detail::verify_core(
      at_r, h, 2,
      [&](double rho) { return signed_area(family.member(rho)); },
      [&](double rho) { return perimeter(family.member(rho)); });
}

// Checks dV/dr = sigma and V = r sigma / 3.
inline DerivativeReport verify_theorem(const ScalingFamily3& family, double at_r,
                                       double h) {
  return detail::verify_core(
      at_r, h, 3,
      [&](double rho) { return volume(family.member(rho)); },
      [&](double rho) { return surface_area(family.member(rho)); });
}

}  // namespace inball
