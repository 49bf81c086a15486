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

#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "inball/closedform.hpp"
#include "inball/derivative.hpp"
#include "inball/erosion.hpp"
#include "inball/error.hpp"
#include "inball/geometry2d.hpp"
#include "inball/geometry3d.hpp"
#include "inball/inscribe.hpp"
#include "inball/vec.hpp"

namespace inball {

// Numbers in human-readable and CSV output carry 12 significant digits.
inline std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

enum class Verdict {
  TangentialTheoremHolds,
  NonTangentialErosionUsed,
  NonTangentialSkipped,
  NotConvexSkipped,
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::TangentialTheoremHolds:   return "TangentialTheoremHolds";
    case Verdict::NonTangentialErosionUsed: return "NonTangentialErosionUsed";
    case Verdict::NonTangentialSkipped:     return "NonTangentialSkipped";
    case Verdict::NotConvexSkipped:         return "NotConvexSkipped";
  }
  return "Unknown";
}

struct AnalyzeOptions {
  // Finite-difference step as a fraction of the inscribed radius.
  double h_step = 1e-3;
  // Coarsest erosion offset; 0 means radius / 8.
  double eps0 = 0.0;
  int levels = 4;
  // Acceptance threshold on the verdict's residual.
  double tol = 1e-6;
};

// Dimension-agnostic inscribed-ball summary for reports.
struct BallSummary {
  std::vector<double> center;
  std::vector<double> face_center;
  double radius = 0.0;
  std::vector<int> active;
  bool center_unique = true;
};

struct AnalysisReport {
  int dimension = 2;
  std::string source;
  int vertex_count = 0;
  int facet_count = -1;  // -1 for polygons
  double measure = 0.0;  // area or volume
  double boundary = 0.0; // perimeter or surface area
  std::optional<BallSummary> ball;
  std::optional<TangencyReport> tangency;
  std::optional<DerivativeReport> derivative;
  std::optional<ErosionTable> erosion;
  Verdict verdict = Verdict::NotConvexSkipped;
  bool success = true;
};

// Full polygon pipeline: metrics always; incircle and tangency for convex
// input; then either the derivative check (tangential) or the erosion
// fallback (non-tangential). Skipped stages stay empty and the verdict
// says why.
inline AnalysisReport analyze_polygon(const Polygon2& p, const AnalyzeOptions& opts,
                                      const std::string& source = "") {
  AnalysisReport report;
  report.dimension = 2;
  report.source = source;
  report.vertex_count = p.size();
  const Metrics2 m = polygon_metrics(p);
  report.measure = m.area;
  report.boundary = m.perimeter;

  if (!is_convex(p)) {
    report.verdict = Verdict::NotConvexSkipped;
    report.success = true;
    return report;
  }

  const InscribedBall2 ball = incircle(p);
  report.ball = BallSummary{{ball.center.x, ball.center.y},
                            {ball.face_center.x, ball.face_center.y},
                            ball.radius,
                            ball.active,
                            ball.center_unique};
  report.tangency = tangency_report(p, ball);

  if (report.tangency->is_tangential) {
    const ScalingFamily2 family = make_family(p, ball);
    report.derivative =
        verify_theorem(family, ball.radius, opts.h_step * ball.radius);
    report.verdict = Verdict::TangentialTheoremHolds;
    report.success = report.derivative->residual <= opts.tol &&
                     report.derivative->ratio_identity_residual <= opts.tol &&
                     report.derivative->squeeze_ok;
  } else {
    const double eps0 = opts.eps0 > 0.0 ? opts.eps0 : ball.radius / 8.0;
    report.erosion = erosion_derivative(p, eps0, opts.levels);
    report.verdict = Verdict::NonTangentialErosionUsed;
    report.success = report.erosion->relative_error <= opts.tol;
  }
  return report;
}

// Polyhedron pipeline. There is no 3D erosion fallback; a convex solid
// whose insphere misses some facet is reported and skipped.
inline AnalysisReport analyze_polyhedron(const Polyhedron3& p,
                                         const AnalyzeOptions& opts,
                                         const std::string& source = "") {
  AnalysisReport report;
  report.dimension = 3;
  report.source = source;
  report.vertex_count = static_cast<int>(p.vertices().size());
  report.facet_count = static_cast<int>(p.facets().size());
  const Metrics3 m = polyhedron_metrics(p);
  report.measure = m.volume;
  report.boundary = m.surface_area;

  if (!is_convex(p)) {
    report.verdict = Verdict::NotConvexSkipped;
    report.success = true;
    return report;
  }

  const InscribedBall3 ball = insphere(p);
  report.ball = BallSummary{{ball.center.x, ball.center.y, ball.center.z},
                            {ball.face_center.x, ball.face_center.y, ball.face_center.z},
                            ball.radius,
                            ball.active,
                            ball.center_unique};
  report.tangency = tangency_report(p, ball);

  if (report.tangency->is_tangential) {
    const ScalingFamily3 family = make_family(p, ball);
    report.derivative =
        verify_theorem(family, ball.radius, opts.h_step * ball.radius);
    report.verdict = Verdict::TangentialTheoremHolds;
    report.success = report.derivative->residual <= opts.tol &&
                     report.derivative->ratio_identity_residual <= opts.tol &&
                     report.derivative->squeeze_ok;
  } else {
    report.verdict = Verdict::NonTangentialSkipped;
    report.success = true;
  }
  return report;
}

inline nlohmann::json report_to_json(const AnalysisReport& r) {
  nlohmann::json input{{"source", r.source},
                       {"dimension", r.dimension},
                       {"vertex_count", r.vertex_count}};
  if (r.dimension == 3) input["facet_count"] = r.facet_count;

  nlohmann::json metrics;
  if (r.dimension == 2) {
    metrics = {{"area", r.measure}, {"perimeter", r.boundary}};
  } else {
    metrics = {{"volume", r.measure}, {"surface_area", r.boundary}};
  }

  nlohmann::json ball;
  if (r.ball) {
    ball = {{"center", r.ball->center},
            {"face_center", r.ball->face_center},
            {"radius", r.ball->radius},
            {"active", r.ball->active},
            {"center_unique", r.ball->center_unique}};
  }

  nlohmann::json tangency;
  if (r.tangency) {
    nlohmann::json status = nlohmann::json::array();
    for (Contact c : r.tangency->status) {
      status.push_back(to_string(c, r.dimension));
    }
    tangency = {{"status", std::move(status)},
                {"is_tangential", r.tangency->is_tangential},
                {"min_gap", r.tangency->min_gap}};
  }

  nlohmann::json derivative;
  if (r.derivative) {
    nlohmann::json samples = nlohmann::json::array();
    for (const SqueezeSample& s : r.derivative->samples) {
      samples.push_back({s.s, s.lower, s.middle, s.upper});
    }
    derivative = {{"r", r.derivative->r},
                  {"measure", r.derivative->measure},
                  {"boundary_measure", r.derivative->boundary_measure},
                  {"fd_estimate", r.derivative->fd_estimate},
                  {"residual", r.derivative->residual},
                  {"ratio_identity_residual", r.derivative->ratio_identity_residual},
                  {"squeeze_ok", r.derivative->squeeze_ok},
                  {"samples", std::move(samples)}};
  }

  nlohmann::json erosion;
  if (r.erosion) {
    nlohmann::json rows = nlohmann::json::array();
    for (const ErosionRow& row : r.erosion->rows) {
      rows.push_back({{"epsilon", row.epsilon},
                      {"inner_area", row.inner_area},
                      {"quotient", row.quotient}});
    }
    erosion = {{"rows", std::move(rows)},
               {"extrapolated_limit", r.erosion->extrapolated_limit},
               {"exact_perimeter", r.erosion->exact_perimeter},
               {"relative_error", r.erosion->relative_error}};
  }

  return {{"input", std::move(input)},
          {"metrics", std::move(metrics)},
          {"ball", std::move(ball)},
          {"tangency", std::move(tangency)},
          {"derivative", std::move(derivative)},
          {"erosion", std::move(erosion)},
          {"verdict", to_string(r.verdict)}};
}

inline std::string erosion_csv(const ErosionTable& table) {
  std::string out = "epsilon,inner_area,quotient\n";
  for (const ErosionRow& row : table.rows) {
    out += fmt12(row.epsilon) + "," + fmt12(row.inner_area) + "," +
           fmt12(row.quotient) + "\n";
  }
  return out;
}

// Closed-form and finite-difference sweep over regular n-gons at fixed
// inscribed radius; the circle columns show the approach to pi r^2 and
// 2 pi r from above.
struct NGonRow {
  int n = 0;
  double area = 0.0;
  double perimeter = 0.0;
  double fd_estimate = 0.0;
  double residual = 0.0;
  double area_over_circle = 0.0;
  double perimeter_over_circle = 0.0;
};

struct NGonTable {
  double r = 0.0;
  std::vector<NGonRow> rows;
};

inline NGonTable ngon_table(int n_min, int n_max, double r, double h_step) {
  if (n_min < 3 || n_max < n_min) {
    fail(ErrorCode::BadRange, "need 3 <= n_min <= n_max, got [" +
                                  std::to_string(n_min) + ", " +
                                  std::to_string(n_max) + "]");
  }
  if (!(r > 0.0)) {
    fail(ErrorCode::NonPositiveRadius,
         "inscribed radius must be positive, got " + std::to_string(r));
  }
  if (!(h_step > 0.0) || !(h_step < 0.5)) {
    fail(ErrorCode::InvalidArgument,
         "h_step must lie in (0, 0.5), got " + std::to_string(h_step));
  }
  NGonTable table;
  table.r = r;
  table.rows.reserve(n_max - n_min + 1);
  const double h = h_step * r;
  for (int n = n_min; n <= n_max; ++n) {
    NGonRow row;
    row.n = n;
    // Metrics of the constructed polygon, not the closed forms: the sweep
    // cross-checks construction against formula elsewhere.
    const Polygon2 gon = regular_ngon(n, r);
    row.area = signed_area(gon);
    row.perimeter = perimeter(gon);
    row.fd_estimate = detail::fd4(
        [&](double rho) { return signed_area(regular_ngon(n, rho)); }, r, h);
    row.residual = std::abs(row.fd_estimate - row.perimeter) / row.perimeter;
    row.area_over_circle = row.area / circle_area(r);
    row.perimeter_over_circle = row.perimeter / circle_circumference(r);
    table.rows.push_back(row);
  }
  return table;
}

inline std::string ngon_table_csv(const NGonTable& table) {
  std::string out =
      "n,area,perimeter,fd_estimate,residual,area_over_circle,"
      "perimeter_over_circle\n";
  for (const NGonRow& row : table.rows) {
    out += std::to_string(row.n) + "," + fmt12(row.area) + "," +
           fmt12(row.perimeter) + "," + fmt12(row.fd_estimate) + "," +
           fmt12(row.residual) + "," + fmt12(row.area_over_circle) + "," +
           fmt12(row.perimeter_over_circle) + "\n";
  }
  return out;
}

inline nlohmann::json ngon_table_to_json(const NGonTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const NGonRow& row : table.rows) {
    rows.push_back({{"n", row.n},
                    {"area", row.area},
                    {"perimeter", row.perimeter},
                    {"fd_estimate", row.fd_estimate},
                    {"residual", row.residual},
                    {"area_over_circle", row.area_over_circle},
                    {"perimeter_over_circle", row.perimeter_over_circle}});
  }
  return {{"r", table.r},
          {"rows", std::move(rows)},
          {"circle",
           {{"area", circle_area(table.r)},
            {"circumference", circle_circumference(table.r)}}}};
}

}  // namespace inball
