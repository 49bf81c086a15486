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

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "inball/inball.hpp"

namespace {

std::string join(const std::vector<double>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += inball::fmt12(v[i]);
  }
  return out + ")";
}

std::string join(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

void print_erosion(const inball::ErosionTable& table) {
  std::cout << "erosion quotients (epsilon, inner area, quotient):\n";
  for (const inball::ErosionRow& row : table.rows) {
    std::cout << "  " << inball::fmt12(row.epsilon) << "  "
              << inball::fmt12(row.inner_area) << "  "
              << inball::fmt12(row.quotient) << "\n";
  }
  std::cout << "extrapolated limit = " << inball::fmt12(table.extrapolated_limit)
            << "\n";
  std::cout << "exact perimeter = " << inball::fmt12(table.exact_perimeter) << "\n";
  std::cout << "relative error = " << inball::fmt12(table.relative_error) << "\n";
}

void print_report(const inball::AnalysisReport& r) {
  std::cout << "input: " << (r.source.empty() ? "<memory>" : r.source) << " ("
            << (r.dimension == 2 ? "polygon, " : "mesh, ") << r.vertex_count
            << " vertices";
  if (r.dimension == 3) std::cout << ", " << r.facet_count << " facets";
  std::cout << ")\n";
  std::cout << (r.dimension == 2 ? "area = " : "volume = ")
            << inball::fmt12(r.measure) << "\n";
  std::cout << (r.dimension == 2 ? "perimeter = " : "surface area = ")
            << inball::fmt12(r.boundary) << "\n";
  if (r.ball) {
    std::cout << "inscribed radius = " << inball::fmt12(r.ball->radius) << "\n";
    std::cout << "center = " << join(r.ball->center) << "\n";
    if (!r.ball->center_unique) {
      std::cout << "center not unique; classification uses face midpoint "
                << join(r.ball->face_center) << "\n";
    }
    std::cout << "active constraints = " << join(r.ball->active) << "\n";
  }
  if (r.tangency) {
    std::cout << "tangency:";
    for (inball::Contact c : r.tangency->status) {
      std::cout << " " << inball::to_string(c, r.dimension);
    }
    std::cout << "\n";
    std::cout << "is_tangential = "
              << (r.tangency->is_tangential ? "true" : "false") << "\n";
    std::cout << "min_gap = " << inball::fmt12(r.tangency->min_gap) << "\n";
  }
  if (r.derivative) {
    const inball::DerivativeReport& d = *r.derivative;
    std::cout << (r.dimension == 2 ? "dA/dr" : "dV/dr") << " check at r = "
              << inball::fmt12(d.r) << ":\n";
    std::cout << "  boundary measure = " << inball::fmt12(d.boundary_measure)
              << "\n";
    std::cout << "  fd estimate = " << inball::fmt12(d.fd_estimate) << "\n";
    std::cout << "  residual = " << inball::fmt12(d.residual) << "\n";
    std::cout << "  ratio identity residual = "
              << inball::fmt12(d.ratio_identity_residual) << "\n";
    std::cout << "  squeeze_ok = " << (d.squeeze_ok ? "true" : "false") << "\n";
  }
  if (r.erosion) print_erosion(*r.erosion);
  if (r.verdict == inball::Verdict::NotConvexSkipped) {
    std::cout << "warning: shape is not convex; inscribed-ball analysis "
                 "skipped\n";
  } else if (r.verdict == inball::Verdict::NonTangentialSkipped) {
    std::cout << "warning: inscribed ball misses some facet and there is no "
                 "3d erosion fallback; derivative check skipped\n";
  }
  std::cout << "verdict: " << inball::to_string(r.verdict) << "\n";
  std::cout << (r.success ? "check passed" : "CHECK FAILED") << "\n";
}

void maybe_write_json(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  inball::save_text_file(path, j.dump(2) + "\n");
  std::cout << "wrote " << path << "\n";
}

struct AnalyzeFlags {
  double h_step = 1e-3;
  double eps0 = 0.0;
  int levels = 4;
  double tol = 1e-6;
  std::string json_path;
  std::string csv_path;
};

void add_common_flags(CLI::App* cmd, AnalyzeFlags* flags, bool with_erosion) {
  cmd->add_option("--h-step", flags->h_step,
                  "finite-difference step as a fraction of the inscribed "
                  "radius (default 1e-3)");
  if (with_erosion) {
    cmd->add_option("--eps0", flags->eps0,
                    "coarsest erosion offset; default: radius / 8");
    cmd->add_option("--levels", flags->levels,
                    "number of halved erosion offsets (default 4)");
  }
  cmd->add_option("--tol", flags->tol,
                  "relative residual accepted as passing (default 1e-6)");
  cmd->add_option("--json", flags->json_path, "write the full report as JSON");
  if (with_erosion) {
    cmd->add_option("--csv", flags->csv_path,
                    "write the erosion quotient table as CSV");
  }
}

int run_analyze2d(const std::string& path, const AnalyzeFlags& flags) {
  const inball::Polygon2 polygon = inball::load_polygon_file(path);
  inball::AnalyzeOptions opts{flags.h_step, flags.eps0, flags.levels, flags.tol};
  const inball::AnalysisReport report =
      inball::analyze_polygon(polygon, opts, path);
  print_report(report);
  maybe_write_json(flags.json_path, inball::report_to_json(report));
  if (!flags.csv_path.empty()) {
    if (!report.erosion) {
      inball::fail(inball::ErrorCode::InvalidArgument,
                   "--csv needs the erosion fallback, but the verdict is " +
                       std::string(inball::to_string(report.verdict)));
    }
    inball::save_text_file(flags.csv_path, inball::erosion_csv(*report.erosion));
    std::cout << "wrote " << flags.csv_path << "\n";
  }
  return report.success ? 0 : 2;
}

int run_analyze3d(const std::string& path, const AnalyzeFlags& flags) {
  const inball::Polyhedron3 mesh = inball::load_mesh_file(path);
  inball::AnalyzeOptions opts{flags.h_step, flags.eps0, flags.levels, flags.tol};
  const inball::AnalysisReport report =
      inball::analyze_polyhedron(mesh, opts, path);
  print_report(report);
  maybe_write_json(flags.json_path, inball::report_to_json(report));
  return report.success ? 0 : 2;
}

int run_erode(const std::string& path, const AnalyzeFlags& flags) {
  const inball::Polygon2 polygon = inball::load_polygon_file(path);
  const inball::InscribedBall2 ball = inball::incircle(polygon);
  const double eps0 = flags.eps0 > 0.0 ? flags.eps0 : ball.radius / 8.0;
  const inball::ErosionTable table =
      inball::erosion_derivative(polygon, eps0, flags.levels);
  std::cout << "input: " << path << " (polygon, " << polygon.size()
            << " vertices)\n";
  std::cout << "area = " << inball::fmt12(inball::signed_area(polygon)) << "\n";
  std::cout << "inscribed radius = " << inball::fmt12(ball.radius) << "\n";
  print_erosion(table);
  if (!flags.json_path.empty()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const inball::ErosionRow& row : table.rows) {
      rows.push_back({{"epsilon", row.epsilon},
                      {"inner_area", row.inner_area},
                      {"quotient", row.quotient}});
    }
    maybe_write_json(flags.json_path,
                     {{"input", {{"source", path}, {"dimension", 2}}},
                      {"erosion",
                       {{"rows", std::move(rows)},
                        {"extrapolated_limit", table.extrapolated_limit},
                        {"exact_perimeter", table.exact_perimeter},
                        {"relative_error", table.relative_error}}}});
  }
  if (!flags.csv_path.empty()) {
    inball::save_text_file(flags.csv_path, inball::erosion_csv(table));
    std::cout << "wrote " << flags.csv_path << "\n";
  }
  return table.relative_error <= flags.tol ? 0 : 2;
}

int run_ngon_table(int n_min, int n_max, double r, double h_step,
                   const std::string& json_path, const std::string& csv_path) {
  const inball::NGonTable table = inball::ngon_table(n_min, n_max, r, h_step);
  std::cout << "regular n-gon sweep at inscribed radius r = " << inball::fmt12(r)
            << "\n";
  std::cout << inball::ngon_table_csv(table);
  std::cout << "circle limit: area = " << inball::fmt12(inball::circle_area(r))
            << ", circumference = "
            << inball::fmt12(inball::circle_circumference(r)) << "\n";
  maybe_write_json(json_path, inball::ngon_table_to_json(table));
  if (!csv_path.empty()) {
    inball::save_text_file(csv_path, inball::ngon_table_csv(table));
    std::cout << "wrote " << csv_path << "\n";
  }
  return 0;
}

int run_generate(const std::string& kind, const std::string& out_path, int n,
                 double r, const std::string& format) {
  if (format != "obj" && format != "json") {
    inball::fail(inball::ErrorCode::InvalidArgument,
                 "--format must be obj or json, got '" + format + "'");
  }
  std::ostringstream content;
  if (kind == "ngon") {
    inball::write_polygon_json(content, inball::regular_ngon(n, r));
  } else {
    const inball::SolidKind solid = inball::solid_kind_from_name(kind);
    const inball::Polyhedron3 mesh = inball::named_solid(solid, r);
    if (format == "obj") {
      inball::write_obj(content, mesh);
    } else {
      inball::write_mesh_json(content, mesh);
    }
  }
  inball::save_text_file(out_path, content.str());
  std::cout << "wrote " << out_path << " (" << kind << ", r = "
            << inball::fmt12(r) << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "inball: inscribed-ball analysis of convex polygons and polyhedra.\n"
      "Verifies that d(area)/d(radius) = perimeter (2D) and\n"
      "d(volume)/d(radius) = surface area (3D) for shapes tangent to their\n"
      "largest inscribed ball, with an erosion-limit fallback for convex\n"
      "non-tangential polygons.\n\n"
      "Coordinates are expected at O(1)..O(1e3) scale; degeneracy checks\n"
      "use an absolute 1e-9 tolerance. Exit codes: 0 success, 1 input\n"
      "error, 2 verification failure."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "inball 1.0.0");

  std::string path2d, path3d, erode_path;
  AnalyzeFlags flags2d, flags3d, flags_erode;

  CLI::App* analyze2d = app.add_subcommand(
      "analyze2d",
      "analyze a polygon JSON file ({\"vertices\": [[x, y], ...]})");
  analyze2d->add_option("file", path2d, "polygon JSON file")->required();
  add_common_flags(analyze2d, &flags2d, /*with_erosion=*/true);

  CLI::App* analyze3d = app.add_subcommand(
      "analyze3d",
      "analyze a mesh file, OBJ subset (v/f lines, plain 1-based indices) "
      "or JSON ({\"vertices\": [[x, y, z], ...], \"facets\": [[i, ...], ...]}, "
      "0-based)");
  analyze3d->add_option("file", path3d, "mesh file (.obj or .json)")->required();
  add_common_flags(analyze3d, &flags3d, /*with_erosion=*/false);

  CLI::App* erode = app.add_subcommand(
      "erode", "inner-parallel-body quotient table for a convex polygon");
  erode->add_option("file", erode_path, "polygon JSON file")->required();
  add_common_flags(erode, &flags_erode, /*with_erosion=*/true);

  int ngon_min = 3, ngon_max = 64;
  double ngon_r = 1.0, ngon_h = 1e-3;
  std::string ngon_json, ngon_csv;
  CLI::App* ngon = app.add_subcommand(
      "ngon-table",
      "closed-form vs finite-difference sweep over regular n-gons");
  ngon->add_option("n_min", ngon_min, "smallest n (>= 3)")->required();
  ngon->add_option("n_max", ngon_max, "largest n")->required();
  ngon->add_option("--r", ngon_r, "inscribed radius (default 1)");
  ngon->add_option("--h-step", ngon_h,
                   "finite-difference step as a fraction of r (default 1e-3)");
  ngon->add_option("--json", ngon_json, "write the table as JSON");
  ngon->add_option("--csv", ngon_csv, "write the table as CSV");

  std::string gen_kind, gen_out, gen_format = "obj";
  int gen_n = 6;
  double gen_r = 1.0;
  CLI::App* generate = app.add_subcommand(
      "generate", "write a reference shape: ngon, cube, or tetra");
  generate->add_option("kind", gen_kind, "ngon | cube | tetra")->required();
  generate->add_option("out", gen_out, "output file path")->required();
  generate->add_option("--n", gen_n, "vertex count for ngon (default 6)");
  generate->add_option("--r", gen_r, "inscribed radius (default 1)");
  generate->add_option("--format", gen_format,
                       "mesh container for cube/tetra: obj | json (default obj)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze2d) return run_analyze2d(path2d, flags2d);
    if (*analyze3d) return run_analyze3d(path3d, flags3d);
    if (*erode) return run_erode(erode_path, flags_erode);
    if (*ngon) {
      return run_ngon_table(ngon_min, ngon_max, ngon_r, ngon_h, ngon_json,
                            ngon_csv);
    }
    if (*generate) return run_generate(gen_kind, gen_out, gen_n, gen_r, gen_format);
  } catch (const inball::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return inball::is_input_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
