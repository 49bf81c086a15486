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

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "inball/error.hpp"
#include "inball/geometry2d.hpp"
#include "inball/geometry3d.hpp"
#include "inball/vec.hpp"

namespace inball {

// File formats:
//
// Polygon JSON   {"vertices": [[x, y], ...]}
// Mesh JSON      {"vertices": [[x, y, z], ...], "facets": [[i, j, k, ...], ...]}
//                with 0-based vertex indices.
// OBJ subset     "v x y z" and "f i j k ..." lines with 1-based positive
//                plain indices (no texture/normal slashes, no relative
//                indices); comments, blank lines, and the non-geometry
//                keywords o/g/s/usemtl/mtllib are ignored.
//
// Readers return raw vertex/facet data; validation is a separate step so
// that callers control which errors are fatal.

struct RawPolygon {
  std::vector<Vec2> vertices;
};

struct RawMesh {
  std::vector<Vec3> vertices;
  std::vector<Facet> facets;
};

namespace detail {

inline nlohmann::json parse_json(std::istream& in, const std::string& what) {
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann's message already carries line and column.
    fail(ErrorCode::ParseError, what + ": " + e.what());
  }
}

inline double json_number(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number()) {
    fail(ErrorCode::ParseError, where + " must be a number, got " +
                                    std::string(j.type_name()));
  }
  return j.get<double>();
}

inline int json_index(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) {
    fail(ErrorCode::ParseError, where + " must be an integer vertex index, got " +
                                    j.dump());
  }
  return j.get<int>();
}

inline const nlohmann::json& json_array_field(const nlohmann::json& j,
                                              const char* field,
                                              const std::string& what) {
  if (!j.is_object() || !j.contains(field)) {
    fail(ErrorCode::ParseError, what + ": missing \"" + field + "\" array");
  }
  const nlohmann::json& arr = j.at(field);
  if (!arr.is_array()) {
    fail(ErrorCode::ParseError,
         what + ": \"" + field + "\" must be an array, got " +
             std::string(arr.type_name()));
  }
  return arr;
}

}  // namespace detail

inline RawPolygon read_polygon_json(std::istream& in) {
  const nlohmann::json j = detail::parse_json(in, "polygon");
  const nlohmann::json& verts = detail::json_array_field(j, "vertices", "polygon");
  RawPolygon out;
  out.vertices.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string where = "polygon vertex " + std::to_string(i);
    if (!verts[i].is_array() || verts[i].size() != 2) {
      fail(ErrorCode::ParseError, where + " must be a pair [x, y]");
    }
    out.vertices.push_back({detail::json_number(verts[i][0], where + " x"),
                            detail::json_number(verts[i][1], where + " y")});
  }
  return out;
}

inline RawMesh read_mesh_json(std::istream& in) {
  const nlohmann::json j = detail::parse_json(in, "mesh");
  const nlohmann::json& verts = detail::json_array_field(j, "vertices", "mesh");
  const nlohmann::json& facets = detail::json_array_field(j, "facets", "mesh");
  RawMesh out;
  out.vertices.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string where = "mesh vertex " + std::to_string(i);
    if (!verts[i].is_array() || verts[i].size() != 3) {
      fail(ErrorCode::ParseError, where + " must be a triple [x, y, z]");
    }
    out.vertices.push_back({detail::json_number(verts[i][0], where + " x"),
                            detail::json_number(verts[i][1], where + " y"),
                            detail::json_number(verts[i][2], where + " z")});
  }
  out.facets.reserve(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string where = "mesh facet " + std::to_string(i);
    if (!facets[i].is_array()) {
      fail(ErrorCode::ParseError, where + " must be an array of vertex indices");
    }
    Facet f;
    f.indices.reserve(facets[i].size());
    for (std::size_t t = 0; t < facets[i].size(); ++t) {
      f.indices.push_back(detail::json_index(
          facets[i][t], where + " entry " + std::to_string(t)));
    }
    out.facets.push_back(std::move(f));
  }
  return out;
}

inline RawMesh read_obj(std::istream& in) {
  RawMesh out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string keyword;
    if (!(ss >> keyword)) continue;  // blank
    const std::string where = "obj line " + std::to_string(lineno);
    if (keyword[0] == '#') continue;
    if (keyword == "o" || keyword == "g" || keyword == "s" ||
        keyword == "usemtl" || keyword == "mtllib") {
      continue;  // non-geometry statements
    }
    if (keyword == "v") {
      double x, y, z;
      if (!(ss >> x >> y >> z)) {
        fail(ErrorCode::ParseError, where + ": vertex needs 3 coordinates");
      }
      std::string extra;
      if (ss >> extra) {
        fail(ErrorCode::ParseError,
             where + ": unexpected token '" + extra + "' after 3 coordinates");
      }
      out.vertices.push_back({x, y, z});
      continue;
    }
    if (keyword == "f") {
      Facet f;
      std::string token;
      while (ss >> token) {
        std::size_t used = 0;
        long idx = 0;
        try {
          idx = std::stol(token, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != token.size() || idx <= 0) {
          fail(ErrorCode::ParseError,
               where + ": face index '" + token +
                   "' is not a plain positive integer (subset format)");
        }
        f.indices.push_back(static_cast<int>(idx - 1));
      }
      if (f.indices.size() < 3) {
        fail(ErrorCode::ParseError, where + ": face needs at least 3 indices");
      }
      out.facets.push_back(std::move(f));
      continue;
    }
    fail(ErrorCode::ParseError, where + ": unsupported keyword '" + keyword + "'");
  }
  return out;
}

inline void write_polygon_json(std::ostream& os, const Polygon2& p) {
  nlohmann::json verts = nlohmann::json::array();
  for (const Vec2& v : p.vertices()) {
    verts.push_back({v.x, v.y});
  }
  os << nlohmann::json{{"vertices", std::move(verts)}}.dump(2) << "\n";
}

inline void write_mesh_json(std::ostream& os, const Polyhedron3& p) {
  nlohmann::json verts = nlohmann::json::array();
  for (const Vec3& v : p.vertices()) {
    verts.push_back({v.x, v.y, v.z});
  }
  nlohmann::json facets = nlohmann::json::array();
  for (const Facet& f : p.facets()) {
    facets.push_back(f.indices);
  }
  os << nlohmann::json{{"vertices", std::move(verts)},
                       {"facets", std::move(facets)}}
            .dump(2)
     << "\n";
}

inline void write_obj(std::ostream& os, const Polyhedron3& p) {
  char buf[96];
  for (const Vec3& v : p.vertices()) {
    std::snprintf(buf, sizeof(buf), "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
    os << buf;
  }
  for (const Facet& f : p.facets()) {
    os << "f";
    for (int idx : f.indices) os << " " << (idx + 1);
    os << "\n";
  }
}

// Mesh container detection: extension wins, otherwise a leading '{' means
// JSON.
inline bool looks_like_json(const std::string& path, const std::string& content) {
  auto ends_with = [&](const char* suffix) {
    const std::string s(suffix);
    return path.size() >= s.size() &&
           path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with(".json")) return true;
  if (ends_with(".obj")) return false;
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    fail(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    fail(ErrorCode::IoError, "read failed on '" + path + "'");
  }
  return std::move(buf).str();
}

}  // namespace detail

// Parse and validate in one step.
inline Polygon2 load_polygon_file(const std::string& path) {
  std::istringstream in(detail::read_file(path));
  return validate_polygon(std::move(read_polygon_json(in).vertices));
}

inline Polyhedron3 load_mesh_file(const std::string& path) {
  const std::string content = detail::read_file(path);
  std::istringstream in(content);
  RawMesh raw = looks_like_json(path, content) ? read_mesh_json(in) : read_obj(in);
  return validate_polyhedron(std::move(raw.vertices), std::move(raw.facets));
}

inline void save_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  }
  out << content;
  if (!out) {
    fail(ErrorCode::IoError, "write failed on '" + path + "'");
  }
}

}  // namespace inball
