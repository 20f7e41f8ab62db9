// Copyright 2026 The zetakit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZETAKIT_IO_HPP
#define ZETAKIT_IO_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zetakit/algebra.hpp"
#include "zetakit/catalog.hpp"
#include "zetakit/covering.hpp"
#include "zetakit/error.hpp"
#include "zetakit/graphs.hpp"

// JSON file formats:
//   group:        {"abelian": [n1, ...]}
//                 {"cayley": [[...]], "irreps": [{"degree": d, "matrices": [[[re,im], ...], ...]}]}
//                 {"catalog": "S3" | "D4" | "Q8"}
//   group weights {"x": [[re,im], ...]}                 element order
//   graph         {"n": int, "edges": [[u,v], ...]}     0-based, loops as [u,u]
//   arc weights   {"w": [[re,im], ...]}                 canonical arc order
//                 {"from_group": path, "x": [...]} or {"from_group": path, "weights": path}
//   voltage       {"arcs": [elem, ...]}                 canonical arc order
// Irrep matrices are listed per element, each flattened row-major.
// A complex number is [re, im] or a bare real.

namespace zetakit::io {

using nlohmann::json;

namespace detail {

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

inline std::size_t index_value(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

inline cx parse_complex(const json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  detail::fail(where, "expected [re, im] or a number");
}

inline std::vector<cx> parse_complex_list(const json& j, const std::string& where) {
  if (!j.is_array()) detail::fail(where, "expected an array");
  std::vector<cx> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_complex(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline json to_json(cx z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const std::vector<cx>& v) {
  json a = json::array();
  for (cx z : v) a.push_back(to_json(z));
  return a;
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

struct LoadedGroup {
  std::string name;
  FiniteGroup group = make_abelian_group({});
  std::optional<std::vector<Irrep>> irreps;
};

inline LoadedGroup parse_group(const json& j, const std::string& where) {
  LoadedGroup out;
  if (!j.is_object()) detail::fail(where, "expected an object");
  if (j.contains("abelian")) {
    const json& a = j.at("abelian");
    if (!a.is_array()) detail::fail(where + ".abelian", "expected an array");
    std::vector<std::size_t> orders;
    for (std::size_t i = 0; i < a.size(); ++i)
      orders.push_back(detail::index_value(a[i], where + ".abelian[" + std::to_string(i) + "]"));
    try {
      out.group = make_abelian_group(orders);
    } catch (const InputError& e) {
      detail::fail(where + ".abelian", e.what());
    }
    out.name = "abelian";
    for (std::size_t n : orders) out.name += "_" + std::to_string(n);
    return out;
  }
  if (j.contains("catalog")) {
    const json& c = j.at("catalog");
    if (!c.is_string()) detail::fail(where + ".catalog", "expected a string");
    try {
      auto g = catalog_group(c.get<std::string>());
      out.name = g.name;
      out.group = std::move(g.group);
      out.irreps = std::move(g.irreps);
    } catch (const InputError& e) {
      detail::fail(where + ".catalog", e.what());
    }
    return out;
  }
  const json& t = detail::field(j, "cayley", where);
  if (!t.is_array()) detail::fail(where + ".cayley", "expected an array of rows");
  std::vector<std::vector<Element>> table;
  for (std::size_t r = 0; r < t.size(); ++r) {
    const std::string rw = where + ".cayley[" + std::to_string(r) + "]";
    if (!t[r].is_array()) detail::fail(rw, "expected an array");
    std::vector<Element> row;
    for (std::size_t c = 0; c < t[r].size(); ++c)
      row.push_back(detail::index_value(t[r][c], rw + "[" + std::to_string(c) + "]"));
    table.push_back(std::move(row));
  }
  try {
    out.group = FiniteGroup::from_cayley(std::move(table));
  } catch (const InputError& e) {
    detail::fail(where + ".cayley", e.what());
  }
  out.name = j.value("name", std::string("cayley"));
  if (j.contains("irreps")) {
    const json& ir = j.at("irreps");
    if (!ir.is_array()) detail::fail(where + ".irreps", "expected an array");
    std::vector<Irrep> irreps;
    for (std::size_t k = 0; k < ir.size(); ++k) {
      const std::string iw = where + ".irreps[" + std::to_string(k) + "]";
      Irrep rho;
      rho.degree = detail::index_value(detail::field(ir[k], "degree", iw), iw + ".degree");
      const json& mats = detail::field(ir[k], "matrices", iw);
      if (!mats.is_array()) detail::fail(iw + ".matrices", "expected an array");
      for (std::size_t g = 0; g < mats.size(); ++g) {
        const std::string mw = iw + ".matrices[" + std::to_string(g) + "]";
        auto entries = parse_complex_list(mats[g], mw);
        if (entries.size() != rho.degree * rho.degree) detail::fail(mw, "expected degree^2 entries");
        rho.matrices.emplace_back(rho.degree, rho.degree, std::move(entries));
      }
      try {
        validate_irrep(out.group, rho);
      } catch (const InputError& e) {
        detail::fail(iw, e.what());
      }
      irreps.push_back(std::move(rho));
    }
    try {
      require_complete_irreps(out.group, irreps);
    } catch (const InputError& e) {
      detail::fail(where + ".irreps", e.what());
    }
    out.irreps = std::move(irreps);
  }
  return out;
}

inline json group_to_json(const FiniteGroup& g, const std::vector<Irrep>* irreps = nullptr) {
  json out;
  if (g.abelian_decomposition()) {
    out["abelian"] = *g.abelian_decomposition();
    return out;
  }
  out["cayley"] = g.table();
  if (irreps) {
    json ir = json::array();
    for (const auto& rho : *irreps) {
      json mats = json::array();
      for (const auto& m : rho.matrices) mats.push_back(to_json(std::vector<cx>(m.data().begin(), m.data().end())));
      ir.push_back({{"degree", rho.degree}, {"matrices", mats}});
    }
    out["irreps"] = ir;
  }
  return out;
}

inline GroupWeights parse_group_weights(const json& j, const std::string& where) {
  return GroupWeights{parse_complex_list(detail::field(j, "x", where), where + ".x")};
}

inline Graph parse_graph(const json& j, const std::string& where) {
  const std::size_t n = detail::index_value(detail::field(j, "n", where), where + ".n");
  const json& e = detail::field(j, "edges", where);
  if (!e.is_array()) detail::fail(where + ".edges", "expected an array");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::string ew = where + ".edges[" + std::to_string(i) + "]";
    if (!e[i].is_array() || e[i].size() != 2) detail::fail(ew, "expected [u, v]");
    const std::size_t u = detail::index_value(e[i][0], ew + "[0]");
    const std::size_t v = detail::index_value(e[i][1], ew + "[1]");
    if (u >= n || v >= n) detail::fail(ew, "vertex out of range");
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n_vertices()}, {"edges", edges}};
}

inline VoltageAssignment parse_voltage(const json& j, const std::string& where) {
  const json& a = detail::field(j, "arcs", where);
  if (!a.is_array()) detail::fail(where + ".arcs", "expected an array");
  VoltageAssignment v;
  for (std::size_t i = 0; i < a.size(); ++i)
    v.alpha.push_back(detail::index_value(a[i], where + ".arcs[" + std::to_string(i) + "]"));
  return v;
}

inline LoadedGroup load_group(const std::filesystem::path& p) { return parse_group(read_json_file(p), p.string()); }
inline Graph load_graph(const std::filesystem::path& p) { return parse_graph(read_json_file(p), p.string()); }
inline GroupWeights load_group_weights(const std::filesystem::path& p) {
  return parse_group_weights(read_json_file(p), p.string());
}
inline VoltageAssignment load_voltage(const std::filesystem::path& p) {
  return parse_voltage(read_json_file(p), p.string());
}

/// Arc weights for a graph. A "from_group" file yields the K_G weighting
/// u_(g,h) = x[g^{-1}h]; relative paths resolve against the file's folder.
inline ArcWeights load_arc_weights(const std::filesystem::path& p) {
  const json j = read_json_file(p);
  const std::string where = p.string();
  if (j.contains("w")) return ArcWeights{parse_complex_list(j.at("w"), where + ".w")};
  const json& from = detail::field(j, "from_group", where);
  if (!from.is_string()) detail::fail(where + ".from_group", "expected a path string");
  const auto base = p.parent_path();
  const LoadedGroup g = load_group(base / from.get<std::string>());
  GroupWeights x;
  if (j.contains("x")) {
    x = parse_group_weights(j, where);
  } else {
    const json& wp = detail::field(j, "weights", where);
    if (!wp.is_string()) detail::fail(where + ".weights", "expected a path string");
    x = load_group_weights(base / wp.get<std::string>());
  }
  if (x.x.size() != g.group.order()) detail::fail(where, "group weights length does not match group order");
  return kgamma_arc_weights(g.group, x);
}

}  // namespace zetakit::io

#endif  // ZETAKIT_IO_HPP
