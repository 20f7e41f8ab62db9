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

// zetakit: batch front end.
//
//   zetakit compute <subject> [flags]
//   zetakit verify <scenario> [flags]
//
// Exit codes: 0 pass, 1 verification failure, 2 input error, 3 numeric error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "zetakit/algebra.hpp"
#include "zetakit/complexity.hpp"
#include "zetakit/covering.hpp"
#include "zetakit/error.hpp"
#include "zetakit/graphs.hpp"
#include "zetakit/io.hpp"
#include "zetakit/verify.hpp"
#include "zetakit/zeta.hpp"

namespace {

using nlohmann::json;
using namespace zetakit;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;

struct Flags {
  std::string subject;
  std::string scenario;
  std::string graph, group, weights, voltage, point;
  std::uint64_t seed = 1;
  std::size_t trials = 0;
  std::optional<double> tol;
  std::size_t max_len = 8;
  bool human = false;
  bool unit_weights = false;
};

cx parse_point(const std::string& s) {
  std::istringstream in(s);
  double re = 0.0, im = 0.0;
  char comma = ',';
  if (!(in >> re)) throw InputError("--point: expected re,im");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw InputError("--point: expected re,im");
  }
  in >> std::ws;
  if (!in.eof()) throw InputError("--point: trailing characters");
  return {re, im};
}

const std::string& need(const std::string& value, const char* flag) {
  if (value.empty()) throw InputError(std::string("missing required flag ") + flag);
  return value;
}

// Interpolation noise below 1e-10 of the largest coefficient prints as 0.
json poly_json(const UnivariatePoly& p) {
  const double floor = 1e-10 * std::max(1.0, p.max_abs_coefficient());
  auto snap = [&](double v) { return std::abs(v) < floor ? 0.0 : v; };
  json c = json::array();
  for (cx z : p.coefficients()) c.push_back(io::to_json(cx{snap(z.real()), snap(z.imag())}));
  return c;
}

std::string human_table(const json& j) {
  std::ostringstream os;
  for (auto it = j.begin(); it != j.end(); ++it) os << it.key() << ": " << it.value().dump() << "\n";
  return os.str();
}

ArcWeights graph_weights(const Flags& f, const Graph& g) {
  if (f.unit_weights) return ArcWeights::constant(2 * g.n_edges(), 1.0);
  ArcWeights w = io::load_arc_weights(need(f.weights, "--weights (or --unit-weights)"));
  if (w.size() != 2 * g.n_edges())
    throw InputError(f.weights + ": expected " + std::to_string(2 * g.n_edges()) + " arc weights, got " +
                     std::to_string(w.size()));
  return w;
}

json compute_ihara(const Flags& f) {
  const Graph g = io::load_graph(need(f.graph, "--graph"));
  const UnivariatePoly a = ihara_via_edge_matrix(g);
  const UnivariatePoly b = ihara_via_bass(g);
  json out = {{"subject", "ihara"},
              {"method", "edge-matrix"},
              {"degree", a.degree()},
              {"coefficients", poly_json(a)},
              {"cross_check", {{"method", "bass"}, {"coefficient_deviation", coefficient_deviation(a, b)}}}};
  if (!f.point.empty()) {
    const cx u = parse_point(f.point);
    out["point"] = io::to_json(u);
    out["value"] = io::to_json(a(u));
  }
  return out;
}

json compute_edge_zeta(const Flags& f) {
  const Graph g = io::load_graph(need(f.graph, "--graph"));
  const Digraph d = symmetric_digraph(g);
  ArcWeights u = graph_weights(f, g);
  if (!f.point.empty()) {
    const cx t = parse_point(f.point);
    for (auto& z : u.w) z *= t;
  }
  const cx value = edge_zeta_via_edge_matrix(d, u);
  const cx wf = edge_zeta_via_wf(g, u);
  return {{"subject", "edge-zeta"},
          {"method", "edge-matrix"},
          {"value", io::to_json(value)},
          {"cross_check", {{"method", "n-by-n"}, {"value", io::to_json(wf)}, {"deviation", relative_deviation(value, wf)}}}};
}

json compute_weighted_zeta(const Flags& f) {
  const Graph g = io::load_graph(need(f.graph, "--graph"));
  const ArcWeights w = graph_weights(f, g);
  json out = {{"subject", "weighted-zeta"}, {"method", "edge-form"}};
  if (f.point.empty()) {
    const std::size_t bound = 2 * g.n_edges();
    const UnivariatePoly p =
        interpolate_poly([&](cx u) { return second_weighted_zeta_edge_form(g, w, u); }, bound).trimmed(kPolyTrim);
    const UnivariatePoly q = interpolate_poly([&](cx u) { return second_weighted_zeta(g, w, u); }, bound).trimmed(kPolyTrim);
    out["degree"] = p.degree();
    out["coefficients"] = poly_json(p);
    out["cross_check"] = {{"method", "ihara-type"}, {"coefficient_deviation", coefficient_deviation(p, q)}};
    return out;
  }
  const cx u = parse_point(f.point);
  const cx a = second_weighted_zeta_edge_form(g, w, u);
  const cx b = second_weighted_zeta(g, w, u);
  out["point"] = io::to_json(u);
  out["value"] = io::to_json(a);
  out["cross_check"] = {{"method", "ihara-type"}, {"value", io::to_json(b)}, {"deviation", relative_deviation(a, b)}};
  return out;
}

json compute_group_det(const Flags& f) {
  const io::LoadedGroup lg = io::load_group(need(f.group, "--group"));
  const GroupWeights x = io::load_group_weights(need(f.weights, "--weights"));
  require_weights(lg.group, x);
  const cx lu = det(group_matrix(lg.group, x));
  json out = {{"subject", "group-det"}, {"group", lg.name}, {"order", lg.group.order()}};
  if (lg.group.abelian_decomposition()) {
    const auto factors = dedekind_factors(lg.group, x);
    cx product = 1.0;
    for (cx v : factors) product *= v;
    out["method"] = "character-product";
    out["value"] = io::to_json(product);
    out["character_factors"] = io::to_json(factors);
    out["cross_check"] = {{"method", "lu"}, {"value", io::to_json(lu)}, {"deviation", relative_deviation(product, lu)}};
  } else if (lg.irreps) {
    json factors = json::array();
    for (const auto& rho : *lg.irreps)
      factors.push_back({{"degree", rho.degree}, {"det", io::to_json(det(irrep_weighted_sum(rho, x)))}});
    const cx product = nonabelian_group_det(lg.group, *lg.irreps, x);
    out["method"] = "irrep-product";
    out["value"] = io::to_json(product);
    out["irrep_factors"] = factors;
    out["cross_check"] = {{"method", "lu"}, {"value", io::to_json(lu)}, {"deviation", relative_deviation(product, lu)}};
  } else {
    out["method"] = "lu";
    out["value"] = io::to_json(lu);
  }
  return out;
}

json compute_complexity(const Flags& f) {
  const double tol = f.tol.value_or(1e-7);
  ComplexityReport r;
  if (!f.group.empty()) {
    const io::LoadedGroup lg = io::load_group(f.group);
    const GroupWeights x = io::load_group_weights(need(f.weights, "--weights"));
    require_weights(lg.group, x);
    const Graph k = complete_graph_with_loops(lg.group);
    std::optional<cx> closed;
    if (x.x[0] == cx{}) closed = kgamma_complexity_closed(lg.group, x);
    r = complexity_report("K_" + lg.name, k, kgamma_arc_weights(lg.group, x), tol, closed);
  } else {
    const Graph g = io::load_graph(need(f.graph, "--graph"));
    const ArcWeights w = graph_weights(f, g);
    require_symmetric(g, w);
    r = complexity_report(f.graph, g, w, tol);
  }
  json methods = json::object();
  for (const auto& [k, v] : r.methods) methods[k] = io::to_json(v);
  cx value{};
  for (const auto& [k, v] : r.methods)
    if (k == "matrix-tree") value = v;
  return {{"subject", "complexity"},
          {"graph", r.graph_id},
          {"method", "matrix-tree"},
          {"value", io::to_json(value)},
          {"methods", methods},
          {"skipped", r.skipped},
          {"max_deviation", r.max_deviation},
          {"tolerance", r.tolerance},
          {"status", r.passed ? "PASS" : "FAIL"}};
}

json compute_covering_det(const Flags& f) {
  const Graph g = io::load_graph(need(f.graph, "--graph"));
  const io::LoadedGroup lg = io::load_group(need(f.group, "--group"));
  const VoltageAssignment a = io::load_voltage(need(f.voltage, "--voltage"));
  const Digraph d = symmetric_digraph(g);
  const ArcWeights w = graph_weights(f, g);
  const DerivedDigraph dd = derive(d, lg.group, a);
  const cx direct = det(derived_weight_matrix(dd, w));
  cx factored;
  std::string method;
  if (lg.group.abelian_decomposition()) {
    factored = decomposed_det_abelian(d, lg.group, a, w);
    method = "character-product";
  } else if (lg.irreps) {
    factored = decomposed_det_general(d, lg.group, a, w, *lg.irreps);
    method = "irrep-product";
  } else {
    throw InputError(f.group + ": nonabelian group needs \"irreps\" for the factorization");
  }
  return {{"subject", "covering-det"},
          {"method", method},
          {"value", io::to_json(factored)},
          {"derived_vertices", dd.digraph.n_vertices},
          {"cross_check", {{"method", "direct"}, {"value", io::to_json(direct)}, {"deviation", relative_deviation(factored, direct)}}}};
}

int run_compute(const Flags& f) {
  json out;
  if (f.subject == "ihara") out = compute_ihara(f);
  else if (f.subject == "edge-zeta") out = compute_edge_zeta(f);
  else if (f.subject == "weighted-zeta") out = compute_weighted_zeta(f);
  else if (f.subject == "group-det") out = compute_group_det(f);
  else if (f.subject == "complexity") out = compute_complexity(f);
  else if (f.subject == "covering-det") out = compute_covering_det(f);
  else throw InputError("unknown subject '" + f.subject + "'");
  std::cout << (f.human ? human_table(out) : out.dump()) << std::endl;
  return kExitPass;
}

int run_verify(const Flags& f) {
  verify::Options o;
  o.seed = f.seed;
  o.trials = f.trials;
  o.tol = f.tol;
  o.max_len = f.max_len;
  if (!f.group.empty()) o.group = io::load_group(f.group);
  bool ok = true;
  for (const auto& r : verify::run(f.scenario, o)) {
    std::cout << (f.human ? r.to_human() : r.to_json().dump()) << std::endl;
    ok = ok && r.passed();
  }
  return ok ? kExitPass : kExitFail;
}

void error_line(const char* kind, const std::string& msg) {
  std::cerr << json{{"error", kind}, {"message", msg}}.dump() << std::endl;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zetakit: graph zeta functions, group determinants and coverings"};
  app.require_subcommand(1);
  Flags f;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--graph", f.graph, "graph JSON file");
    c->add_option("--group", f.group, "group JSON file");
    c->add_option("--weights", f.weights, "weights JSON file (arc weights or group weights)");
    c->add_option("--voltage", f.voltage, "voltage assignment JSON file");
    c->add_option("--point", f.point, "evaluation point re,im");
    c->add_option("--tol", f.tol, "tolerance override");
    c->add_flag("--human", f.human, "render tables instead of JSON lines");
  };

  auto* compute = app.add_subcommand("compute", "evaluate one quantity");
  compute->add_option("subject", f.subject, "ihara | edge-zeta | weighted-zeta | group-det | complexity | covering-det")
      ->required();
  add_common(compute);
  compute->add_flag("--unit-weights", f.unit_weights, "use weight 1 on every arc");

  auto* ver = app.add_subcommand("verify", "run a randomized verification suite");
  std::string scenarios = "all";
  for (const auto& [name, fn] : verify::suites()) scenarios += " | " + name;
  ver->add_option("scenario", f.scenario, scenarios)->required();
  add_common(ver);
  ver->add_option("--seed", f.seed, "random seed");
  ver->add_option("--trials", f.trials, "trials per instance (0 = suite default)");
  ver->add_option("--max-len", f.max_len, "cycle length bound for the euler suite")->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    return compute->parsed() ? run_compute(f) : run_verify(f);
  } catch (const InputError& e) {
    error_line("input", e.what());
    return kExitInput;
  } catch (const json::exception& e) {
    error_line("input", e.what());
    return kExitInput;
  } catch (const NumericError& e) {
    error_line("numeric", e.what());
    return kExitNumeric;
  }
}
