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

#ifndef ZETAKIT_COMPLEXITY_HPP
#define ZETAKIT_COMPLEXITY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetakit/algebra.hpp"
#include "zetakit/error.hpp"
#include "zetakit/graphs.hpp"
#include "zetakit/linalg.hpp"
#include "zetakit/zeta.hpp"

// Weighted complexity (weighted spanning-arborescence counts) of graphs.

namespace zetakit {

/// f_G(w,u) = det(I - uW + (D_w - I)u^2), degree <= 2n.
inline UnivariatePoly f_poly(const Graph& g, const ArcWeights& w, LoopCount loops = LoopCount::twice,
                             InterpolationOptions opt = {}) {
  const auto [wm, dw] = weighted_matrix_and_Dw(g, w, loops);
  const ComplexMatrix id = ComplexMatrix::identity(g.n_vertices());
  auto eval = [&](cx u) { return det(id - wm * u + (dw - id) * (u * u)); };
  return interpolate_poly(eval, 2 * g.n_vertices(), opt).trimmed(kPolyTrim);
}

/// w(G): each edge's weight once, read from its forward arc.
inline cx total_edge_weight(const Graph& g, const ArcWeights& w) {
  cx s{};
  for (std::size_t e = 0; e < g.n_edges(); ++e) s += w[e];
  return s;
}

inline void require_symmetric(const Graph& g, const ArcWeights& w) {
  if (!is_symmetric_weighting(symmetric_digraph(g), w, 1e-12))
    throw InputError("arc weights are not symmetric: w(e^-1) != w(e)");
}

/// kappa_w(G) = f'(w,1) / (2(w(G) - n)).
inline cx weighted_complexity_via_derivative(const Graph& g, const ArcWeights& w) {
  require_symmetric(g, w);
  const cx denom = 2.0 * (total_edge_weight(g, w) - static_cast<double>(g.n_vertices()));
  if (std::abs(denom) < 1e-12 * std::max(1.0, static_cast<double>(g.n_vertices())))
    throw NumericError("weighted complexity: degenerate denominator, w(G) = n");
  return poly_derivative_at(f_poly(g, w), 1.0) / denom;
}

/// Cofactor of D_w - W at (root, root). Loops cancel in D_w - W.
inline cx matrix_tree_oracle(const Graph& g, const ArcWeights& w, Vertex root = 0) {
  require_symmetric(g, w);
  const std::size_t n = g.n_vertices();
  require(root < n, "matrix-tree root out of range");
  const auto [wm, dw] = weighted_matrix_and_Dw(g, w, LoopCount::twice);
  const ComplexMatrix lap = dw - wm;
  ComplexMatrix minor(n - 1, n - 1);
  for (std::size_t i = 0, r = 0; i < n; ++i) {
    if (i == root) continue;
    for (std::size_t j = 0, c = 0; j < n; ++j) {
      if (j == root) continue;
      minor(r, c++) = lap(i, j);
    }
    ++r;
  }
  return det(minor);
}

inline constexpr std::size_t kArborescenceCap = 8;

/// Sum over spanning arborescences rooted at `root` (every other vertex
/// has exactly one outgoing arc, and following arcs leads to the root) of
/// the product of their arc weights. Exhaustive; n <= 8.
inline cx arborescence_enumeration_oracle(const Graph& g, const ArcWeights& w, Vertex root = 0) {
  const std::size_t n = g.n_vertices();
  require(n <= kArborescenceCap, "arborescence enumeration is capped at 8 vertices");
  require(root < n, "arborescence root out of range");
  const Digraph d = symmetric_digraph(g);
  require_arc_weights(d, w);
  std::vector<Vertex> movers;
  std::vector<std::vector<std::size_t>> options(n);
  for (std::size_t e = 0; e < d.n_arcs(); ++e)
    if (d.arcs[e].origin != d.arcs[e].terminus) options[d.arcs[e].origin].push_back(e);
  for (Vertex v = 0; v < n; ++v)
    if (v != root) {
      if (options[v].empty()) return 0.0;
      movers.push_back(v);
    }

  std::vector<std::size_t> choice(movers.size(), 0);
  std::vector<Vertex> parent(n, root);
  cx total{};
  while (true) {
    cx weight = 1.0;
    for (std::size_t i = 0; i < movers.size(); ++i) {
      const std::size_t e = options[movers[i]][choice[i]];
      parent[movers[i]] = d.arcs[e].terminus;
      weight *= w[e];
    }
    bool tree = true;
    for (Vertex v : movers) {
      Vertex x = v;
      std::size_t steps = 0;
      while (x != root && steps <= n) {
        x = parent[x];
        ++steps;
      }
      if (x != root) {
        tree = false;
        break;
      }
    }
    if (tree) total += weight;
    std::size_t i = 0;
    while (i < movers.size() && ++choice[i] == options[movers[i]].size()) choice[i++] = 0;
    if (i == movers.size()) break;
  }
  return total;
}

/// kappa_w(K_G) = (1/n) prod_{chi != 1} sum_{g != 1} (1 - chi(g)) x_g, for
/// x_1 = 0 and x_g = x_{g^{-1}}.
inline cx kgamma_complexity_closed(const FiniteGroup& group, const GroupWeights& x) {
  require_weights(group, x);
  require(std::abs(x.x[0]) <= 1e-12, "closed-form complexity needs x_1 = 0");
  for (Element g = 1; g < group.order(); ++g)
    require(std::abs(x.x[g] - x.x[group.inverse(g)]) <= 1e-12 * std::max(1.0, std::abs(x.x[g])),
            "closed-form complexity needs x_g = x_{g^-1}");
  const auto chars = characters(group);
  cx product = 1.0;
  for (std::size_t c = 1; c < chars.size(); ++c) {
    cx s{};
    for (Element g = 1; g < group.order(); ++g) s += (1.0 - chars[c](g)) * x.x[g];
    product *= s;
  }
  return product / static_cast<double>(group.order());
}

/// Values of the weighted complexity by every applicable method.
struct ComplexityReport {
  std::string graph_id;
  std::vector<std::pair<std::string, cx>> methods;
  std::vector<std::string> skipped;
  double max_deviation = 0.0;
  double tolerance = 1e-7;
  bool passed = true;
};

inline ComplexityReport complexity_report(std::string id, const Graph& g, const ArcWeights& w, double tol = 1e-7,
                                          std::optional<cx> closed_form = std::nullopt) {
  ComplexityReport r;
  r.graph_id = std::move(id);
  r.tolerance = tol;
  try {
    r.methods.emplace_back("derivative", weighted_complexity_via_derivative(g, w));
  } catch (const NumericError& e) {
    r.skipped.push_back(std::string("derivative: ") + e.what());
  }
  if (closed_form) r.methods.emplace_back("closed-form", *closed_form);
  r.methods.emplace_back("matrix-tree", matrix_tree_oracle(g, w));
  if (g.n_vertices() <= kArborescenceCap)
    r.methods.emplace_back("enumeration", arborescence_enumeration_oracle(g, w));
  else
    r.skipped.push_back("enumeration: more than 8 vertices");
  for (std::size_t i = 0; i < r.methods.size(); ++i)
    for (std::size_t j = i + 1; j < r.methods.size(); ++j)
      r.max_deviation = std::max(r.max_deviation, relative_deviation(r.methods[i].second, r.methods[j].second));
  r.passed = r.max_deviation < tol;
  return r;
}

/// Evaluation of (1-u)^{-r} Z_G(u)^{-1} at u = 1 by exact deflation of the
/// Ihara polynomial, next to 2^r chi(G) kappa(G) and its negation.
struct BettiProbe {
  std::size_t betti = 0;
  long euler = 0;
  cx kappa;
  cx lhs;
  cx rhs_printed;
  cx rhs_flipped;
  double max_remainder = 0.0;
  double deviation_printed = 0.0;
  double deviation_flipped = 0.0;
  bool printed_sign_matches = false;
  bool flipped_sign_matches = false;
};

inline BettiProbe theorem9_probe(const Graph& g, double remainder_tol = 1e-7, double match_tol = 1e-6) {
  if (!is_connected(g)) throw InputError("betti probe: graph is disconnected");
  const long n = static_cast<long>(g.n_vertices()), m = static_cast<long>(g.n_edges());
  if (m - n + 1 <= 1) throw InputError("betti probe needs betti number r = m - n + 1 > 1");
  BettiProbe p;
  p.betti = static_cast<std::size_t>(m - n + 1);
  p.euler = n - m;
  UnivariatePoly q = ihara_via_edge_matrix(g);
  const double scale = std::max(1.0, q.max_abs_coefficient());
  for (std::size_t i = 0; i < p.betti; ++i) {
    auto [quot, rem] = divide_by_linear(q, 1.0);
    p.max_remainder = std::max(p.max_remainder, std::abs(rem) / scale);
    // divide by (1 - u) = -(u - 1)
    std::vector<cx> c = quot.coefficients();
    for (auto& v : c) v = -v;
    q = UnivariatePoly(std::move(c));
  }
  if (p.max_remainder > remainder_tol) throw NumericError("Betti deflation failed: remainder is not negligible");
  p.lhs = q(1.0);
  p.kappa = matrix_tree_oracle(g, ArcWeights::constant(2 * g.n_edges(), 1.0));
  p.rhs_printed = std::pow(2.0, static_cast<double>(p.betti)) * static_cast<double>(p.euler) * p.kappa;
  p.rhs_flipped = -p.rhs_printed;
  p.deviation_printed = relative_deviation(p.lhs, p.rhs_printed);
  p.deviation_flipped = relative_deviation(p.lhs, p.rhs_flipped);
  p.printed_sign_matches = p.deviation_printed < match_tol;
  p.flipped_sign_matches = p.deviation_flipped < match_tol;
  return p;
}

}  // namespace zetakit

#endif  // ZETAKIT_COMPLEXITY_HPP
