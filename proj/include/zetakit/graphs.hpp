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

#ifndef ZETAKIT_GRAPHS_HPP
#define ZETAKIT_GRAPHS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zetakit/algebra.hpp"
#include "zetakit/error.hpp"
#include "zetakit/linalg.hpp"

namespace zetakit {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite undirected graph; loops and multi-edges allowed. Edges are
/// stored as (min, max) pairs in canonical order: loops first, then
/// lexicographic.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n_vertices, std::vector<Edge> edges) : n_(n_vertices), edges_(std::move(edges)) {
    for (auto& e : edges_) {
      require(e.first < n_ && e.second < n_,
              "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") has a vertex out of range");
      if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::stable_sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      const bool la = a.first == a.second, lb = b.first == b.second;
      if (la != lb) return la;
      return a < b;
    });
  }

  std::size_t n_vertices() const { return n_; }
  std::size_t n_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool is_simple() const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].first == edges_[i].second) return false;
      if (i > 0 && edges_[i] == edges_[i - 1]) return false;
    }
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

struct Arc {
  Vertex origin;
  Vertex terminus;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Directed multigraph with an optional inverse-arc involution.
struct Digraph {
  std::size_t n_vertices = 0;
  std::vector<Arc> arcs;
  std::optional<std::vector<std::size_t>> inverse;

  std::size_t n_arcs() const { return arcs.size(); }
};

/// Per-arc complex weights in the digraph's arc order.
struct ArcWeights {
  std::vector<cx> w;

  static ArcWeights constant(std::size_t n_arcs, cx value) { return {std::vector<cx>(n_arcs, value)}; }
  std::size_t size() const { return w.size(); }
  cx operator[](std::size_t e) const { return w[e]; }
};

/// How a loop's two arcs enter the n x n weighted matrix W.
enum class LoopCount { once, twice };

inline void require_pairing(const Digraph& d) {
  require(d.inverse.has_value(), "digraph has no inverse-arc pairing");
}

inline void require_arc_weights(const Digraph& d, const ArcWeights& w) {
  require(w.size() == d.n_arcs(), "arc weights length " + std::to_string(w.size()) + " does not match arc count " +
                                      std::to_string(d.n_arcs()));
}

/// D(G): arcs e_1..e_m in edge order, then e_1^{-1}..e_m^{-1}. A loop gives
/// two distinct, mutually inverse arcs.
inline Digraph symmetric_digraph(const Graph& g) {
  const std::size_t m = g.n_edges();
  Digraph d;
  d.n_vertices = g.n_vertices();
  d.arcs.reserve(2 * m);
  for (const auto& [u, v] : g.edges()) d.arcs.push_back({u, v});
  for (const auto& [u, v] : g.edges()) d.arcs.push_back({v, u});
  std::vector<std::size_t> inv(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    inv[i] = m + i;
    inv[m + i] = i;
  }
  d.inverse = std::move(inv);
  return d;
}

inline bool is_connected(const Graph& g) {
  const std::size_t n = g.n_vertices();
  if (n <= 1) return true;
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == n;
}

struct EdgeMatrices {
  ComplexMatrix B;
  ComplexMatrix J0;
  ComplexMatrix edge_matrix() const { return B - J0; }
};

/// B_{ef} = 1 if t(e) = o(f); J0_{ef} = 1 if f = e^{-1}.
inline EdgeMatrices edge_matrix_pair(const Digraph& d) {
  require_pairing(d);
  const std::size_t a = d.n_arcs();
  EdgeMatrices out{ComplexMatrix(a, a), ComplexMatrix(a, a)};
  for (std::size_t e = 0; e < a; ++e) {
    for (std::size_t f = 0; f < a; ++f)
      if (d.arcs[e].terminus == d.arcs[f].origin) out.B(e, f) = 1.0;
    out.J0(e, (*d.inverse)[e]) = 1.0;
  }
  return out;
}

/// B_w{ef} = w(f) if t(e) = o(f).
inline ComplexMatrix weighted_B(const Digraph& d, const ArcWeights& w) {
  require_arc_weights(d, w);
  const std::size_t a = d.n_arcs();
  ComplexMatrix bw(a, a);
  for (std::size_t e = 0; e < a; ++e)
    for (std::size_t f = 0; f < a; ++f)
      if (d.arcs[e].terminus == d.arcs[f].origin) bw(e, f) = w[f];
  return bw;
}

/// K_G: one vertex per group element, a loop at every vertex and an edge
/// between every pair, m = n(n+1)/2.
inline Graph complete_graph_with_loops(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, i);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

inline Graph complete_graph_with_loops(const FiniteGroup& group) { return complete_graph_with_loops(group.order()); }

/// u_e = x[g^{-1} h] for e = (g, h) on D(K_G).
inline ArcWeights kgamma_arc_weights(const FiniteGroup& group, const GroupWeights& x) {
  require_weights(group, x);
  const Digraph d = symmetric_digraph(complete_graph_with_loops(group));
  ArcWeights w;
  w.w.reserve(d.n_arcs());
  for (const auto& arc : d.arcs) w.w.push_back(x.x[group.multiply(group.inverse(arc.origin), arc.terminus)]);
  return w;
}

struct WeightedMatrices {
  ComplexMatrix W;
  ComplexMatrix Dw;
};

/// W(u,v) sums w over arcs u -> v; Dw(u,u) sums w over arcs leaving u.
/// Both arcs of a loop always count in Dw; `loops` decides whether the
/// second one also counts in W. Weights are on symmetric_digraph(g).
inline WeightedMatrices weighted_matrix_and_Dw(const Graph& g, const ArcWeights& w,
                                               LoopCount loops = LoopCount::twice) {
  const Digraph d = symmetric_digraph(g);
  require_arc_weights(d, w);
  const std::size_t n = g.n_vertices();
  const std::size_t m = g.n_edges();
  WeightedMatrices out{ComplexMatrix(n, n), ComplexMatrix(n, n)};
  for (std::size_t e = 0; e < d.n_arcs(); ++e) {
    const auto [o, t] = d.arcs[e];
    out.Dw(o, o) += w[e];
    const bool second_loop_arc = (o == t) && e >= m;
    if (!second_loop_arc || loops == LoopCount::twice) out.W(o, t) += w[e];
  }
  return out;
}

/// Adjacency and degree matrices: the unit-weight case of the above,
/// loops contributing 2.
inline WeightedMatrices adjacency_and_degree(const Graph& g) {
  return weighted_matrix_and_Dw(g, ArcWeights::constant(2 * g.n_edges(), 1.0), LoopCount::twice);
}

/// True when w(e^{-1}) = w(e) within tol for every arc.
inline bool is_symmetric_weighting(const Digraph& d, const ArcWeights& w, double tol = 1e-12) {
  require_pairing(d);
  require_arc_weights(d, w);
  for (std::size_t e = 0; e < d.n_arcs(); ++e)
    if (std::abs(w[e] - w[(*d.inverse)[e]]) > tol * std::max(1.0, std::abs(w[e]))) return false;
  return true;
}

}  // namespace zetakit

#endif  // ZETAKIT_GRAPHS_HPP
