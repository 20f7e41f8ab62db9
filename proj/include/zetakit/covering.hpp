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

#ifndef ZETAKIT_COVERING_HPP
#define ZETAKIT_COVERING_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "zetakit/algebra.hpp"
#include "zetakit/error.hpp"
#include "zetakit/graphs.hpp"
#include "zetakit/linalg.hpp"

// Group coverings of digraphs (derived digraphs of voltage assignments)
// and the factorization of their weighted-matrix determinants.

namespace zetakit {

/// Arc -> group element, in the base digraph's arc order.
struct VoltageAssignment {
  std::vector<Element> alpha;
};

/// Checks ranges and the pseudo-ordinary condition alpha(v,u) =
/// alpha(u,v)^{-1}. With an inverse pairing the condition is checked on
/// paired arcs; without one, on every pair of opposite non-loop arcs.
inline void validate_voltage(const Digraph& d, const FiniteGroup& group, const VoltageAssignment& a) {
  require(a.alpha.size() == d.n_arcs(), "voltage assignment length does not match arc count");
  for (Element g : a.alpha) require(g < group.order(), "voltage element out of range");
  if (d.inverse) {
    for (std::size_t e = 0; e < d.n_arcs(); ++e)
      require(a.alpha[(*d.inverse)[e]] == group.inverse(a.alpha[e]),
              "voltage assignment is not pseudo-ordinary at arc " + std::to_string(e));
    return;
  }
  for (std::size_t e = 0; e < d.n_arcs(); ++e) {
    const auto [u, v] = d.arcs[e];
    if (u == v) continue;
    for (std::size_t f = 0; f < d.n_arcs(); ++f)
      if (d.arcs[f].origin == v && d.arcs[f].terminus == u)
        require(a.alpha[f] == group.inverse(a.alpha[e]),
                "voltage assignment is not pseudo-ordinary at arcs " + std::to_string(e) + "," + std::to_string(f));
  }
}

/// D^alpha. Vertex (v, g) has index g * n + v (blocks by group element);
/// arc e_g = (e, g) has index g * |A| + e and runs from (o(e), g) to
/// (t(e), g alpha(e)).
struct DerivedDigraph {
  Digraph digraph;
  std::size_t base_vertices = 0;
  std::size_t base_arcs = 0;
  std::size_t group_order = 0;

  std::pair<Vertex, Element> project(Vertex x) const { return {x % base_vertices, x / base_vertices}; }
  std::size_t base_arc(std::size_t derived_arc) const { return derived_arc % base_arcs; }
};

inline DerivedDigraph derive(const Digraph& d, const FiniteGroup& group, const VoltageAssignment& a) {
  validate_voltage(d, group, a);
  const std::size_t n = d.n_vertices, p = group.order(), m = d.n_arcs();
  require(n * p <= size_cap(), "derived digraph exceeds size cap");
  DerivedDigraph out;
  out.base_vertices = n;
  out.base_arcs = m;
  out.group_order = p;
  out.digraph.n_vertices = n * p;
  out.digraph.arcs.reserve(m * p);
  for (Element g = 0; g < p; ++g)
    for (std::size_t e = 0; e < m; ++e) {
      const auto [u, v] = d.arcs[e];
      out.digraph.arcs.push_back({g * n + u, group.multiply(g, a.alpha[e]) * n + v});
    }
  if (d.inverse) {
    // (e_g)^{-1} = (e^{-1})_{g alpha(e)}
    std::vector<std::size_t> inv(m * p);
    for (Element g = 0; g < p; ++g)
      for (std::size_t e = 0; e < m; ++e) inv[g * m + e] = group.multiply(g, a.alpha[e]) * m + (*d.inverse)[e];
    out.digraph.inverse = std::move(inv);
  }
  return out;
}

/// n x n weighted matrix of a digraph: entry (u, v) sums w over arcs u -> v.
inline ComplexMatrix weight_matrix(const Digraph& d, const ArcWeights& w) {
  require_arc_weights(d, w);
  ComplexMatrix m(d.n_vertices, d.n_vertices);
  for (std::size_t e = 0; e < d.n_arcs(); ++e) m(d.arcs[e].origin, d.arcs[e].terminus) += w[e];
  return m;
}

/// W(D^alpha): each derived arc carries the weight of its base arc.
inline ComplexMatrix derived_weight_matrix(const DerivedDigraph& dd, const ArcWeights& base_w) {
  require(base_w.size() == dd.base_arcs, "arc weights length does not match base arc count");
  ComplexMatrix m(dd.digraph.n_vertices, dd.digraph.n_vertices);
  for (std::size_t e = 0; e < dd.digraph.n_arcs(); ++e) {
    const auto [x, y] = dd.digraph.arcs[e];
    m(x, y) += base_w[dd.base_arc(e)];
  }
  return m;
}

/// W_h(u, v) sums w over arcs u -> v with voltage h; one matrix per element.
inline std::vector<ComplexMatrix> partition_by_voltage(const Digraph& d, const FiniteGroup& group,
                                                       const VoltageAssignment& a, const ArcWeights& w) {
  require_arc_weights(d, w);
  require(a.alpha.size() == d.n_arcs(), "voltage assignment length does not match arc count");
  std::vector<ComplexMatrix> parts(group.order(), ComplexMatrix(d.n_vertices, d.n_vertices));
  for (std::size_t e = 0; e < d.n_arcs(); ++e) parts[a.alpha[e]](d.arcs[e].origin, d.arcs[e].terminus) += w[e];
  return parts;
}

/// P_h with p_ij = 1 iff g_i h = g_j.
inline ComplexMatrix right_regular_matrix(const FiniteGroup& group, Element h) {
  const std::size_t p = group.order();
  ComplexMatrix m(p, p);
  for (Element i = 0; i < p; ++i) m(i, group.multiply(i, h)) = 1.0;
  return m;
}

/// sum_h P_h (x) W_h, assembled independently of derived_weight_matrix.
inline ComplexMatrix kron_assembly(const FiniteGroup& group, const std::vector<ComplexMatrix>& parts) {
  require(parts.size() == group.order(), "one partition block per group element expected");
  const std::size_t n = parts.empty() ? 0 : parts[0].rows();
  ComplexMatrix sum(group.order() * n, group.order() * n);
  for (Element h = 0; h < group.order(); ++h) sum += kron(right_regular_matrix(group, h), parts[h]);
  return sum;
}

/// prod_chi det(sum_h chi(h) W_h), abelian groups only.
inline cx decomposed_det_abelian(const Digraph& d, const FiniteGroup& group, const VoltageAssignment& a,
                                 const ArcWeights& w) {
  if (!group.abelian_decomposition())
    throw InputError("character decomposition needs an abelian group; use decomposed_det_general with irreps");
  validate_voltage(d, group, a);
  const auto parts = partition_by_voltage(d, group, a, w);
  cx product = 1.0;
  for (const auto& chi : characters(group)) {
    ComplexMatrix s(d.n_vertices, d.n_vertices);
    for (Element h = 0; h < group.order(); ++h) s += parts[h] * chi(h);
    product *= det(s);
  }
  return product;
}

/// prod_j det(sum_h rho_j(h) (x) W_h)^{d_j} over a complete irrep set.
inline cx decomposed_det_general(const Digraph& d, const FiniteGroup& group, const VoltageAssignment& a,
                                 const ArcWeights& w, const std::vector<Irrep>& irreps) {
  require_complete_irreps(group, irreps);
  validate_voltage(d, group, a);
  const auto parts = partition_by_voltage(d, group, a, w);
  cx product = 1.0;
  for (const auto& rho : irreps) {
    ComplexMatrix s(rho.degree * d.n_vertices, rho.degree * d.n_vertices);
    for (Element h = 0; h < group.order(); ++h) s += kron(rho.matrices[h], parts[h]);
    product *= ipow(det(s), rho.degree);
  }
  return product;
}

/// One vertex with `loops` loops and no inverse pairing.
inline Digraph bouquet(std::size_t loops) {
  Digraph d;
  d.n_vertices = 1;
  d.arcs.assign(loops, Arc{0, 0});
  return d;
}

struct BouquetDedekind {
  cx det_group_matrix;
  cx det_derived;
  cx factor_product;
  /// max |W(D^alpha) - M(G)| entrywise.
  double matrix_gap = 0.0;
  double max_relative_deviation = 0.0;
};

/// Alternate route to the group determinant: bouquet with |G| loops,
/// w(e_i) = x_{g_i}, alpha(e_i) = g_i. The derived weighted matrix is M(G),
/// and its determinant factors by characters (or irreps, when given).
inline BouquetDedekind dedekind_via_bouquet(const FiniteGroup& group, const GroupWeights& x,
                                            const std::vector<Irrep>* irreps = nullptr) {
  require_weights(group, x);
  const Digraph d = bouquet(group.order());
  VoltageAssignment a;
  for (Element g = 0; g < group.order(); ++g) a.alpha.push_back(g);
  const ArcWeights w{x.x};
  const DerivedDigraph dd = derive(d, group, a);
  const ComplexMatrix wd = derived_weight_matrix(dd, w);
  const ComplexMatrix mg = group_matrix(group, x);
  BouquetDedekind out;
  out.det_group_matrix = det(mg);
  out.det_derived = det(wd);
  out.factor_product = irreps ? decomposed_det_general(d, group, a, w, *irreps) : decomposed_det_abelian(d, group, a, w);
  out.matrix_gap = max_abs_diff(wd, mg);
  out.max_relative_deviation = std::max({relative_deviation(out.det_group_matrix, out.det_derived),
                                         relative_deviation(out.det_derived, out.factor_product),
                                         relative_deviation(out.det_group_matrix, out.factor_product)});
  return out;
}

}  // namespace zetakit

#endif  // ZETAKIT_COVERING_HPP
