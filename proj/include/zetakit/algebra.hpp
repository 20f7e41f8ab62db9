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

#ifndef ZETAKIT_ALGEBRA_HPP
#define ZETAKIT_ALGEBRA_HPP

#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "zetakit/error.hpp"
#include "zetakit/linalg.hpp"

namespace zetakit {

using Element = std::size_t;

/// A finite group given by its multiplication table. Element 0 is the
/// identity. Abelian groups built by make_abelian_group also carry their
/// cyclic decomposition; elements are then mixed-radix tuples with the
/// first component varying fastest.
class FiniteGroup {
 public:
  /// Validates the table exhaustively: closure, identity at 0,
  /// associativity and two-sided inverses.
  static FiniteGroup from_cayley(std::vector<std::vector<Element>> table) {
    const std::size_t n = table.size();
    require(n >= 1, "cayley table is empty");
    require(n <= size_cap(), "group order " + std::to_string(n) + " exceeds size cap");
    for (const auto& row : table) {
      require(row.size() == n, "cayley table is not square");
      for (Element e : row) require(e < n, "cayley table entry out of range");
    }
    for (Element a = 0; a < n; ++a)
      require(table[0][a] == a && table[a][0] == a, "element 0 of the cayley table is not the identity");
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          require(table[table[a][b]][c] == table[a][table[b][c]], "cayley table is not associative");
    std::vector<Element> inv(n, n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (table[a][b] == 0 && table[b][a] == 0) inv[a] = b;
    for (Element a = 0; a < n; ++a) require(inv[a] < n, "cayley table element has no two-sided inverse");
    FiniteGroup g;
    g.table_ = std::move(table);
    g.inverse_ = std::move(inv);
    return g;
  }

  std::size_t order() const { return table_.size(); }
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::vector<std::vector<Element>>& table() const { return table_; }
  const std::optional<std::vector<std::size_t>>& abelian_decomposition() const { return decomposition_; }

  bool is_abelian() const {
    for (Element a = 0; a < order(); ++a)
      for (Element b = a + 1; b < order(); ++b)
        if (table_[a][b] != table_[b][a]) return false;
    return true;
  }

  /// Mixed-radix components of an element (abelian groups only).
  std::vector<std::size_t> components(Element e) const {
    require(decomposition_.has_value(), "group has no abelian decomposition");
    std::vector<std::size_t> out;
    for (std::size_t n : *decomposition_) {
      out.push_back(e % n);
      e /= n;
    }
    return out;
  }

 private:
  friend FiniteGroup make_abelian_group(const std::vector<std::size_t>&);
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  std::optional<std::vector<std::size_t>> decomposition_;
};

/// Z/n_1 x ... x Z/n_k. An empty list gives the trivial group.
inline FiniteGroup make_abelian_group(const std::vector<std::size_t>& cyclic_orders) {
  std::size_t order = 1;
  for (std::size_t n : cyclic_orders) {
    require(n >= 1, "cyclic factor order must be positive");
    require(order <= size_cap() / n, "abelian group order exceeds size cap");
    order *= n;
  }
  FiniteGroup g;
  g.decomposition_ = cyclic_orders;
  g.table_.assign(order, std::vector<Element>(order));
  g.inverse_.assign(order, 0);
  std::vector<std::vector<std::size_t>> comp(order);
  for (Element e = 0; e < order; ++e) comp[e] = g.components(e);
  auto index_of = [&](const std::vector<std::size_t>& c) {
    Element idx = 0;
    for (std::size_t j = cyclic_orders.size(); j-- > 0;) idx = idx * cyclic_orders[j] + c[j];
    return idx;
  };
  std::vector<std::size_t> tmp(cyclic_orders.size());
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      for (std::size_t j = 0; j < cyclic_orders.size(); ++j) tmp[j] = (comp[a][j] + comp[b][j]) % cyclic_orders[j];
      g.table_[a][b] = index_of(tmp);
    }
    for (std::size_t j = 0; j < cyclic_orders.size(); ++j)
      tmp[j] = (cyclic_orders[j] - comp[a][j]) % cyclic_orders[j];
    g.inverse_[a] = index_of(tmp);
  }
  return g;
}

/// Numeric values of the indeterminates x_g, indexed by element.
struct GroupWeights {
  std::vector<cx> x;
};

/// A linear character, values indexed by element.
struct Character {
  std::vector<cx> values;
  cx operator()(Element g) const { return values[g]; }
};

/// All |G| characters of an abelian group. Character a takes
/// g to prod_j exp(2 pi i a_j g_j / n_j); a runs in element order, so
/// character 0 is the trivial one.
inline std::vector<Character> characters(const FiniteGroup& group) {
  if (!group.abelian_decomposition())
    throw InputError("characters need an abelian decomposition; use the irrep path for nonabelian groups");
  const auto& orders = *group.abelian_decomposition();
  const std::size_t n = group.order();
  std::vector<std::vector<std::size_t>> comp(n);
  for (Element e = 0; e < n; ++e) comp[e] = group.components(e);
  std::vector<Character> chars(n, Character{std::vector<cx>(n)});
  for (Element a = 0; a < n; ++a)
    for (Element g = 0; g < n; ++g) {
      // Accumulate in turns and reduce mod 1 before exponentiating.
      double turns = 0.0;
      for (std::size_t j = 0; j < orders.size(); ++j)
        turns += static_cast<double>((comp[a][j] * comp[g][j]) % orders[j]) / static_cast<double>(orders[j]);
      turns -= std::floor(turns);
      chars[a].values[g] = std::polar(1.0, 2.0 * std::numbers::pi * turns);
    }
  return chars;
}

/// Irreducible matrix representation: one degree x degree matrix per element.
struct Irrep {
  std::size_t degree = 1;
  std::vector<ComplexMatrix> matrices;
};

/// Checks rho(1) = I and rho(gh) = rho(g) rho(h) within tol.
inline void validate_irrep(const FiniteGroup& group, const Irrep& rho, double tol = 1e-9) {
  require(rho.degree >= 1, "irrep degree must be positive");
  require(rho.matrices.size() == group.order(), "irrep must give one matrix per group element");
  for (const auto& m : rho.matrices)
    require(m.rows() == rho.degree && m.cols() == rho.degree, "irrep matrix has wrong size");
  require(max_abs_diff(rho.matrices[0], ComplexMatrix::identity(rho.degree)) <= tol,
          "irrep does not send the identity to the identity matrix");
  for (Element g = 0; g < group.order(); ++g)
    for (Element h = 0; h < group.order(); ++h)
      require(max_abs_diff(rho.matrices[group.multiply(g, h)], rho.matrices[g] * rho.matrices[h]) <= tol,
              "irrep is not a homomorphism");
}

inline void require_complete_irreps(const FiniteGroup& group, const std::vector<Irrep>& irreps) {
  std::size_t sum = 0;
  for (const auto& r : irreps) {
    require(r.matrices.size() == group.order(), "irrep must give one matrix per group element");
    sum += r.degree * r.degree;
  }
  require(sum == group.order(), "incomplete irrep set: sum of squared degrees is " + std::to_string(sum) +
                                    ", group order is " + std::to_string(group.order()));
  // Characters of distinct irreps are orthonormal.
  const double n = static_cast<double>(group.order());
  for (std::size_t i = 0; i < irreps.size(); ++i)
    for (std::size_t j = i; j < irreps.size(); ++j) {
      cx ip{};
      for (Element g = 0; g < group.order(); ++g)
        ip += irreps[i].matrices[g].trace() * std::conj(irreps[j].matrices[g].trace());
      require(std::abs(ip / n - (i == j ? 1.0 : 0.0)) < 1e-8,
              i == j ? "irrep " + std::to_string(i) + " is reducible"
                     : "irreps " + std::to_string(i) + " and " + std::to_string(j) + " are equivalent");
    }
}

inline void require_weights(const FiniteGroup& group, const GroupWeights& w) {
  require(w.x.size() == group.order(), "group weights length does not match group order");
}

/// M(G)_{ij} = x[g_i^{-1} g_j].
inline ComplexMatrix group_matrix(const FiniteGroup& group, const GroupWeights& w) {
  require_weights(group, w);
  const std::size_t n = group.order();
  ComplexMatrix m(n, n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) m(i, j) = w.x[group.multiply(group.inverse(i), j)];
  return m;
}

/// The factors sum_g chi(g) x_g, one per character in character order.
inline std::vector<cx> dedekind_factors(const FiniteGroup& group, const GroupWeights& w) {
  require_weights(group, w);
  std::vector<cx> out;
  for (const auto& chi : characters(group)) {
    cx s{};
    for (Element g = 0; g < group.order(); ++g) s += chi(g) * w.x[g];
    out.push_back(s);
  }
  return out;
}

/// Group determinant of an abelian group as a product over characters.
inline cx dedekind_det(const FiniteGroup& group, const GroupWeights& w) {
  cx p = 1.0;
  for (cx f : dedekind_factors(group, w)) p *= f;
  return p;
}

/// sum_h rho(h) x_h.
inline ComplexMatrix irrep_weighted_sum(const Irrep& rho, const GroupWeights& w) {
  ComplexMatrix s(rho.degree, rho.degree);
  for (Element h = 0; h < rho.matrices.size(); ++h) s += rho.matrices[h] * w.x[h];
  return s;
}

/// Group determinant via a complete irrep set:
/// prod_rho det(sum_h rho(h) x_h)^{deg rho}.
inline cx nonabelian_group_det(const FiniteGroup& group, const std::vector<Irrep>& irreps, const GroupWeights& w) {
  require_weights(group, w);
  require_complete_irreps(group, irreps);
  cx p = 1.0;
  for (const auto& rho : irreps) p *= ipow(det(irrep_weighted_sum(rho, w)), rho.degree);
  return p;
}

/// Degree-one irreps of an abelian group, for the generic irrep path.
inline std::vector<Irrep> character_irreps(const FiniteGroup& group) {
  std::vector<Irrep> out;
  for (const auto& chi : characters(group)) {
    Irrep r;
    for (cx v : chi.values) r.matrices.emplace_back(1, 1, std::vector<cx>{v});
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace zetakit

#endif  // ZETAKIT_ALGEBRA_HPP
