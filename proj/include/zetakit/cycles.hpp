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

#ifndef ZETAKIT_CYCLES_HPP
#define ZETAKIT_CYCLES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <set>
#include <vector>

#include "zetakit/error.hpp"
#include "zetakit/graphs.hpp"
#include "zetakit/linalg.hpp"

// Brute-force cycle oracle: reduced closed paths, their equivalence
// classes, and the log-series of a zeta reciprocal.

namespace zetakit {

/// One equivalence class of cycles, represented by its least rotation.
struct CycleClass {
  std::vector<std::size_t> arcs;
  std::size_t length = 0;
  bool is_reduced = true;
  bool is_prime = true;
  /// Smallest p with arcs[i] = arcs[(i + p) % length]; equals length when prime.
  std::size_t period = 0;
};

struct CycleEnumeration {
  std::vector<CycleClass> classes;
  /// closed_path_counts[k] = number of reduced closed paths of length k,
  /// counted with base point; index 0 unused.
  std::vector<std::size_t> closed_path_counts;
};

struct CycleCaps {
  std::size_t max_len = 10;
  std::size_t max_arcs = 40;
};

namespace detail {

inline std::vector<std::size_t> least_rotation(const std::vector<std::size_t>& s) {
  std::vector<std::size_t> best = s, cur = s;
  for (std::size_t r = 1; r < s.size(); ++r) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

inline std::size_t minimal_period(const std::vector<std::size_t>& s) {
  const std::size_t k = s.size();
  for (std::size_t p = 1; p < k; ++p) {
    if (k % p != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = s[i] == s[(i + p) % k];
    if (ok) return p;
  }
  return k;
}

}  // namespace detail

/// All classes of reduced cycles of length <= max_len by depth-first
/// search over non-backtracking arc sequences.
inline CycleEnumeration enumerate_cycle_classes(const Digraph& d, std::size_t max_len, CycleCaps caps = {}) {
  require_pairing(d);
  require(max_len <= caps.max_len, "cycle enumeration: max_len exceeds cap " + std::to_string(caps.max_len));
  require(d.n_arcs() <= caps.max_arcs, "cycle enumeration: arc count exceeds cap " + std::to_string(caps.max_arcs));
  const auto& inv = *d.inverse;
  std::vector<std::vector<std::size_t>> next(d.n_arcs());
  for (std::size_t e = 0; e < d.n_arcs(); ++e)
    for (std::size_t f = 0; f < d.n_arcs(); ++f)
      if (d.arcs[e].terminus == d.arcs[f].origin && f != inv[e]) next[e].push_back(f);

  CycleEnumeration out;
  out.closed_path_counts.assign(max_len + 1, 0);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> path;

  auto visit = [&](auto&& self, std::size_t first) -> void {
    const std::size_t last = path.back();
    if (d.arcs[last].terminus == d.arcs[first].origin && first != inv[last]) {
      ++out.closed_path_counts[path.size()];
      seen.insert(detail::least_rotation(path));
    }
    if (path.size() == max_len) return;
    for (std::size_t f : next[last]) {
      path.push_back(f);
      self(self, first);
      path.pop_back();
    }
  };
  for (std::size_t s = 0; s < d.n_arcs() && max_len > 0; ++s) {
    path.assign(1, s);
    visit(visit, s);
  }
  for (const auto& c : seen) {
    CycleClass cls;
    cls.arcs = c;
    cls.length = c.size();
    cls.period = detail::minimal_period(c);
    cls.is_prime = cls.period == cls.length;
    out.classes.push_back(std::move(cls));
  }
  std::stable_sort(out.classes.begin(), out.classes.end(),
                   [](const CycleClass& a, const CycleClass& b) { return a.length < b.length; });
  return out;
}

inline cx cycle_weight(const CycleClass& c, const ArcWeights& u) {
  cx g = 1.0;
  for (std::size_t e : c.arcs) g *= u[e];
  return g;
}

/// c_k = (1/k) * sum of g(C) over reduced closed paths of length k, from
/// the class list (each class stands for `period` distinct paths).
/// Returned vector is indexed by k, entry 0 unused.
inline std::vector<cx> log_coefficients_from_paths(const CycleEnumeration& en, const ArcWeights& u,
                                                   std::size_t max_k) {
  std::vector<cx> c(max_k + 1);
  for (const auto& cls : en.classes)
    if (cls.length <= max_k)
      c[cls.length] += static_cast<double>(cls.period) * cycle_weight(cls, u) / static_cast<double>(cls.length);
  return c;
}

/// The same coefficients from the Euler product: sum over prime classes P
/// and r >= 1 with r|P| = k of g(P)^r / r.
inline std::vector<cx> log_coefficients_from_primes(const CycleEnumeration& en, const ArcWeights& u,
                                                    std::size_t max_k) {
  std::vector<cx> c(max_k + 1);
  for (const auto& cls : en.classes) {
    if (!cls.is_prime) continue;
    const cx g = cycle_weight(cls, u);
    cx gr = g;
    for (std::size_t r = 1; r * cls.length <= max_k; ++r, gr *= g) c[r * cls.length] += gr / static_cast<double>(r);
  }
  return c;
}

/// tr(M^k)/k for k = 1..max_k, indexed by k with entry 0 unused; the
/// series of log det(I - M)^{-1}.
inline std::vector<cx> log_zeta_series(const ComplexMatrix& m, std::size_t max_k) {
  std::vector<cx> out(max_k + 1);
  ComplexMatrix p = ComplexMatrix::identity(m.rows());
  for (std::size_t k = 1; k <= max_k; ++k) {
    p = p * m;
    out[k] = p.trace() / static_cast<double>(k);
  }
  return out;
}

/// Coefficients l_1..l_K of log f(t) for a polynomial with f(0) = 1,
/// from k l_k = k f_k - sum_{j<k} j l_j f_{k-j}.
inline std::vector<cx> log_series_of_poly(const UnivariatePoly& f, std::size_t max_k) {
  require(std::abs(f.coefficient(0) - 1.0) < 1e-9, "log series needs f(0) = 1");
  std::vector<cx> l(max_k + 1);
  for (std::size_t k = 1; k <= max_k; ++k) {
    cx acc = static_cast<double>(k) * f.coefficient(k);
    for (std::size_t j = 1; j < k; ++j) acc -= static_cast<double>(j) * l[j] * f.coefficient(k - j);
    l[k] = acc / static_cast<double>(k);
  }
  return l;
}

/// Upper bound on the spectral radius: min over p of ||M^p||_inf^{1/p},
/// p = 1, 2, 4, ..., 64.
inline double spectral_radius_bound(const ComplexMatrix& m) {
  double best = m.norm_inf();
  ComplexMatrix p = m;
  for (int j = 1; j <= 6; ++j) {
    p = p * p;
    best = std::min(best, std::pow(p.norm_inf(), 1.0 / static_cast<double>(1 << j)));
  }
  return best;
}

/// Bound on |sum_{k>K} tr(M^k)/k| for an N x N matrix with spectral
/// radius <= rho < 1: N rho^{K+1} / ((K+1)(1 - rho)).
inline double log_series_tail_bound(std::size_t n, double rho, std::size_t max_k) {
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  return static_cast<double>(n) * std::pow(rho, static_cast<double>(max_k + 1)) /
         (static_cast<double>(max_k + 1) * (1.0 - rho));
}

}  // namespace zetakit

#endif  // ZETAKIT_CYCLES_HPP
