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

#include <gtest/gtest.h>

#include <random>

#include "zetakit/cycles.hpp"
#include "zetakit/fixtures.hpp"
#include "zetakit/zeta.hpp"

namespace zetakit {
namespace {

ArcWeights disk(std::size_t n, std::mt19937_64& rng, double r = 0.4) {
  std::uniform_real_distribution<double> d(-r / std::sqrt(2.0), r / std::sqrt(2.0));
  ArcWeights w;
  for (std::size_t i = 0; i < n; ++i) w.w.emplace_back(d(rng), d(rng));
  return w;
}

TEST(Cycles, TriangleHasTwoPrimeClassesOfLengthThree) {
  const CycleEnumeration en = enumerate_cycle_classes(symmetric_digraph(fixtures::complete_graph(3)), 3);
  ASSERT_EQ(en.classes.size(), 2u);
  for (const auto& c : en.classes) {
    EXPECT_EQ(c.length, 3u);
    EXPECT_TRUE(c.is_prime);
  }
  EXPECT_EQ(en.closed_path_counts[3], 6u);
  EXPECT_EQ(en.closed_path_counts[1] + en.closed_path_counts[2], 0u);
}

TEST(Cycles, SingleEdgeHasNone) {
  const CycleEnumeration en = enumerate_cycle_classes(symmetric_digraph(fixtures::path_graph(2)), 8);
  EXPECT_TRUE(en.classes.empty());
}

TEST(Cycles, PowersAreNotPrime) {
  const CycleEnumeration en = enumerate_cycle_classes(symmetric_digraph(fixtures::complete_graph(3)), 6);
  std::size_t primes = 0, powers = 0;
  for (const auto& c : en.classes) {
    if (c.length == 6) (c.is_prime ? primes : powers) += 1;
    if (!c.is_prime) {
      EXPECT_EQ(c.period, 3u);
    }
  }
  EXPECT_EQ(powers, 2u);
  EXPECT_EQ(primes, 0u);
}

// N_k = tr((B - J0)^k).
TEST(Cycles, CountsMatchTraces) {
  for (const Graph& g : {fixtures::single_loop(), fixtures::theta(3), fixtures::complete_graph(4),
                         complete_graph_with_loops(2), fixtures::complete_bipartite(2, 3)}) {
    const Digraph d = symmetric_digraph(g);
    const CycleEnumeration en = enumerate_cycle_classes(d, 7);
    const ComplexMatrix t = edge_matrix_pair(d).edge_matrix();
    ComplexMatrix p = ComplexMatrix::identity(t.rows());
    for (std::size_t k = 1; k <= 7; ++k) {
      p = p * t;
      EXPECT_EQ(static_cast<double>(en.closed_path_counts[k]), p.trace().real()) << "k=" << k;
    }
  }
}

TEST(Cycles, Caps) {
  const Digraph d = symmetric_digraph(fixtures::complete_graph(3));
  EXPECT_THROW(enumerate_cycle_classes(d, 11), InputError);
  EXPECT_THROW(enumerate_cycle_classes(symmetric_digraph(fixtures::complete_graph(7)), 3), InputError);
}

TEST(LogSeries, ZeroMatrix) {
  for (cx c : log_zeta_series(ComplexMatrix(3, 3), 5)) EXPECT_EQ(c, cx(0.0));
}

TEST(LogSeries, OfPolynomial) {
  // log(1 - u) = -u - u^2/2 - u^3/3 ...
  const auto l = log_series_of_poly(UnivariatePoly({1.0, -1.0}), 5);
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_NEAR(std::abs(l[k] + 1.0 / static_cast<double>(k)), 0.0, 1e-15);
  EXPECT_THROW(log_series_of_poly(UnivariatePoly({2.0, 1.0}), 3), InputError);
}

// Euler product: the log of the edge zeta, from traces, from the
// enumerated paths and from the prime classes.
TEST(LogSeries, EdgeZetaOfK3MatchesCycleSums) {
  std::mt19937_64 rng(73);
  const Digraph d = symmetric_digraph(fixtures::complete_graph(3));
  const ArcWeights u = disk(6, rng);
  const CycleEnumeration en = enumerate_cycle_classes(d, 9);
  const auto paths = log_coefficients_from_paths(en, u, 9);
  const auto primes = log_coefficients_from_primes(en, u, 9);
  const ComplexMatrix tu = edge_matrix_pair(d).edge_matrix() * ComplexMatrix::diagonal(u.w);
  const auto traces = log_zeta_series(tu, 9);
  for (std::size_t k = 1; k <= 9; ++k) {
    EXPECT_LT(std::abs(paths[k] - traces[k]), 1e-15);
    EXPECT_LT(std::abs(primes[k] - traces[k]), 1e-15);
  }
  // Truncated product against the determinant.
  cx partial{};
  for (std::size_t k = 1; k <= 9; ++k) partial += paths[k];
  const cx value = edge_zeta_via_edge_matrix(d, u);
  const double rho = spectral_radius_bound(tu);
  ASSERT_LT(rho, 1.0);
  EXPECT_LE(std::abs(std::exp(partial) * value - 1.0), std::expm1(log_series_tail_bound(6, rho, 9)) + 1e-14);
}

TEST(LogSeries, IharaPolynomialMatchesPathCounts) {
  const Graph g = fixtures::complete_graph(4);
  const CycleEnumeration en = enumerate_cycle_classes(symmetric_digraph(g), 8);
  const auto l = log_series_of_poly(ihara_via_edge_matrix(g), 8);
  for (std::size_t k = 1; k <= 8; ++k)
    EXPECT_NEAR(-l[k].real(), static_cast<double>(en.closed_path_counts[k]) / static_cast<double>(k), 1e-10);
}

TEST(SpectralBound, DominatesEigenvalues) {
  // Triangular matrix: eigenvalues on the diagonal.
  const ComplexMatrix m(3, 3, {0.5, 3.0, 1.0, 0.0, -0.2, 4.0, 0.0, 0.0, cx(0.1, 0.3)});
  const double rho = spectral_radius_bound(m);
  EXPECT_GE(rho, 0.5);
  EXPECT_LT(rho, 1.0);
  EXPECT_TRUE(std::isinf(log_series_tail_bound(3, 1.0, 8)));
}

}  // namespace
}  // namespace zetakit
