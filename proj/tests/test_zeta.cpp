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

#include "zetakit/fixtures.hpp"
#include "zetakit/zeta.hpp"

namespace zetakit {
namespace {

std::vector<cx> disk(std::size_t n, std::mt19937_64& rng, double r = 0.4) {
  std::uniform_real_distribution<double> d(-r / std::sqrt(2.0), r / std::sqrt(2.0));
  std::vector<cx> v(n);
  for (auto& z : v) z = cx(d(rng), d(rng));
  return v;
}

UnivariatePoly poly(std::vector<cx> c) { return UnivariatePoly(std::move(c)); }

// Frozen from exact expansion of the two determinant forms.
TEST(Ihara, K4Coefficients) {
  const UnivariatePoly p = ihara_via_edge_matrix(fixtures::complete_graph(4));
  EXPECT_EQ(p.degree(), 12);
  EXPECT_LT(coefficient_deviation(p, poly({1, 0, 0, -8, -6, 0, 16, 24, -3, -16, -24, 0, 16})), 1e-12);
  EXPECT_LT(coefficient_deviation(ihara_via_bass(fixtures::complete_graph(4)), p), 1e-12);
}

// A cycle has exactly two prime classes, one per orientation.
TEST(Ihara, CyclesAreSquares) {
  for (std::size_t n : {3u, 4u, 5u}) {
    std::vector<cx> c(2 * n + 1);
    c[0] = 1.0;
    c[n] = -2.0;
    c[2 * n] = 1.0;
    EXPECT_LT(coefficient_deviation(ihara_via_edge_matrix(fixtures::cycle_graph(n)), poly(c)), 1e-12) << n;
    EXPECT_LT(coefficient_deviation(ihara_via_bass(fixtures::cycle_graph(n)), poly(c)), 1e-12) << n;
  }
}

TEST(Ihara, TreesAndLoops) {
  EXPECT_LT(coefficient_deviation(ihara_via_edge_matrix(fixtures::path_graph(2)), poly({1})), 1e-14);
  EXPECT_LT(coefficient_deviation(ihara_via_bass(fixtures::path_graph(2)), poly({1})), 1e-14);
  EXPECT_LT(coefficient_deviation(ihara_via_bass(fixtures::star(3)), poly({1})), 1e-12);
  EXPECT_LT(coefficient_deviation(ihara_via_edge_matrix(fixtures::single_loop()), poly({1, -2, 1})), 1e-14);
  EXPECT_LT(coefficient_deviation(ihara_via_bass(fixtures::single_loop()), poly({1, -2, 1})), 1e-14);
}

TEST(Ihara, CrossFormOnFixtures) {
  for (const Graph& g : {fixtures::complete_bipartite(2, 3), fixtures::petersen(), fixtures::theta(3),
                         complete_graph_with_loops(3), fixtures::complete_graph(5)}) {
    const UnivariatePoly a = ihara_via_edge_matrix(g);
    EXPECT_LT(std::abs(a.coefficient(0) - 1.0), 1e-12 * a.max_abs_coefficient());
    EXPECT_LE(a.degree(), static_cast<int>(2 * g.n_edges()));
    EXPECT_LT(coefficient_deviation(a, ihara_via_bass(g)), 1e-8);
  }
}

TEST(Ihara, RejectsDisconnected) {
  EXPECT_THROW(ihara_via_edge_matrix(Graph(4, {{0, 1}, {2, 3}})), InputError);
  EXPECT_THROW(ihara_via_bass(Graph(4, {{0, 1}, {2, 3}})), InputError);
}

TEST(EdgeZeta, ZeroAndUniformWeights) {
  const Graph k4 = fixtures::complete_graph(4);
  const Digraph d = symmetric_digraph(k4);
  EXPECT_EQ(edge_zeta_via_edge_matrix(d, ArcWeights::constant(12, 0.0)), cx(1.0));
  EXPECT_EQ(edge_zeta_via_wf(k4, ArcWeights::constant(12, 0.0)), cx(1.0));
  const UnivariatePoly ihara = ihara_via_edge_matrix(k4);
  for (cx t : {cx(0.1), cx(0.2, -0.3), cx(-0.35, 0.1)})
    EXPECT_LT(relative_deviation(edge_zeta_via_edge_matrix(d, ArcWeights::constant(12, t)), ihara(t)), 1e-12);
}

TEST(EdgeZeta, EdgeMatrixMatchesNByNForm) {
  std::mt19937_64 rng(41);
  for (const Graph& g : {fixtures::complete_graph(3), fixtures::complete_graph(4), fixtures::theta(3),
                         fixtures::single_loop(), complete_graph_with_loops(2), Graph(2, {{0, 0}, {0, 1}, {1, 1}, {0, 1}})}) {
    const Digraph d = symmetric_digraph(g);
    for (int t = 0; t < 20; ++t) {
      const ArcWeights u{disk(d.n_arcs(), rng)};
      const auto [tu, ut] = edge_zeta_orderings(d, u);
      EXPECT_LT(relative_deviation(tu, ut), 1e-12);
      EXPECT_LT(relative_deviation(tu, edge_zeta_via_wf(g, u)), 1e-10);
    }
  }
}

TEST(EdgeZeta, KGammaWeights) {
  std::mt19937_64 rng(43);
  const FiniteGroup z2 = make_abelian_group({2});
  const Graph k = complete_graph_with_loops(z2);
  for (int t = 0; t < 10; ++t) {
    const ArcWeights u = kgamma_arc_weights(z2, GroupWeights{disk(2, rng)});
    EXPECT_LT(relative_deviation(edge_zeta_via_edge_matrix(symmetric_digraph(k), u), edge_zeta_via_wf(k, u)), 1e-10);
  }
}

TEST(EdgeZeta, PoleIsNamed) {
  EXPECT_THROW(edge_zeta_via_wf(fixtures::theta(2), ArcWeights::constant(4, 1.0)), NumericError);
}

TEST(SecondWeighted, UnitWeightsGiveIhara) {
  for (const Graph& g : {fixtures::complete_graph(4), fixtures::petersen(), complete_graph_with_loops(3),
                         fixtures::path_graph(3)}) {
    const ArcWeights ones = ArcWeights::constant(2 * g.n_edges(), 1.0);
    const UnivariatePoly ihara = ihara_via_edge_matrix(g);
    for (cx u : {cx(0.15), cx(0.3, 0.2), cx(-0.4, -0.1)}) {
      EXPECT_LT(relative_deviation(second_weighted_zeta(g, ones, u), ihara(u)), 1e-10);
      EXPECT_LT(relative_deviation(second_weighted_zeta_edge_form(g, ones, u), ihara(u)), 1e-10);
    }
  }
}

TEST(SecondWeighted, ZeroPoint) {
  std::mt19937_64 rng(47);
  const Graph g = fixtures::complete_graph(4);
  const ArcWeights w{disk(12, rng)};
  EXPECT_EQ(second_weighted_zeta(g, w, 0.0), cx(1.0));
  EXPECT_EQ(second_weighted_zeta_edge_form(g, w, 0.0), cx(1.0));
}

TEST(SecondWeighted, FormsAgreeOnK4) {
  std::mt19937_64 rng(53);
  const Graph g = fixtures::complete_graph(4);
  for (int t = 0; t < 20; ++t) {
    auto w = disk(12, rng);
    for (std::size_t e = 0; e < 6; ++e) w[6 + e] = w[e];
    EXPECT_LT(relative_deviation(second_weighted_zeta(g, {w}, 0.1), second_weighted_zeta_edge_form(g, {w}, 0.1)), 1e-10);
    const auto asym = disk(12, rng);
    EXPECT_LT(relative_deviation(second_weighted_zeta(g, {asym}, cx(0.2, 0.1)),
                                 second_weighted_zeta_edge_form(g, {asym}, cx(0.2, 0.1))),
              1e-10);
  }
}

// Loops: the n x n form matches the 2m form only when both loop arcs
// enter W.
TEST(SecondWeighted, LoopConvention) {
  std::mt19937_64 rng(59);
  const FiniteGroup g = make_abelian_group({3});
  const Graph k = complete_graph_with_loops(g);
  double worst_once = 0.0;
  for (int t = 0; t < 10; ++t) {
    const ArcWeights w = kgamma_arc_weights(g, GroupWeights{disk(3, rng)});
    const cx u = disk(1, rng)[0];
    const cx direct = second_weighted_zeta_edge_form(k, w, u);
    EXPECT_LT(relative_deviation(second_weighted_zeta(k, w, u), direct), 1e-10);
    worst_once = std::max(worst_once, relative_deviation(second_weighted_zeta(k, w, u, LoopCount::once), direct));
  }
  EXPECT_GT(worst_once, 1e-3);
}

TEST(KGammaClosed, ZeroWeights) {
  for (const auto& shape : std::vector<std::vector<std::size_t>>{{2}, {3}, {2, 2}}) {
    const FiniteGroup g = make_abelian_group(shape);
    const GroupWeights zero{std::vector<cx>(g.order())};
    EXPECT_LT(std::abs(edge_zeta_kgamma_closed(g, zero) - 1.0), 1e-15);
    EXPECT_LT(std::abs(weighted_zeta_kgamma_closed(g, zero, 0.3) - std::pow(1.0 - 0.09, g.order() * (g.order() - 1) / 2) *
                                                                          std::pow(1.0 - 0.09, g.order())),
              1e-14);
  }
}

TEST(KGammaClosed, EdgeZetaMatchesDirect) {
  std::mt19937_64 rng(61);
  for (const auto& shape : std::vector<std::vector<std::size_t>>{{2}, {3}, {4}, {2, 2}, {5}, {6}}) {
    const FiniteGroup g = make_abelian_group(shape);
    const Digraph d = symmetric_digraph(complete_graph_with_loops(g));
    for (int t = 0; t < 10; ++t) {
      const GroupWeights x{disk(g.order(), rng)};
      EXPECT_LT(relative_deviation(edge_zeta_kgamma_closed(g, x), edge_zeta_via_edge_matrix(d, kgamma_arc_weights(g, x))),
                1e-10);
    }
  }
}

TEST(KGammaClosed, LiteralStatementDisagrees) {
  std::mt19937_64 rng(67);
  const FiniteGroup g = make_abelian_group({3});
  const GroupWeights x{disk(3, rng)};
  const cx direct = edge_zeta_via_edge_matrix(symmetric_digraph(complete_graph_with_loops(g)), kgamma_arc_weights(g, x));
  EXPECT_GT(relative_deviation(edge_zeta_kgamma_as_printed(g, x), direct), 1e-3);
}

TEST(KGammaClosed, WeightedZetaMatchesDirect) {
  std::mt19937_64 rng(71);
  for (const auto& shape : std::vector<std::vector<std::size_t>>{{2}, {3}, {4}, {2, 2}}) {
    const FiniteGroup g = make_abelian_group(shape);
    const Graph k = complete_graph_with_loops(g);
    for (int t = 0; t < 10; ++t) {
      const GroupWeights x{disk(g.order(), rng)};
      const cx u = t == 0 ? cx(0.2) : disk(1, rng)[0];
      EXPECT_LT(relative_deviation(weighted_zeta_kgamma_closed(g, x, u),
                                   second_weighted_zeta_edge_form(k, kgamma_arc_weights(g, x), u)),
                1e-10);
    }
    EXPECT_EQ(weighted_zeta_kgamma_closed(g, GroupWeights{disk(g.order(), rng)}, 0.0), cx(1.0));
  }
}

}  // namespace
}  // namespace zetakit
