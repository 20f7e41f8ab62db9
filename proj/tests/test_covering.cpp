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

#include "zetakit/catalog.hpp"
#include "zetakit/covering.hpp"
#include "zetakit/fixtures.hpp"

namespace zetakit {
namespace {

std::vector<cx> disk(std::size_t n, std::mt19937_64& rng, double r = 0.4) {
  std::uniform_real_distribution<double> d(-r / std::sqrt(2.0), r / std::sqrt(2.0));
  std::vector<cx> v(n);
  for (auto& z : v) z = cx(d(rng), d(rng));
  return v;
}

VoltageAssignment random_voltage(const Digraph& d, const FiniteGroup& g, std::mt19937_64& rng) {
  const std::size_t m = d.n_arcs() / 2;
  VoltageAssignment a{std::vector<Element>(d.n_arcs())};
  for (std::size_t e = 0; e < m; ++e) {
    a.alpha[e] = rng() % g.order();
    a.alpha[m + e] = g.inverse(a.alpha[e]);
  }
  return a;
}

TEST(Voltage, PseudoOrdinaryCheck) {
  const FiniteGroup z4 = make_abelian_group({4});
  const Digraph d = symmetric_digraph(fixtures::complete_graph(3));
  EXPECT_NO_THROW(validate_voltage(d, z4, {{1, 2, 3, 3, 2, 1}}));
  EXPECT_THROW(validate_voltage(d, z4, {{1, 2, 3, 1, 2, 1}}), InputError);
  EXPECT_THROW(validate_voltage(d, z4, {{1, 2, 3}}), InputError);
  EXPECT_THROW(validate_voltage(d, z4, {{1, 2, 4, 3, 2, 1}}), InputError);
  Digraph plain = d;
  plain.inverse.reset();
  EXPECT_THROW(validate_voltage(plain, z4, {{1, 2, 3, 1, 2, 1}}), InputError);
}

TEST(Derive, TrivialVoltageGivesCopies) {
  const FiniteGroup z3 = make_abelian_group({3});
  const Digraph d = symmetric_digraph(fixtures::path_graph(3));
  const DerivedDigraph dd = derive(d, z3, {std::vector<Element>(4, 0)});
  EXPECT_EQ(dd.digraph.n_vertices, 9u);
  for (const auto& a : dd.digraph.arcs) EXPECT_EQ(a.origin / 3, a.terminus / 3);
  const ArcWeights w{{1.0, 2.0, 3.0, 4.0}};
  EXPECT_EQ(derived_weight_matrix(dd, w), kron(ComplexMatrix::identity(3), weight_matrix(d, w)));
}

TEST(Derive, SingleArcOverZ2) {
  Digraph d;
  d.n_vertices = 2;
  d.arcs = {{0, 1}};
  const DerivedDigraph dd = derive(d, make_abelian_group({2}), {{1}});
  ASSERT_EQ(dd.digraph.n_arcs(), 2u);
  EXPECT_EQ(dd.digraph.arcs[0], (Arc{0, 2 + 1}));
  EXPECT_EQ(dd.digraph.arcs[1], (Arc{2 + 0, 1}));
  EXPECT_EQ(dd.project(3), (std::pair<Vertex, Element>{1, 1}));
}

TEST(Derive, InversePairingIsInvolution) {
  std::mt19937_64 rng(79);
  const auto s3 = symmetric_group_s3();
  const Digraph d = symmetric_digraph(Graph(2, {{0, 0}, {0, 1}, {0, 1}, {1, 1}}));
  const DerivedDigraph dd = derive(d, s3.group, random_voltage(d, s3.group, rng));
  const auto& inv = *dd.digraph.inverse;
  for (std::size_t e = 0; e < dd.digraph.n_arcs(); ++e) {
    EXPECT_EQ(inv[inv[e]], e);
    EXPECT_EQ(dd.digraph.arcs[inv[e]].origin, dd.digraph.arcs[e].terminus);
    EXPECT_EQ(dd.digraph.arcs[inv[e]].terminus, dd.digraph.arcs[e].origin);
  }
}

TEST(Bouquet, DerivedIsCompleteWithLoops) {
  const FiniteGroup z5 = make_abelian_group({5});
  VoltageAssignment a;
  for (Element g = 0; g < 5; ++g) a.alpha.push_back(g);
  const DerivedDigraph dd = derive(bouquet(5), z5, a);
  ComplexMatrix adj = derived_weight_matrix(dd, ArcWeights::constant(5, 1.0));
  EXPECT_EQ(adj, ComplexMatrix(5, 5, std::vector<cx>(25, 1.0)));
}

TEST(Bouquet, RealizesGroupMatrix) {
  std::mt19937_64 rng(83);
  for (const auto& shape : std::vector<std::vector<std::size_t>>{{2}, {5}, {2, 3}, {8}}) {
    const FiniteGroup g = make_abelian_group(shape);
    const GroupWeights x{disk(g.order(), rng)};
    const BouquetDedekind b = dedekind_via_bouquet(g, x);
    EXPECT_EQ(b.matrix_gap, 0.0);
    EXPECT_LT(b.max_relative_deviation, 1e-10);
    EXPECT_LT(relative_deviation(b.factor_product, dedekind_det(g, x)), 1e-12);
  }
  const auto s3 = symmetric_group_s3();
  const GroupWeights x{disk(6, rng)};
  const BouquetDedekind b = dedekind_via_bouquet(s3.group, x, &s3.irreps);
  EXPECT_LT(b.max_relative_deviation, 1e-10);
  EXPECT_THROW(dedekind_via_bouquet(s3.group, x), InputError);
}

TEST(Partition, BouquetBlocksAreWeights) {
  const FiniteGroup z4 = make_abelian_group({4});
  const GroupWeights x{{0.1, 0.2, 0.3, 0.4}};
  const auto parts = partition_by_voltage(bouquet(4), z4, {{0, 1, 2, 3}}, ArcWeights{x.x});
  for (Element h = 0; h < 4; ++h) EXPECT_EQ(parts[h], ComplexMatrix(1, 1, {x.x[h]}));
}

TEST(Partition, SumsToWeightMatrixAndAssembles) {
  std::mt19937_64 rng(89);
  const FiniteGroup z4 = make_abelian_group({4});
  const Digraph d = symmetric_digraph(fixtures::complete_graph(3));
  for (int t = 0; t < 10; ++t) {
    const VoltageAssignment a = random_voltage(d, z4, rng);
    const ArcWeights w{disk(6, rng)};
    const auto parts = partition_by_voltage(d, z4, a, w);
    ComplexMatrix sum(3, 3);
    for (const auto& p : parts) sum += p;
    EXPECT_LT(max_abs_diff(sum, weight_matrix(d, w)), 1e-15);
    EXPECT_LT(max_abs_diff(kron_assembly(z4, parts), derived_weight_matrix(derive(d, z4, a), w)), 1e-15);
  }
  const auto trivial = partition_by_voltage(d, z4, {std::vector<Element>(6, 0)}, ArcWeights::constant(6, 1.0));
  EXPECT_EQ(trivial[0], weight_matrix(d, ArcWeights::constant(6, 1.0)));
  for (Element h = 1; h < 4; ++h) EXPECT_EQ(trivial[h], ComplexMatrix(3, 3));
}

TEST(RightRegular, IsHomomorphism) {
  const auto d4 = dihedral_group(4);
  for (Element a = 0; a < 8; ++a)
    for (Element b = 0; b < 8; ++b)
      EXPECT_EQ(right_regular_matrix(d4.group, a) * right_regular_matrix(d4.group, b),
                right_regular_matrix(d4.group, d4.group.multiply(a, b)));
}

TEST(Decomposition, AbelianMatchesDirect) {
  std::mt19937_64 rng(97);
  const FiniteGroup z4 = make_abelian_group({4});
  const Digraph c3 = symmetric_digraph(fixtures::cycle_graph(3));
  for (int t = 0; t < 20; ++t) {
    const VoltageAssignment a = random_voltage(c3, z4, rng);
    const ArcWeights w{disk(6, rng)};
    const cx direct = det(derived_weight_matrix(derive(c3, z4, a), w));
    EXPECT_LT(relative_deviation(decomposed_det_abelian(c3, z4, a, w), direct), 1e-10);
    EXPECT_LT(relative_deviation(decomposed_det_general(c3, z4, a, w, character_irreps(z4)), direct), 1e-10);
  }
}

TEST(Decomposition, TrivialVoltagePower) {
  std::mt19937_64 rng(101);
  const FiniteGroup z3 = make_abelian_group({3});
  const Digraph d = symmetric_digraph(fixtures::complete_graph(4));
  const ArcWeights w{disk(12, rng)};
  EXPECT_LT(relative_deviation(decomposed_det_abelian(d, z3, {std::vector<Element>(12, 0)}, w),
                               ipow(det(weight_matrix(d, w)), 3)),
            1e-10);
}

TEST(Decomposition, TrivialGroup) {
  std::mt19937_64 rng(103);
  const FiniteGroup one = make_abelian_group({});
  const Digraph d = symmetric_digraph(fixtures::complete_graph(3));
  const ArcWeights w{disk(6, rng)};
  EXPECT_LT(relative_deviation(decomposed_det_general(d, one, {std::vector<Element>(6, 0)}, w, character_irreps(one)),
                               det(weight_matrix(d, w))),
            1e-14);
}

TEST(Decomposition, S3OnTwoVertices) {
  std::mt19937_64 rng(107);
  const auto s3 = symmetric_group_s3();
  const Digraph d = symmetric_digraph(Graph(2, {{0, 0}, {0, 1}, {0, 1}, {1, 1}}));
  for (int t = 0; t < 20; ++t) {
    const VoltageAssignment a = random_voltage(d, s3.group, rng);
    const ArcWeights w{disk(8, rng)};
    const ComplexMatrix m = derived_weight_matrix(derive(d, s3.group, a), w);
    ASSERT_EQ(m.rows(), 12u);
    EXPECT_LT(relative_deviation(decomposed_det_general(d, s3.group, a, w, s3.irreps), det(m)), 1e-10);
  }
  EXPECT_THROW(decomposed_det_abelian(d, s3.group, {std::vector<Element>(8, 0)}, ArcWeights::constant(8, 1.0)),
               InputError);
}

}  // namespace
}  // namespace zetakit
