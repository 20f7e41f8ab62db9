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

#ifndef ZETAKIT_CATALOG_HPP
#define ZETAKIT_CATALOG_HPP

#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "zetakit/algebra.hpp"

// Bundled nonabelian groups with their complete irrep sets.

namespace zetakit {

struct GroupWithIrreps {
  std::string name;
  FiniteGroup group;
  std::vector<Irrep> irreps;
};

namespace detail {

inline FiniteGroup table_from(std::size_t n, const std::function<Element(Element, Element)>& mul) {
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a][b] = mul(a, b);
  return FiniteGroup::from_cayley(std::move(t));
}

// Builds an irrep from generator images, with element index a + k*b
// standing for x^a y^b.
inline Irrep irrep_from_generators(std::size_t k, const ComplexMatrix& x, const ComplexMatrix& y) {
  Irrep r;
  r.degree = x.rows();
  r.matrices.resize(2 * k);
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t a = 0; a < k; ++a)
      r.matrices[a + k * b] = matrix_power(x, static_cast<unsigned>(a)) * matrix_power(y, static_cast<unsigned>(b));
  return r;
}

inline ComplexMatrix scalar1(cx v) { return ComplexMatrix(1, 1, {v}); }

}  // namespace detail

/// Dihedral group of order 2k; element a + k*b is r^a s^b.
inline GroupWithIrreps dihedral_group(std::size_t k) {
  require(k >= 3, "dihedral group needs k >= 3");
  auto mul = [k](Element p, Element q) {
    const std::size_t a = p % k, b = p / k, c = q % k, d = q / k;
    const std::size_t rot = (b == 0) ? (a + c) % k : (a + k - c) % k;
    return rot + k * ((b + d) % 2);
  };
  GroupWithIrreps out{"D" + std::to_string(k), detail::table_from(2 * k, mul), {}};
  const std::vector<cx> r_signs = (k % 2 == 0) ? std::vector<cx>{1.0, -1.0} : std::vector<cx>{1.0};
  for (cx er : r_signs)
    for (cx es : {cx{1.0}, cx{-1.0}})
      out.irreps.push_back(detail::irrep_from_generators(k, detail::scalar1(er), detail::scalar1(es)));
  const ComplexMatrix refl(2, 2, {1.0, 0.0, 0.0, -1.0});
  for (std::size_t j = 1; 2 * j < k; ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k);
    const ComplexMatrix rot(2, 2, {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)});
    out.irreps.push_back(detail::irrep_from_generators(k, rot, refl));
  }
  for (const auto& r : out.irreps) validate_irrep(out.group, r);
  require_complete_irreps(out.group, out.irreps);
  return out;
}

inline GroupWithIrreps symmetric_group_s3() {
  auto g = dihedral_group(3);
  g.name = "S3";
  return g;
}

/// Quaternion group; element a + 4*b is i^a j^b.
inline GroupWithIrreps quaternion_group() {
  auto mul = [](Element p, Element q) {
    const std::size_t a = p % 4, b = p / 4, c = q % 4, d = q / 4;
    std::size_t e = (b == 0) ? (a + c) : (a + 4 - c);
    if (b == 1 && d == 1) e += 2;
    return e % 4 + 4 * ((b + d) % 2);
  };
  GroupWithIrreps out{"Q8", detail::table_from(8, mul), {}};
  for (cx ei : {cx{1.0}, cx{-1.0}})
    for (cx ej : {cx{1.0}, cx{-1.0}})
      out.irreps.push_back(detail::irrep_from_generators(4, detail::scalar1(ei), detail::scalar1(ej)));
  const cx i{0.0, 1.0};
  out.irreps.push_back(detail::irrep_from_generators(4, ComplexMatrix(2, 2, {i, 0.0, 0.0, -i}),
                                                     ComplexMatrix(2, 2, {0.0, -1.0, 1.0, 0.0})));
  for (const auto& r : out.irreps) validate_irrep(out.group, r);
  require_complete_irreps(out.group, out.irreps);
  return out;
}

/// Looks up "S3", "D4" or "Q8".
inline GroupWithIrreps catalog_group(const std::string& name) {
  if (name == "S3") return symmetric_group_s3();
  if (name == "D4") return dihedral_group(4);
  if (name == "Q8") return quaternion_group();
  throw InputError("unknown catalog group '" + name + "' (known: S3, D4, Q8)");
}

}  // namespace zetakit

#endif  // ZETAKIT_CATALOG_HPP
