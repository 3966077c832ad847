/*
   Copyright 2026 The qloop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "qloop/structure.hpp"

namespace qloop {
namespace {

using G = GeneratorSymbol;

ModulePtr a1_pair(int s1, int s2, const Rational& zeta = Rational(2)) {
  return standard_module(DynkinDiagram::type_a(1), {{1, Rational(1), s1}, {1, Rational(1), s2}}, zeta);
}

TEST(Cyclicity, CriticalRatioBreaksOneOrder) {
  const auto desc = a1_pair(2, 0), asc = a1_pair(0, 2);
  const auto cd = cyclicity(*desc, highest_weight_tensor(*desc));
  const auto ca = cyclicity(*asc, highest_weight_tensor(*asc));
  EXPECT_NE(cd.cyclic, ca.cyclic);
  EXPECT_EQ(std::max(cd.submodule_dim, ca.submodule_dim), 4u);
  EXPECT_EQ(std::min(cd.submodule_dim, ca.submodule_dim), 3u);
  const bool c_desc = is_cocyclic(desc, highest_weight_tensor(*desc));
  const bool c_asc = is_cocyclic(asc, highest_weight_tensor(*asc));
  // the non-cyclic order is cocyclic, and cocyclicity is lost in the cyclic one
  EXPECT_EQ(c_desc, !cd.cyclic);
  EXPECT_EQ(c_asc, !ca.cyclic);
}

TEST(Cyclicity, GenericRatioIsIrreducible) {
  const DynkinDiagram d = DynkinDiagram::type_a(1);
  for (const auto& [a, b] : {std::pair{Rational(3), Rational(1)}, std::pair{Rational(1), Rational(3)},
                             std::pair{Rational(5, 2), Rational(1)}}) {
    const auto m = standard_module(d, {{1, a, 0}, {1, b, 0}}, Rational(2));
    const Vector v = highest_weight_tensor(*m);
    EXPECT_TRUE(is_cyclic(*m, v));
    EXPECT_TRUE(is_cocyclic(m, v));
  }
}

TEST(Cyclicity, SubmoduleIsStable) {
  const auto m = a1_pair(0, 2);
  const Subspace s = generated_submodule(*m, highest_weight_tensor(*m));
  for (const auto& row : s.basis())
    for (const G g : {G::e(0), G::e(1), G::f(0), G::f(1), G::kkac(0, 1), G::kkac(1, -1)})
      EXPECT_TRUE(s.contains(m->act(g).apply(to_dense(row, m->dim()))));
}

TEST(Cyclicity, ZeroVectorIsRejected) {
  const auto m = a1_pair(0, 1);
  EXPECT_THROW(is_cyclic(*m, Vector(4)), std::invalid_argument);
  EXPECT_EQ(generated_submodule(*m, Vector(4)).dim(), 0u);
}

TEST(Cocyclicity, NeedsOneDimensionalWeightSpace) {
  const auto m = a1_pair(0, 1);
  // weight zero is two-dimensional in V (x) V
  EXPECT_THROW(is_cocyclic(m, unit_vector(4, 1)), std::invalid_argument);
}

TEST(DualModule, SatisfiesRelationsAndIsInvolutive) {
  const DynkinDiagram d = DynkinDiagram::type_a(2);
  const auto v = evaluation_module(d, 1, Rational(3), Rational(2));
  const auto dv = dual_module(v);
  EXPECT_EQ(dv->zeta(), Rational(1, 2));
  EXPECT_TRUE(verify_relations(*dv, 2).passed());
  EXPECT_TRUE(verify_kac_moody_relations(*dv).passed());
  const auto ddv = dual_module(dv);
  for (Vertex i = 0; i <= 2; ++i)
    for (const G g : {G::e(i), G::f(i), G::kkac(i, 1)}) EXPECT_EQ(ddv->act(g), v->act(g));
  const auto vw = tensor(v, evaluation_module(d, 2, Rational(1), Rational(2)));
  EXPECT_TRUE(verify_kac_moody_relations(*dual_module(vw)).passed());
}

TEST(StandardModule, LeftFoldOfFactors) {
  const DynkinDiagram d = DynkinDiagram::type_a(2);
  const auto m = standard_module(d, {{1, Rational(1), 2}, {2, Rational(1), 1}, {1, Rational(1), 0}}, Rational(2));
  EXPECT_EQ(m->dim(), 27u);
  const auto v1 = evaluation_module(d, 1, Rational(4), Rational(2));
  const auto v2 = evaluation_module(d, 2, Rational(2), Rational(2));
  const auto v3 = evaluation_module(d, 1, Rational(1), Rational(2));
  const auto ref = tensor(tensor(v1, v2), v3);
  EXPECT_EQ(m->act(G::e(0)), ref->act(G::e(0)));
  EXPECT_EQ(m->act(G::f(2)), ref->act(G::f(2)));
}

TEST(Triangular, GenericA1Pairs) {
  const DynkinDiagram d = DynkinDiagram::type_a(1);
  const auto v = evaluation_module(d, 1, Rational(1), Rational(2));
  const auto w = evaluation_module(d, 1, Rational(3), Rational(2));
  for (int r = -1; r <= 2; ++r) {
    const TriangularReport t = triangular_coproduct_report(v, w, 1, r, 3);
    EXPECT_TRUE(t.holds()) << "r=" << r << " " << t.detail;
  }
  EXPECT_THROW(triangular_coproduct_report(v, w, 1, 4, 3), InsufficientData);
}

}  // namespace
}  // namespace qloop
