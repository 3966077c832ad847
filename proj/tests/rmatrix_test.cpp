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

#include "qloop/rmatrix.hpp"
#include "qloop/structure.hpp"

namespace qloop {
namespace {

using G = GeneratorSymbol;

ModulePtr a1(const Rational& alpha) {
  return evaluation_module(DynkinDiagram::type_a(1), 1, alpha, Rational(2));
}

LaurentPoly q_minus_qinv() { return LaurentPoly::monomial(1) - LaurentPoly::monomial(-1); }

TEST(PartialRCoefficients, LowOrders) {
  EXPECT_EQ(partial_r_coefficient(0), LaurentPoly(1));
  EXPECT_EQ(partial_r_coefficient(1), -q_minus_qinv());
  EXPECT_EQ(partial_r_inverse_coefficient(0), LaurentPoly(1));
  EXPECT_EQ(partial_r_inverse_coefficient(1), q_minus_qinv());
  // l = 2: q^{-1} (q - q^{-1})^2 [2] and q (q - q^{-1})^2 [2]
  const LaurentPoly sq = q_minus_qinv() * q_minus_qinv() * qint(2);
  EXPECT_EQ(partial_r_coefficient(2), LaurentPoly::monomial(-1) * sq);
  EXPECT_EQ(partial_r_inverse_coefficient(2), LaurentPoly::monomial(1) * sq);
}

TEST(PartialR, InverseFormulaGivesIdentity) {
  const DynkinDiagram d1 = DynkinDiagram::type_a(1), d2 = DynkinDiagram::type_a(2);
  const auto v = evaluation_module(d1, 1, Rational(1), Rational(2));
  const auto w = evaluation_module(d1, 1, Rational(5), Rational(2));
  EXPECT_EQ(partial_R_i(*v, *w, 1) * partial_R_i_inverse(*v, *w, 1), SparseMatrix::identity(4));
  const auto x = evaluation_module(d2, 1, Rational(1), Rational(3, 2));
  const auto y = evaluation_module(d2, 2, Rational(2), Rational(3, 2));
  for (Vertex i = 1; i <= 2; ++i) {
    EXPECT_EQ(partial_R_i(*x, *y, i) * partial_R_i_inverse(*x, *y, i), SparseMatrix::identity(9));
    EXPECT_EQ(partial_R_i_inverse(*x, *y, i) * partial_R_i(*x, *y, i), SparseMatrix::identity(9));
    EXPECT_FALSE(partial_R_conjugation_failure(*x, *y, i).has_value());
  }
  EXPECT_TRUE(braid_product_law_check(*x, *y, 1, 2));
}

TEST(BraidT, ConjugationImages) {
  const DynkinDiagram d = DynkinDiagram::type_a(2);
  const auto m = tensor(evaluation_module(d, 1, Rational(1), Rational(2)),
                        evaluation_module(d, 1, Rational(3), Rational(2)));
  for (Vertex i = 1; i <= 2; ++i) {
    const SparseMatrix t = braid_T_si(*m, i);
    const SparseMatrix tinv = *t.inverse();
    EXPECT_EQ(t * m->act(G::e(i)) * tinv, -1L * (m->act(G::f(i)) * m->act(G::kkac(i, 1))));
    EXPECT_EQ(t * m->act(G::f(i)) * tinv, -1L * (m->act(G::kkac(i, -1)) * m->act(G::e(i))));
    for (const G g : {G::e(i), G::f(i), G::kkac(3 - i, 1)})
      EXPECT_EQ(t * m->act(g) * tinv, evaluate(*m, braid_image(d, i, g)));
  }
}

TEST(Flip, SwapsKroneckerFactors) {
  SparseMatrix a(2, 2), b(3, 3);
  a.set(0, 1, Rational(2));
  a.set(1, 1, Rational(-1));
  b.set(2, 0, Rational(5));
  b.set(1, 1, Rational(1, 3));
  EXPECT_EQ(flip_operator(2, 3) * kron(a, b) * flip_operator(3, 2), kron(b, a));
  EXPECT_EQ(flip_operator(3, 3) * flip_operator(3, 3), SparseMatrix::identity(9));
}

TEST(Intertwiner, GenericPairIsUniqueAndInvertible) {
  const auto v = a1(Rational(1)), w = a1(Rational(3));
  const IntertwinerResult r = solve_intertwiner(v, w);
  EXPECT_EQ(r.solution_space_dim, 1u);
  EXPECT_TRUE(r.normalized);
  EXPECT_TRUE(r.invertible);
  const auto vw = tensor(v, w), wv = tensor(w, v);
  for (Vertex i = 0; i <= 1; ++i)
    for (const G g : {G::e(i), G::f(i), G::kkac(i, 1)})
      EXPECT_EQ(r.matrix * vw->act(g), wv->act(g) * r.matrix) << g.to_string();
  EXPECT_EQ(r.matrix.apply(unit_vector(4, 0)), unit_vector(4, 0));
}

TEST(Intertwiner, CriticalPairIsSingular) {
  const IntertwinerResult r = solve_intertwiner(a1(Rational(4)), a1(Rational(1)));
  EXPECT_EQ(r.solution_space_dim, 1u);
  EXPECT_FALSE(r.invertible);
  EXPECT_THROW(unipotence_report(*a1(Rational(4)), *a1(Rational(1)), r), std::invalid_argument);
}

TEST(Intertwiner, DrinfeldTwistIsUnipotent) {
  const auto v = a1(Rational(1)), w = a1(Rational(3));
  const IntertwinerResult r = solve_drinfeld_twist(v, w);
  EXPECT_EQ(r.solution_space_dim, 1u);
  ASSERT_TRUE(r.invertible);
  EXPECT_TRUE(unipotence_check(*v, *w, r));
}

TEST(Intertwiner, BraidingPreservesWeight) {
  const auto v = a1(Rational(1)), w = a1(Rational(3));
  const UnipotenceReport u = unipotence_report(*v, *w, solve_intertwiner(v, w));
  EXPECT_TRUE(u.weight_preserving);
}

TEST(YangBaxter, A1GeometricTriple) {
  EXPECT_TRUE(yang_baxter_check(a1(Rational(1)), a1(Rational(3)), a1(Rational(9))));
}

TEST(YangBaxter, A2Triple) {
  const DynkinDiagram d = DynkinDiagram::type_a(2);
  const auto a = evaluation_module(d, 1, Rational(1), Rational(2));
  const auto b = evaluation_module(d, 1, Rational(3), Rational(2));
  const auto c = evaluation_module(d, 2, Rational(7), Rational(2));
  const YbeReport y = yang_baxter_report(a, b, c);
  EXPECT_TRUE(y.holds) << y.reason;
  EXPECT_FALSE(y.abstained);
}

TEST(YangBaxter, HoldsWithASingularFactor) {
  // (4, 1) is a critical pair: R12 is unique but not invertible
  const YbeReport y = yang_baxter_report(a1(Rational(4)), a1(Rational(1)), a1(Rational(7)));
  EXPECT_FALSE(y.abstained);
  EXPECT_TRUE(y.holds);
}

}  // namespace
}  // namespace qloop
