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

#include "qloop/algebra.hpp"
#include "qloop/module.hpp"

namespace qloop {
namespace {

using G = GeneratorSymbol;

std::vector<G> kac_moody_generators(const DynkinDiagram& d) {
  std::vector<G> out;
  for (Vertex i = 0; i <= d.rank(); ++i) {
    out.push_back(G::e(i));
    out.push_back(G::f(i));
    out.push_back(G::kkac(i, 1));
    out.push_back(G::kkac(i, -1));
  }
  return out;
}

TEST(Coproduct, CircMatchesTheChevalleyFormulas) {
  const DynkinDiagram d = DynkinDiagram::type_a(1);
  const auto v = evaluation_module(d, 1, Rational(1), Rational(2));
  const auto w = evaluation_module(d, 1, Rational(3), Rational(2));
  const auto vw = tensor(v, w);
  for (Vertex i = 0; i <= 1; ++i) {
    const auto e1 = v->act(G::e(i)), e2 = w->act(G::e(i));
    const auto f1 = v->act(G::f(i)), f2 = w->act(G::f(i));
    const auto k1 = v->act(G::kkac(i, 1)), k2 = w->act(G::kkac(i, 1));
    const auto k2inv = w->act(G::kkac(i, -1));
    const auto id1 = SparseMatrix::identity(2), id2 = SparseMatrix::identity(2);
    EXPECT_EQ(vw->act(G::e(i)), kron(e1, id2) + kron(k1, e2));
    EXPECT_EQ(vw->act(G::f(i)), kron(f1, k2inv) + kron(id1, f2));
    EXPECT_EQ(vw->act(G::kkac(i, 1)), kron(k1, k2));
  }
}

TEST(Coproduct, IsMultiplicativeOnWords) {
  const DynkinDiagram d = DynkinDiagram::type_a(2);
  const auto v = evaluation_module(d, 1, Rational(1), Rational(2));
  const auto w = evaluation_module(d, 2, Rational(5), Rational(2));
  const auto vw = tensor(v, w);
  const Word word{G::e(1), G::f(0), G::kkac(2, -1), G::e(2)};
  EXPECT_EQ(evaluate(*v, *w, coproduct_circ(word)), evaluate(*vw, word));
  const auto vw_bullet = tensor(v, w, Coproduct::Bullet);
  EXPECT_EQ(evaluate(*v, *w, coproduct_bullet(word)), evaluate(*vw_bullet, word));
}

TEST(Coproduct, Coassociativity) {
  const DynkinDiagram d = DynkinDiagram::type_a(1);
  const auto v = evaluation_module(d, 1, Rational(1), Rational(2));
  const auto u = evaluation_module(d, 1, Rational(7, 3), Rational(2));
  const auto left = tensor(tensor(v, u), v);
  const auto right = tensor(v, tensor(u, v));
  for (const auto& g : kac_moody_generators(d)) EXPECT_EQ(left->act(g), right->act(g)) << g.to_string();
}

TEST(Coproduct, TauIntertwinesCircAndBullet) {
  const DynkinDiagram d = DynkinDiagram::type_a(2);
  const auto v = evaluation_module(d, 1, Rational(1), Rational(3, 2));
  const auto w = evaluation_module(d, 1, Rational(4), Rational(3, 2));
  for (const auto& g : kac_moody_generators(d)) {
    const TensorExpression lhs = tau(coproduct_circ(tau(g)));
    EXPECT_EQ(evaluate(*v, *w, lhs), evaluate(*v, *w, coproduct_bullet(g))) << g.to_string();
  }
}

TEST(Tau, IsAnInvolution) {
  for (const G g : {G::x_plus(1, 3), G::x_minus(2, -1), G::k_plus(1, 2), G::k_minus(1, -2),
                    G::h(2, 3), G::e(0), G::f(1), G::kkac(2, 1), G::k(1, -1)})
    EXPECT_EQ(tau(tau(g)), g);
  EXPECT_EQ(tau(G::e(1)), G::f(1));
  EXPECT_EQ(tau(G::x_plus(1, 2)), G::x_minus(1, -2));
  const Word w{G::e(1), G::f(2)};
  EXPECT_EQ(tau(w), (Word{G::e(2), G::f(1)}));
}

TEST(Tau, ConjugatesScalars) {
  const AlgebraElement a(Scalar::q(), Word{G::e(1)});
  const AlgebraElement t = tau(a);
  ASSERT_EQ(t.terms.size(), 1u);
  EXPECT_EQ(t.terms[0].coeff.generic(), RationalFunction(LaurentPoly::monomial(-1)));
  EXPECT_EQ(t.terms[0].word, Word{G::f(1)});
}

TEST(Coproduct, DrinfeldGeneratorsHaveNoCircCoproduct) {
  EXPECT_THROW(coproduct_circ(G::x_plus(1, 0)), std::invalid_argument);
}

TEST(CompareOperators, ReportsTheFirstDifferingColumn) {
  SparseMatrix a = SparseMatrix::identity(3), b = SparseMatrix::identity(3);
  EXPECT_FALSE(compare_operators(a, b).has_value());
  b.set(2, 1, Rational(5));
  const auto w = compare_operators(a, b);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->column, 1u);
  EXPECT_EQ(w->defect, (Vector{Rational(0), Rational(0), Rational(-5)}));
}

}  // namespace
}  // namespace qloop
