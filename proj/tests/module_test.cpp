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

#include "qloop/module.hpp"

namespace qloop {
namespace {

using G = GeneratorSymbol;

long binomial(int n, int k) {
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

TEST(EvaluationModule, DimensionAndHighestWeight) {
  for (int n = 1; n <= 4; ++n) {
    const DynkinDiagram d = DynkinDiagram::type_a(n);
    for (Vertex k = 1; k <= n; ++k) {
      const auto m = evaluation_module(d, k, Rational(1), Rational(2));
      EXPECT_EQ(m->dim(), static_cast<Index>(binomial(n + 1, k)));
      EXPECT_EQ(m->weights()[0], fundamental_weight(d, k));
      const auto hw = highest_weight_vectors(*m);
      ASSERT_EQ(hw.size(), 1u);
      EXPECT_EQ(hw[0], unit_vector(m->dim(), 0));
    }
  }
}

TEST(EvaluationModule, KActsByZetaPowerOfWeight) {
  const DynkinDiagram d = DynkinDiagram::type_a(3);
  const Rational zeta(3, 2);
  const auto m = evaluation_module(d, 2, Rational(1), zeta);
  for (Vertex i = 1; i <= 3; ++i) {
    const SparseMatrix k = m->act(G::kkac(i, 1));
    EXPECT_TRUE(k.is_diagonal());
    for (Index b = 0; b < m->dim(); ++b)
      EXPECT_EQ(k.get(b, b), zeta.pow(pairing(simple_root(d, i), m->weights()[b])));
  }
}

TEST(EvaluationModule, InvalidParametersAreRejected) {
  const DynkinDiagram d = DynkinDiagram::type_a(2);
  for (const Rational z : {Rational(0), Rational(1), Rational(-1)})
    EXPECT_THROW(evaluation_module(d, 1, Rational(1), z), std::invalid_argument);
  EXPECT_THROW(evaluation_module(d, 1, Rational(0), Rational(2)), std::invalid_argument);
  EXPECT_THROW(evaluation_module(d, 3, Rational(1), Rational(2)), std::invalid_argument);
  EXPECT_THROW(evaluation_module(DynkinDiagram::type_d(4), 1, Rational(1), Rational(2)),
               std::invalid_argument);
}

TEST(ModuleRealization, ConstructorValidatesKEigenvalues) {
  ModuleData data = evaluation_module(DynkinDiagram::type_a(1), 1, Rational(1), Rational(2))->data();
  data.kac_moody.at(G::kkac(1, 1)).set(0, 0, Rational(5));
  EXPECT_THROW(ModuleRealization(std::move(data)), std::invalid_argument);
}

TEST(ModuleRealization, ConstructorValidatesWeightShifts) {
  ModuleData data = evaluation_module(DynkinDiagram::type_a(1), 1, Rational(1), Rational(2))->data();
  data.kac_moody.at(G::e(1)).set(1, 1, Rational(1));
  EXPECT_THROW(ModuleRealization(std::move(data)), std::invalid_argument);
}

// Highest weight eigenvalue of k^+_k(z): zeta (z - zeta^{-2} alpha)/(z - alpha) expanded at
// infinity, i.e. zeta, then (zeta - zeta^{-1}) alpha^m.
TEST(HighestWeightSeries, FundamentalModule) {
  const DynkinDiagram d = DynkinDiagram::type_a(3);
  const Rational zeta(2), alpha(3, 5);
  for (Vertex k = 1; k <= 3; ++k) {
    const auto m = evaluation_module(d, k, alpha, zeta);
    for (Vertex j = 1; j <= 3; ++j) {
      const auto s = highest_weight_series(*m, j, 5);
      ASSERT_EQ(s.size(), 6u);
      for (int t = 0; t <= 5; ++t) {
        Rational expect = j != k ? Rational(t == 0 ? 1 : 0)
                                 : (t == 0 ? zeta : (zeta - zeta.inverse()) * alpha.pow(t));
        EXPECT_EQ(s[t], expect) << "k=" << k << " j=" << j << " t=" << t;
      }
    }
  }
}

TEST(HighestWeightSeries, KModesMatchSeries) {
  const auto m = evaluation_module(DynkinDiagram::type_a(2), 1, Rational(2), Rational(3));
  const KSeries ks = k_series(*m, 1, 4);
  const auto s = highest_weight_series(*m, 1, 4);
  for (int t = 0; t <= 4; ++t) EXPECT_EQ(ks.plus[t].get(0, 0), s[t]);
  // k^+_0 k^-_0 = 1
  EXPECT_EQ(ks.plus[0] * ks.minus[0], SparseMatrix::identity(m->dim()));
}

TEST(DrinfeldPolynomials, FundamentalModules) {
  const Rational zeta(3, 2);
  for (int n = 1; n <= 3; ++n) {
    const DynkinDiagram d = DynkinDiagram::type_a(n);
    for (Vertex k = 1; k <= n; ++k) {
      for (const Rational alpha : {Rational(1), Rational(3), Rational(5, 2)}) {
        const auto ps = drinfeld_polynomials(*evaluation_module(d, k, alpha, zeta));
        ASSERT_EQ(ps.size(), static_cast<std::size_t>(n));
        for (Vertex j = 1; j <= n; ++j) {
          const LaurentPoly expect = j == k ? LaurentPoly::var() - LaurentPoly(alpha / zeta) : LaurentPoly(1);
          EXPECT_EQ(ps[j - 1], expect);
        }
      }
    }
  }
}

TEST(DrinfeldPolynomials, MultiplicativeOnTensors) {
  const DynkinDiagram d = DynkinDiagram::type_a(2);
  const Rational zeta(2);
  const auto v = evaluation_module(d, 1, Rational(3), zeta);
  const auto w = evaluation_module(d, 2, Rational(7, 4), zeta);
  const auto u = evaluation_module(d, 1, Rational(-5), zeta);
  const auto pv = drinfeld_polynomials(*v), pw = drinfeld_polynomials(*w), pu = drinfeld_polynomials(*u);
  for (const auto& m : {tensor(v, w), drinfeld_tensor(v, w)}) {
    const auto p = drinfeld_polynomials(*m);
    for (int j = 0; j < 2; ++j) EXPECT_EQ(p[j], pv[j] * pw[j]);
  }
  const auto p3 = drinfeld_polynomials(*tensor(tensor(v, w), u));
  for (int j = 0; j < 2; ++j) EXPECT_EQ(p3[j], pv[j] * pw[j] * pu[j]);
}

TEST(TrivialModule, HasConstantPolynomials) {
  const auto t = trivial_module(DynkinDiagram::type_a(2), Rational(2));
  EXPECT_EQ(t->dim(), 1u);
  for (const auto& p : drinfeld_polynomials(*t)) EXPECT_EQ(p, LaurentPoly(1));
  EXPECT_TRUE(verify_relations(*t, 2).passed());
}

TEST(HighestWeightTensor, IsTheFirstBasisVector) {
  const DynkinDiagram d = DynkinDiagram::type_a(2);
  const auto v = evaluation_module(d, 1, Rational(1), Rational(2));
  const auto w = evaluation_module(d, 2, Rational(1), Rational(2));
  const auto vw = tensor(v, w);
  EXPECT_EQ(highest_weight_tensor(*vw), unit_vector(9, 0));
  for (Vertex i = 1; i <= 2; ++i) EXPECT_TRUE(is_zero(vw->act(G::e(i)).apply(unit_vector(9, 0))));
}

TEST(HOperators, CommuteAndShiftX) {
  // [h_{i,1}, x^+_{i,r}] = [2] x^+_{i,r+1} on an evaluation module
  const Rational zeta(2);
  const auto m = evaluation_module(DynkinDiagram::type_a(1), 1, Rational(3), zeta);
  const HOperators h = h_operators(*m, 1, 2);
  const Rational two = zeta + zeta.inverse();
  for (int r = -2; r <= 2; ++r) {
    EXPECT_EQ(commutator(h.positive[0], m->act(G::x_plus(1, r))), two * m->act(G::x_plus(1, r + 1)));
    EXPECT_EQ(commutator(h.negative[0], m->act(G::x_minus(1, r))), -two * m->act(G::x_minus(1, r - 1)));
  }
  EXPECT_EQ(commutator(h.positive[0], h.negative[1]), SparseMatrix(2, 2));
}

}  // namespace
}  // namespace qloop
