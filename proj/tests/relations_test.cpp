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

#include <memory>

#include "qloop/algebra.hpp"
#include "qloop/module.hpp"

namespace qloop {
namespace {

using G = GeneratorSymbol;

struct Case {
  int rank;
  Vertex node;
  Rational alpha;
  Rational zeta;
};

void PrintTo(const Case& c, std::ostream* os) {
  *os << "A" << c.rank << " node " << c.node << " alpha " << c.alpha << " zeta " << c.zeta;
}

class EvaluationRelations : public ::testing::TestWithParam<Case> {};

TEST_P(EvaluationRelations, AllFamiliesPass) {
  const auto& c = GetParam();
  const auto m = evaluation_module(DynkinDiagram::type_a(c.rank), c.node, c.alpha, c.zeta);
  const RelationReport r = verify_relations(*m, 2);
  EXPECT_TRUE(r.passed()) << (r.first_failure() ? r.first_failure()->relation_id : "");
  EXPECT_EQ(r.count(CheckStatus::InsufficientData), 0u);
  std::vector<std::string> ids{"k_commute", "k_inverse", "k_x_conjugation", "k_x_series",
                               "x_commutator", "x_x_series"};
  // Serre relations need two distinct adjacent vertices
  if (c.rank > 1) ids.insert(ids.begin() + 4, "serre");
  EXPECT_EQ(r.relation_ids(), ids);
  EXPECT_TRUE(verify_kac_moody_relations(*m).passed());
}

INSTANTIATE_TEST_SUITE_P(TypeA, EvaluationRelations,
                         ::testing::Values(Case{1, 1, Rational(1), Rational(2)},
                                           Case{2, 2, Rational(3), Rational(3, 2)},
                                           Case{3, 2, Rational(5, 2), Rational(2)},
                                           Case{3, 3, Rational(1), Rational(-3)}),
                         [](const auto& info) {
                           return "A" + std::to_string(info.param.rank) + "_node" +
                                  std::to_string(info.param.node) + "_" + std::to_string(info.index);
                         });

TEST(Relations, DrinfeldTensorSatisfiesAllFamilies) {
  const DynkinDiagram d = DynkinDiagram::type_a(2);
  const auto m = drinfeld_tensor(evaluation_module(d, 1, Rational(1), Rational(2)),
                                 evaluation_module(d, 2, Rational(7), Rational(2)));
  EXPECT_TRUE(verify_relations(*m, 2).passed());
  EXPECT_TRUE(verify_kac_moody_relations(*m).passed());
}

TEST(Relations, CircTensorHasOnlyKacMoodyData) {
  const DynkinDiagram d = DynkinDiagram::type_a(1);
  const auto v = evaluation_module(d, 1, Rational(1), Rational(2));
  const auto vv = tensor(v, v);
  EXPECT_TRUE(verify_kac_moody_relations(*vv).passed());
  const RelationReport r = verify_relations(*vv, 1);
  EXPECT_EQ(r.count(CheckStatus::Fail), 0u);
  EXPECT_GT(r.count(CheckStatus::InsufficientData), 0u);
  EXPECT_THROW(vv->act(G::x_plus(1, 1)), InsufficientData);
}

TEST(Relations, CorruptedKacMoodyActionYieldsWitness) {
  const DynkinDiagram d = DynkinDiagram::type_a(2);
  ModuleData data = evaluation_module(d, 1, Rational(1), Rational(2))->data();
  SparseMatrix& e1 = data.kac_moody.at(G::e(1));
  ASSERT_FALSE(e1.is_zero());
  const auto& [col, val] = *e1.row(0).begin();
  e1.set(0, col, val * Rational(3));
  ModuleRealization bad(std::move(data));
  const RelationReport r = verify_kac_moody_relations(bad);
  ASSERT_FALSE(r.passed());
  const RelationCheck* f = r.first_failure();
  ASSERT_NE(f, nullptr);
  ASSERT_TRUE(f->witness.has_value());
  EXPECT_FALSE(is_zero(f->witness->defect));
  EXPECT_LT(f->witness->column, bad.dim());
}

TEST(Relations, CorruptedDrinfeldModeYieldsWitness) {
  const DynkinDiagram d = DynkinDiagram::type_a(2);
  ModuleData data = evaluation_module(d, 2, Rational(3), Rational(3, 2))->data();
  auto& terms = (*data.drinfeld)[1].x_minus;
  ASSERT_FALSE(terms.empty());
  terms.front().coef *= Rational(2);
  ModuleRealization bad(std::move(data));
  const RelationReport r = verify_relations(bad, 2);
  EXPECT_GT(r.count("x_commutator", CheckStatus::Fail), 0u);
  const RelationCheck* f = r.first_failure();
  ASSERT_NE(f, nullptr);
  ASSERT_TRUE(f->witness.has_value());
  EXPECT_FALSE(is_zero(f->witness->defect));
}

TEST(Relations, ReportIsSortedAndDeterministic) {
  const auto m = evaluation_module(DynkinDiagram::type_a(2), 1, Rational(1), Rational(2));
  const RelationReport a = verify_relations(*m, 1), b = verify_relations(*m, 1);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t t = 0; t < a.checks.size(); ++t) {
    EXPECT_EQ(a.checks[t].relation_id, b.checks[t].relation_id);
    EXPECT_EQ(a.checks[t].modes, b.checks[t].modes);
    if (t > 0) EXPECT_LE(a.checks[t - 1].relation_id, a.checks[t].relation_id);
  }
}

}  // namespace
}  // namespace qloop
