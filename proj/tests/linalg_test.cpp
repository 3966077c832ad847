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

#include <algorithm>
#include <random>

#include "qloop/linalg.hpp"

namespace qloop {
namespace {

SparseMatrix random_matrix(std::mt19937& rng, Index r, Index c, int density = 50) {
  std::uniform_int_distribution<long> v(-5, 5);
  std::uniform_int_distribution<int> pct(0, 99);
  SparseMatrix m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j)
      if (pct(rng) < density) m.set(i, j, Rational(v(rng), 1 + (v(rng) + 5) % 3));
  return m;
}

TEST(SparseMatrix, ZerosAreNeverStored) {
  SparseMatrix m(2, 2);
  m.set(0, 1, Rational(3));
  m.add(0, 1, Rational(-3));
  EXPECT_EQ(m.nonzeros(), 0u);
  EXPECT_TRUE(m.is_zero());
  EXPECT_EQ(m, SparseMatrix(2, 2));
}

TEST(SparseMatrix, KroneckerMixedProduct) {
  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    const auto a = random_matrix(rng, 2, 3), c = random_matrix(rng, 3, 2);
    const auto b = random_matrix(rng, 3, 2), d = random_matrix(rng, 2, 4);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
}

TEST(SparseMatrix, KroneckerOrdersSecondFactorFastest) {
  const SparseMatrix a = SparseMatrix::unit(2, 2, 1, 0);
  const SparseMatrix b = SparseMatrix::unit(3, 3, 0, 2);
  const SparseMatrix k = kron(a, b);
  EXPECT_EQ(k.nonzeros(), 1u);
  EXPECT_EQ(k.get(1 * 3 + 0, 0 * 3 + 2), Rational(1));
}

TEST(SparseMatrix, InverseOfRandomMatrices) {
  std::mt19937 rng(5);
  int invertible = 0;
  for (int t = 0; t < 30; ++t) {
    const auto m = random_matrix(rng, 5, 5, 70);
    const auto inv = m.inverse();
    if (!inv) {
      EXPECT_LT(rank(m), 5u);
      continue;
    }
    ++invertible;
    EXPECT_EQ(m * *inv, SparseMatrix::identity(5));
    EXPECT_EQ(*inv * m, SparseMatrix::identity(5));
  }
  EXPECT_GT(invertible, 5);
  SparseMatrix singular(2, 2);
  singular.set(0, 0, Rational(1));
  singular.set(1, 0, Rational(2));
  EXPECT_FALSE(singular.inverse().has_value());
}

TEST(SparseMatrix, TransposeAndPowers) {
  std::mt19937 rng(3);
  const auto a = random_matrix(rng, 4, 4);
  const auto b = random_matrix(rng, 4, 4);
  EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
  EXPECT_EQ(a.pow(3), a * a * a);
  EXPECT_EQ(a.pow(0), SparseMatrix::identity(4));
  EXPECT_EQ(commutator(a, a), SparseMatrix(4, 4));
}

TEST(Nullspace, RankNullityAndCanonicalBasis) {
  std::mt19937 rng(17);
  for (int t = 0; t < 20; ++t) {
    const auto m = random_matrix(rng, 4, 7, 40);
    std::vector<SparseRow> eqs;
    for (Index i = 0; i < m.rows(); ++i) eqs.push_back(m.row(i));
    const auto basis = nullspace(eqs, 7);
    EXPECT_EQ(basis.size() + rank(m), 7u);
    for (const auto& v : basis) EXPECT_TRUE(is_zero(m.apply(v)));
    Subspace s(7);
    for (const auto& v : basis) EXPECT_TRUE(s.insert(v));
  }
}

TEST(Subspace, InsertionOrderDoesNotMatter) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> v(-3, 3);
  std::vector<Vector> vs;
  for (int t = 0; t < 4; ++t) {
    Vector x(6);
    for (auto& c : x) c = Rational(v(rng));
    vs.push_back(x);
  }
  vs.push_back(Vector(6));
  Subspace a(6), b(6);
  for (const auto& x : vs) a.insert(x);
  std::reverse(vs.begin(), vs.end());
  for (const auto& x : vs) b.insert(x);
  EXPECT_EQ(a, b);
  for (const auto& x : vs) EXPECT_TRUE(a.contains(x));
  EXPECT_TRUE(a.contains(b));
}

}  // namespace
}  // namespace qloop
