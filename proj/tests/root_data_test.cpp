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

#include "qloop/root_data.hpp"
#include "qloop/scalar.hpp"

namespace qloop {
namespace {

// Determinant by exact elimination, independent of the library's minor test.
Rational determinant(const CartanMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

struct Expected {
  std::string type;
  int rank;
  long det;
  std::size_t positive_roots;
};

void PrintTo(const Expected& e, std::ostream* os) { *os << e.type << e.rank; }

class FiniteTypes : public ::testing::TestWithParam<Expected> {};

TEST_P(FiniteTypes, DeterminantAndRootCount) {
  const auto& e = GetParam();
  const DynkinDiagram d = DynkinDiagram::from_type(e.type, e.rank);
  const CartanMatrix a = cartan_matrix(d);
  EXPECT_EQ(determinant(a), Rational(e.det));
  EXPECT_EQ(positive_roots(d).size(), e.positive_roots);
  for (int i = 1; i <= d.rank(); ++i) {
    EXPECT_EQ(a[i - 1][i - 1], 2);
    for (int j = 1; j <= d.rank(); ++j) EXPECT_EQ(a[i - 1][j - 1], a[j - 1][i - 1]);
  }
}

INSTANTIATE_TEST_SUITE_P(ADE, FiniteTypes,
                         ::testing::Values(Expected{"A", 1, 2, 1}, Expected{"A", 2, 3, 3},
                                           Expected{"A", 3, 4, 6}, Expected{"A", 5, 6, 15},
                                           Expected{"D", 4, 4, 12}, Expected{"D", 5, 4, 20},
                                           Expected{"E", 6, 3, 36}, Expected{"E", 7, 2, 63},
                                           Expected{"E", 8, 1, 120}),
                         [](const auto& info) { return info.param.type + std::to_string(info.param.rank); });

TEST(CartanMatrix, D4HasTrivalentCentre) {
  const CartanMatrix a = cartan_matrix(DynkinDiagram::type_d(4));
  int centre = -1;
  for (int i = 0; i < 4; ++i) {
    int degree = 0;
    for (int j = 0; j < 4; ++j) degree += (i != j && a[i][j] == -1);
    if (degree == 3) centre = i;
  }
  ASSERT_GE(centre, 0);
  const RootVector theta = highest_root(DynkinDiagram::type_d(4));
  EXPECT_EQ(theta.coords[centre], 2);
  EXPECT_EQ(theta.height(), 5);
}

TEST(HighestRoot, TypeAIsTheSumOfSimpleRoots) {
  for (int n = 1; n <= 4; ++n) {
    const DynkinDiagram d = DynkinDiagram::type_a(n);
    EXPECT_EQ(highest_root(d).coords, std::vector<int>(n, 1));
    // theta as a weight is omega_1 + omega_n (2 omega_1 for n = 1)
    Weight expect{std::vector<int>(n, 0)};
    expect.coords[0] += 1;
    expect.coords[n - 1] += 1;
    EXPECT_EQ(root_as_weight(d, highest_root(d)), expect);
  }
}

TEST(Diagram, NonFiniteGraphsAreRejected) {
  // affine D4: a star with four leaves
  EXPECT_THROW(DynkinDiagram(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}}), std::invalid_argument);
  // a triangle
  EXPECT_THROW(DynkinDiagram(3, {{1, 2}, {2, 3}, {3, 1}}), std::invalid_argument);
  // disconnected
  EXPECT_THROW(DynkinDiagram(2, {}), std::invalid_argument);
  EXPECT_THROW(DynkinDiagram(2, {{1, 1}}), std::invalid_argument);
}

TEST(Weights, PairingAndReflections) {
  const DynkinDiagram d = DynkinDiagram::type_a(3);
  const Weight rho = weyl_rho(d);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(pairing(simple_root(d, i), rho), 1);
    EXPECT_EQ(pairing(simple_root(d, i), fundamental_weight(d, i)), 1);
    const Weight w = fundamental_weight(d, i);
    EXPECT_EQ(reflect(d, i, w), w - root_as_weight(d, simple_root(d, i)));
    const Weight mu{{2, -1, 3}};
    EXPECT_EQ(reflect(d, i, reflect(d, i, mu)), mu);
  }
  EXPECT_TRUE(rho.dominant());
  EXPECT_FALSE((-rho).dominant());
}

}  // namespace
}  // namespace qloop
