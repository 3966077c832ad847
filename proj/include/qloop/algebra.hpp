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

#ifndef QLOOP_ALGEBRA_HPP
#define QLOOP_ALGEBRA_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qloop/linalg.hpp"
#include "qloop/root_data.hpp"
#include "qloop/scalar.hpp"

namespace qloop {

class ModuleRealization;

enum class GenKind {
  XPlus,       // x^+_{i,r}
  XMinus,      // x^-_{i,r}
  KPlusMode,   // k^+_{i,r}, r >= 0
  KMinusMode,  // k^-_{i,r}, r <= 0
  K,           // k_i^{+1} or k_i^{-1}
  H,           // h_{i,s}, s != 0
  E,           // Kac-Moody e_i, i in I or 0
  F,           // Kac-Moody f_i
  KKac,        // Kac-Moody k_i^{+-1}, i in I or 0
};

/// One generator of the quantum loop algebra. `index` is the mode for
/// Drinfeld generators, the exponent sign (+1/-1) for K and KKac, and 0 for E/F.
struct GeneratorSymbol {
  GenKind kind;
  Vertex node;
  int index;

  static GeneratorSymbol x_plus(Vertex i, int r) { return {GenKind::XPlus, i, r}; }
  static GeneratorSymbol x_minus(Vertex i, int r) { return {GenKind::XMinus, i, r}; }
  static GeneratorSymbol k_plus(Vertex i, int r);
  static GeneratorSymbol k_minus(Vertex i, int r);
  static GeneratorSymbol k(Vertex i, int sign);
  static GeneratorSymbol h(Vertex i, int s);
  static GeneratorSymbol e(Vertex i) { return {GenKind::E, i, 0}; }
  static GeneratorSymbol f(Vertex i) { return {GenKind::F, i, 0}; }
  static GeneratorSymbol kkac(Vertex i, int sign);

  [[nodiscard]] bool is_kac_moody() const {
    return kind == GenKind::E || kind == GenKind::F || kind == GenKind::KKac;
  }
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const GeneratorSymbol&, const GeneratorSymbol&) = default;
};

using Word = std::vector<GeneratorSymbol>;
std::string to_string(const Word& w);

/// Finite linear combination of words. No normal form: equality of elements is
/// only ever decided through their action on modules.
struct AlgebraElement {
  struct Term {
    Scalar coeff;
    Word word;
  };
  std::vector<Term> terms;

  AlgebraElement() = default;
  AlgebraElement(const GeneratorSymbol& g);  // NOLINT(google-explicit-constructor)
  AlgebraElement(Scalar c, Word w);

  /// The unit element (empty word).
  static AlgebraElement one();

  AlgebraElement& operator+=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
};

/// Finite linear combination of pure tensors word (x) word.
struct TensorExpression {
  struct Term {
    Scalar coeff;
    Word left;
    Word right;
  };
  std::vector<Term> terms;

  TensorExpression& operator+=(const TensorExpression& o);
  friend TensorExpression operator+(TensorExpression a, const TensorExpression& b) { return a += b; }
  friend TensorExpression operator*(const TensorExpression& a, const TensorExpression& b);
  friend TensorExpression operator*(const Scalar& c, const TensorExpression& a);
};

/// Delta°(e_i) = e_i (x) 1 + k_i (x) e_i, Delta°(f_i) = f_i (x) k_i^{-1} + 1 (x) f_i,
/// Delta°(k_i) = k_i (x) k_i. Throws std::invalid_argument on Drinfeld generators.
TensorExpression coproduct_circ(const GeneratorSymbol& g);
TensorExpression coproduct_circ(const Word& w);
TensorExpression coproduct_circ(const AlgebraElement& a);
/// The opposite coproduct: factor-wise flip of Delta°.
TensorExpression coproduct_bullet(const GeneratorSymbol& g);
TensorExpression coproduct_bullet(const Word& w);
TensorExpression coproduct_bullet(const AlgebraElement& a);

/// The anti-automorphism: e_i <-> f_i, k_i -> k_i^{-1}, x^-_{i,-k} <-> x^+_{i,k},
/// k^{+-}_{i,+-r} -> k^{-+}_{i,-+r}, h_{i,s} -> h_{i,-s}, q -> q^{-1}.
GeneratorSymbol tau(const GeneratorSymbol& g);
Word tau(const Word& w);
AlgebraElement tau(const AlgebraElement& a);
/// tau (x) tau applied factor-wise (no flip).
TensorExpression tau(const TensorExpression& t);

/// Operator of a word / element / tensor expression on concrete modules.
SparseMatrix evaluate(const ModuleRealization& m, const Word& w);
SparseMatrix evaluate(const ModuleRealization& m, const AlgebraElement& a);
SparseMatrix evaluate(const ModuleRealization& m1, const ModuleRealization& m2,
                      const TensorExpression& t);

// ------------------------------------------------------- relation checking

enum class CheckStatus { Pass, Fail, InsufficientData };
std::string to_string(CheckStatus s);

/// A column where the two sides differ, with the difference of the two sides
/// applied to that basis vector.
struct Witness {
  Index column;
  Vector defect;
};

struct RelationCheck {
  std::string relation_id;
  std::vector<int> indices;  // vertices (and signs where relevant)
  std::vector<int> modes;
  CheckStatus status = CheckStatus::Pass;
  std::optional<Witness> witness;
  std::string detail;
};

struct RelationReport {
  std::vector<RelationCheck> checks;  // sorted by relation id, then indices, then modes

  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::size_t count(CheckStatus s) const;
  [[nodiscard]] std::size_t count(const std::string& relation_id, CheckStatus s) const;
  [[nodiscard]] std::vector<std::string> relation_ids() const;
  [[nodiscard]] const RelationCheck* first_failure() const;
};

/// Relation families of the Drinfeld presentation, by id:
///   k_inverse, k_commute, k_x_conjugation, k_x_series, x_x_series,
///   x_commutator, serre.
/// Generating-series relations are compared coefficient-wise in z^A w^B for
/// |A|, |B| <= mode_bound; mode relations use modes of absolute value <= mode_bound.
RelationReport verify_relations(const ModuleRealization& m, int mode_bound);

/// Chevalley relations of the Kac-Moody generators over I and the affine
/// node 0 (affine Cartan matrix, q-Serre), plus k_0 k_theta = 1.
RelationReport verify_kac_moody_relations(const ModuleRealization& m);

/// Compares two operators; returns a witness when they differ.
std::optional<Witness> compare_operators(const SparseMatrix& lhs, const SparseMatrix& rhs);

}  // namespace qloop

#endif  // QLOOP_ALGEBRA_HPP
