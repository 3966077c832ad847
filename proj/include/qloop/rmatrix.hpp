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

#ifndef QLOOP_RMATRIX_HPP
#define QLOOP_RMATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "qloop/module.hpp"

namespace qloop {

enum class IntertwinerKind {
  Braiding,  // M1 (x) M2 -> M2 (x) M1, both with Delta°
  Twist,     // Delta° tensor -> Drinfeld-coproduct tensor on the same space
};

struct IntertwinerResult {
  SparseMatrix matrix;
  Index solution_space_dim = 0;
  bool normalized = false;
  bool invertible = false;
  IntertwinerKind kind = IntertwinerKind::Braiding;
};

/// All maps R : src -> dst with R act_src(g) = act_dst(g) R for the Kac-Moody
/// generators, restricted to weight-preserving maps (forced by the k's).
std::vector<SparseMatrix> module_maps(const ModuleRealization& src, const ModuleRealization& dst);

/// The intertwiner M1 (x) M2 -> M2 (x) M1 for the Delta° structures; when the
/// solution is unique up to scalar it is normalised to send the highest weight
/// tensor to the flipped highest weight tensor.
IntertwinerResult solve_intertwiner(const ModulePtr& m1, const ModulePtr& m2);
/// The map from the Delta° tensor to the Drinfeld-coproduct tensor of the same
/// factors, normalised to fix the highest weight tensor.
IntertwinerResult solve_drinfeld_twist(const ModulePtr& m1, const ModulePtr& m2);

/// Permutation M1 (x) M2 -> M2 (x) M1.
SparseMatrix flip_operator(Index n1, Index n2);

struct YbeReport {
  bool holds = false;
  bool abstained = false;
  std::string reason;
  /// Entry of largest absolute defect when the two sides differ.
  std::optional<std::pair<Index, Index>> witness;
  Rational defect;
};
/// (R23 (x) 1)(1 (x) R13)(R12 (x) 1) = (1 (x) R12)(R13 (x) 1)(1 (x) R23) on M1 (x) M2 (x) M3.
YbeReport yang_baxter_report(const ModulePtr& m1, const ModulePtr& m2, const ModulePtr& m3);
bool yang_baxter_check(const ModulePtr& m1, const ModulePtr& m2, const ModulePtr& m3);

/// Braid symmetry T_i on an integrable module:
///   T_i v = sum_{-a+b-c = m} (-1)^b q^{b-ac} e_i^{(a)} f_i^{(b)} e_i^{(c)} v,  m = (alpha_i|wt v),
/// realising e_i -> -f_i k_i, f_i -> -k_i^{-1} e_i, k_j -> k_j k_i^{-a_ij}.
/// The conjugation identities are checked; a failure throws std::logic_error.
SparseMatrix braid_T_si(const ModuleRealization& m, Vertex i);
/// The algebra element T_{s_i}(g) and T_{s_i}^{-1}(g) for g among e_i, f_i, k_j^{+-1}.
AlgebraElement braid_image(const DynkinDiagram& d, Vertex i, const GeneratorSymbol& g);
AlgebraElement braid_inverse_image(const DynkinDiagram& d, Vertex i, const GeneratorSymbol& g);

/// c_l = (-1)^l q^{-l(l-1)/2} (q - q^{-1})^l [l]! and its partner
/// c-bar_l = q^{l(l-1)/2} (q - q^{-1})^l [l]!.
LaurentPoly partial_r_coefficient(int l);
LaurentPoly partial_r_inverse_coefficient(int l);

/// sum_l c_l T_{s_i}(f_i)^{(l)} (x) T_{s_i}(e_i)^{(l)} on M1 (x) M2 (finite).
SparseMatrix partial_R_i(const ModuleRealization& m1, const ModuleRealization& m2, Vertex i);
SparseMatrix partial_R_i_inverse(const ModuleRealization& m1, const ModuleRealization& m2,
                                 Vertex i);

/// R_i Delta°(g) R_i^{-1} = (T (x) T) Delta°(T^{-1} g) (T (x) T)^{-1} for g in
/// e_i, f_i, k_i; returns the first generator where it fails, if any.
std::optional<std::string> partial_R_conjugation_failure(const ModuleRealization& m1,
                                                         const ModuleRealization& m2, Vertex i);
/// R_{s_i s_j s_i} = R_{s_j s_i s_j} built by R_{ww'} = T^{[2]}_w(R_{w'}) R_w
/// (a_ij = -1).
bool braid_product_law_check(const ModuleRealization& m1, const ModuleRealization& m2, Vertex i,
                             Vertex j);

struct UnipotenceReport {
  bool weight_preserving = false;
  bool filtration_lowering = false;
  bool nilpotent = false;
  [[nodiscard]] bool holds() const { return weight_preserving && filtration_lowering && nilpotent; }
};
/// R-hat = flip o R for a braiding, R itself for a twist. Checks that R-hat
/// preserves total weight, that R-hat - 1 strictly lowers the first-factor
/// weight, and that (R-hat - 1)^{dim+1} = 0. Throws std::invalid_argument on
/// an unnormalised or singular R.
UnipotenceReport unipotence_report(const ModuleRealization& m1, const ModuleRealization& m2,
                                   const IntertwinerResult& r);
bool unipotence_check(const ModuleRealization& m1, const ModuleRealization& m2,
                      const IntertwinerResult& r);

}  // namespace qloop

#endif  // QLOOP_RMATRIX_HPP
