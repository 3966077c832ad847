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

#ifndef QLOOP_STRUCTURE_HPP
#define QLOOP_STRUCTURE_HPP

#include <string>
#include <vector>

#include "qloop/module.hpp"

namespace qloop {

/// Least subspace containing v and stable under e_i, f_i, k_i^{+-1}, i in {0} u I.
/// Worklist closure in a fixed generator order.
Subspace generated_submodule(const ModuleRealization& m, const Vector& v);

struct CyclicityResult {
  bool cyclic = false;
  Index submodule_dim = 0;
  /// Vectors taken off the worklist before the closure stabilised.
  Index witness_basis_size = 0;
};
CyclicityResult cyclicity(const ModuleRealization& m, const Vector& v);
/// Throws std::invalid_argument for v = 0.
bool is_cyclic(const ModuleRealization& m, const Vector& v);

/// Linear dual made a left module through tau: act(g) = act(tau(g))^T. The
/// realization lives at zeta^{-1} and keeps the weight labels of M (k_i acts on
/// the dual basis vector of weight mu by (zeta^{-1})^{(alpha_i|mu)}).
ModulePtr dual_module(const ModulePtr& m);

/// The dual module is generated by the functional dual to v. v must span a
/// one-dimensional weight space; otherwise std::invalid_argument.
bool is_cocyclic(const ModulePtr& m, const Vector& v);
CyclicityResult cocyclicity(const ModulePtr& m, const Vector& v);

struct StandardFactor {
  Vertex node;
  Rational alpha;
  int shift;
};
/// Left-to-right tensor of V(omega_node)_{alpha zeta^shift}.
ModulePtr standard_module(const DynkinDiagram& d, const std::vector<StandardFactor>& spec,
                          const Rational& zeta, Coproduct c = Coproduct::Circ);

struct TriangularReport {
  bool truncated_plus = false;   // x^+ on (hw of M1) (x) M2
  bool truncated_minus = false;  // x^- on M1 (x) (hw of M2)
  bool twist_plus = false;       // transported x^+ equals the Drinfeld-coproduct action
  bool twist_minus = false;
  std::string detail;
  [[nodiscard]] bool holds() const {
    return truncated_plus && truncated_minus && twist_plus && twist_minus;
  }
};
/// Type A_1. The Drinfeld modes of M1 (x) M2 (Delta°) are recovered from its
/// Kac-Moody action (x^-_1 = e_0 k, x^+_{-1} = k^{-1} f_0, then h_{+-1} and the
/// h-recursion). They are compared (a) with the truncated expansion
///   x^+_r (x) 1 + sum_s k^+_s (x) x^+_{r-s}  on (hw of M1) (x) M2, and
///   1 (x) x^-_r + sum_s x^-_{r+s} (x) k^-_{-s}  on M1 (x) (hw of M2),
/// and (b) through the twist intertwiner with the Drinfeld-coproduct tensor.
/// Throws InsufficientData when |r| exceeds `order`.
TriangularReport triangular_coproduct_report(const ModulePtr& m1, const ModulePtr& m2, Vertex i,
                                             int r, int order);
bool triangular_coproduct_check(const ModulePtr& m1, const ModulePtr& m2, Vertex i, int r,
                                int order);

}  // namespace qloop

#endif  // QLOOP_STRUCTURE_HPP
