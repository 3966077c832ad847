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

#ifndef QLOOP_MODULE_HPP
#define QLOOP_MODULE_HPP

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qloop/algebra.hpp"
#include "qloop/linalg.hpp"
#include "qloop/root_data.hpp"
#include "qloop/scalar.hpp"

namespace qloop {

/// Thrown when an operator is requested beyond the modes a realization carries.
class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Contribution coef * param^r at (row, col) of the mode-r operator.
struct ModeTerm {
  Index row;
  Index col;
  Rational coef;
  Rational param;
};

/// Closed-form Drinfeld action of one vertex: x^{+-}_{i,r} as sums of mode
/// terms, and k^+_i(z) diagonal with a rational eigenvalue per basis vector.
/// k^-_i(z) is the expansion of the same function around z = 0.
struct NodeDrinfeld {
  std::vector<ModeTerm> x_plus;
  std::vector<ModeTerm> x_minus;
  std::vector<RationalFunction> k_eigen;
};

enum class Coproduct { Circ, Bullet, Drinfeld };
std::string to_string(Coproduct c);

/// Fundamental factor V(omega_node)_{alpha * zeta^shift}.
struct SpectralParam {
  Vertex node;
  Rational alpha;
  int shift = 0;

  [[nodiscard]] Rational value(const Rational& zeta) const { return alpha * zeta.pow(shift); }
  friend bool operator==(const SpectralParam&, const SpectralParam&) = default;
};

/// Everything a realization consists of. Kac-Moody operators are keyed by
/// E(i), F(i), KKac(i, +1), KKac(i, -1) for i in {0} u I.
struct ModuleData {
  DynkinDiagram diagram = DynkinDiagram::type_a(1);
  Rational zeta;
  Index dim = 0;
  std::vector<std::string> labels;
  std::vector<Weight> weights;
  std::map<GeneratorSymbol, SparseMatrix> kac_moody;
  std::optional<std::vector<NodeDrinfeld>> drinfeld;  // index i-1 for vertex i
  std::vector<SpectralParam> spectral_params;
  Coproduct coproduct = Coproduct::Circ;
  std::string name;
};

/// Finite-dimensional module over the quantum loop algebra specialised at
/// q = zeta, with exact rational matrices. Immutable after construction.
class ModuleRealization {
 public:
  /// Validates dimensions, labels and weights, the k_i eigenvalues
  /// zeta^{(alpha_i|mu)} and the weight shifts of e_i, f_i and of the Drinfeld
  /// modes. Throws std::invalid_argument on violation.
  explicit ModuleRealization(ModuleData data,
                             std::vector<std::shared_ptr<const ModuleRealization>> factors = {});

  [[nodiscard]] const ModuleData& data() const { return data_; }
  [[nodiscard]] const DynkinDiagram& diagram() const { return data_.diagram; }
  [[nodiscard]] const Rational& zeta() const { return data_.zeta; }
  [[nodiscard]] Index dim() const { return data_.dim; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return data_.labels; }
  [[nodiscard]] const std::vector<Weight>& weights() const { return data_.weights; }
  [[nodiscard]] const std::vector<SpectralParam>& spectral_params() const {
    return data_.spectral_params;
  }
  [[nodiscard]] Coproduct coproduct() const { return data_.coproduct; }
  [[nodiscard]] bool has_drinfeld() const { return data_.drinfeld.has_value(); }
  /// Largest |r| available for Drinfeld modes: -1 means every mode (closed
  /// form), 0 means none beyond what the Kac-Moody action gives.
  [[nodiscard]] int mode_bound() const { return has_drinfeld() ? -1 : 0; }
  [[nodiscard]] const std::vector<std::shared_ptr<const ModuleRealization>>& factors() const {
    return factors_;
  }

  /// Operator of one generator. Throws InsufficientData when Drinfeld modes
  /// are requested from a realization without them.
  [[nodiscard]] SparseMatrix act(const GeneratorSymbol& g) const;
  [[nodiscard]] const NodeDrinfeld& drinfeld(Vertex i) const;

 private:
  [[nodiscard]] SparseMatrix mode_operator(const std::vector<ModeTerm>& terms, int r) const;
  [[nodiscard]] SparseMatrix k_mode(Vertex i, int r) const;

  ModuleData data_;
  std::vector<std::shared_ptr<const ModuleRealization>> factors_;
};

using ModulePtr = std::shared_ptr<const ModuleRealization>;

/// Fundamental evaluation module V_zeta(omega_node)_alpha in type A: basis the
/// node-subsets of {0, ..., rank}, highest weight vector first.
ModulePtr evaluation_module(const DynkinDiagram& d, Vertex node, const Rational& alpha,
                            const Rational& zeta);
/// Every generator acts by zero except the k's, which act by 1.
ModulePtr trivial_module(const DynkinDiagram& d, const Rational& zeta);
/// M1 (x) M2 through Delta° or Delta•; basis ordered with the second index fastest.
ModulePtr tensor(const ModulePtr& m1, const ModulePtr& m2, Coproduct c = Coproduct::Circ);
/// M1 (x) M2 with the Drinfeld coproduct evaluated in closed form on mode
/// terms (both factors need closed-form Drinfeld data, type A).
ModulePtr drinfeld_tensor(const ModulePtr& m1, const ModulePtr& m2);

/// Kac-Moody e_0, f_0, k_0^{+-1} from the Drinfeld modes (type A), added to `data`.
void attach_affine_node(ModuleData& data);

/// Joint kernel of the e_i, i in I. Each vector is also checked against the
/// x^+ modes with |r| <= 2 when those are available.
std::vector<Vector> highest_weight_vectors(const ModuleRealization& m);
/// Unique highest weight vector of a tensor of evaluation modules (product of
/// the factors' highest weight vectors), or of the module itself.
Vector highest_weight_tensor(const ModuleRealization& m);

struct KSeries {
  std::vector<SparseMatrix> plus;   // k^+_{i,0..order}
  std::vector<SparseMatrix> minus;  // k^-_{i,0..-order}
};
KSeries k_series(const ModuleRealization& m, Vertex i, int order);

struct HOperators {
  std::vector<SparseMatrix> positive;  // h_{i,1..s_max}
  std::vector<SparseMatrix> negative;  // h_{i,-1..-s_max}
};
/// h_{i,s} from k^{+-}_i(z) = k_i^{+-1} exp(+-(q - q^{-1}) sum h_{i,+-s} z^{-+s}),
/// by the logarithm recursion (the k-modes commute).
HOperators h_operators(const ModuleRealization& m, Vertex i, int s_max);

/// Eigenvalue series of k^+_i(z) on the highest weight vector, coefficients of
/// z^0, z^{-1}, ..., z^{-order}. For Delta° / Delta• tensors this is the product
/// of the factors' series.
std::vector<Rational> highest_weight_series(const ModuleRealization& m, Vertex i, int order);

/// P_i normalised monic, with the k^+_i(z) eigenvalue on the highest weight
/// vector equal to zeta^{-deg P} P(zeta z) / P(zeta^{-1} z) expanded at infinity.
/// Throws std::invalid_argument when the highest weight vector is not unique.
std::vector<LaurentPoly> drinfeld_polynomials(const ModuleRealization& m);

}  // namespace qloop

#endif  // QLOOP_MODULE_HPP
