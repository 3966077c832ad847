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

#ifndef QLOOP_ROOT_DATA_HPP
#define QLOOP_ROOT_DATA_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qloop {

/// Vertices are 1..rank; vertex 0 is reserved for the affine node.
using Vertex = int;

/// Connected simply-laced Dynkin diagram of finite type (A, D, E).
/// Construction validates the graph and positive definiteness.
class DynkinDiagram {
 public:
  DynkinDiagram(int rank, std::vector<std::pair<Vertex, Vertex>> edges,
                std::string type_label = "custom");

  static DynkinDiagram type_a(int rank);
  static DynkinDiagram type_d(int rank);
  static DynkinDiagram type_e(int rank);
  /// "A" / "D" / "E" with a rank.
  static DynkinDiagram from_type(const std::string& type, int rank);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  [[nodiscard]] const std::string& type_label() const { return label_; }
  /// True for the path 1 - 2 - ... - rank (type A in its standard labelling).
  [[nodiscard]] bool is_type_a() const;
  [[nodiscard]] bool adjacent(Vertex i, Vertex j) const;
  /// a_ij = 2 delta_ij - n_ij, 1-based vertices.
  [[nodiscard]] int cartan(Vertex i, Vertex j) const;

  friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
    return a.rank_ == b.rank_ && a.edges_ == b.edges_;
  }

 private:
  int rank_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::string label_;
};

/// Integer coordinates over I. Weights are in the omega basis, root vectors in
/// the alpha basis.
struct Weight {
  std::vector<int> coords;
  [[nodiscard]] bool dominant() const;
  Weight& operator+=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(const Weight& a);
  friend Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

struct RootVector {
  std::vector<int> coords;
  [[nodiscard]] bool dominant() const;
  [[nodiscard]] int height() const;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

using CartanMatrix = std::vector<std::vector<int>>;

/// Throws std::invalid_argument if some leading principal minor is not positive,
/// naming its size and value.
CartanMatrix cartan_matrix(const DynkinDiagram& d);

/// (alpha_i | omega_j) = delta_ij extended bilinearly.
int pairing(const RootVector& alpha, const Weight& lambda);

/// The root vector alpha_i expressed as a weight (column i of the Cartan matrix).
Weight root_as_weight(const DynkinDiagram& d, const RootVector& alpha);
RootVector simple_root(const DynkinDiagram& d, Vertex i);
Weight fundamental_weight(const DynkinDiagram& d, Vertex i);

/// Sum of fundamental weights.
Weight weyl_rho(const DynkinDiagram& d);

/// All positive roots, by closure of the simple roots under adding simple roots.
std::vector<RootVector> positive_roots(const DynkinDiagram& d);
RootVector highest_root(const DynkinDiagram& d);

/// mu - nu lies in the nonnegative integer span of the simple roots.
bool dominates(const DynkinDiagram& d, const Weight& mu, const Weight& nu);

/// s_i(mu) = mu - (alpha_i|mu) alpha_i, in the omega basis.
Weight reflect(const DynkinDiagram& d, Vertex i, const Weight& mu);

}  // namespace qloop

#endif  // QLOOP_ROOT_DATA_HPP
