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

#include "qloop/root_data.hpp"

#include "qloop/linalg.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "qloop/scalar.hpp"

namespace qloop {

namespace {

void check_connected(int rank, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<bool> seen(static_cast<std::size_t>(rank + 1), false);
  std::deque<Vertex> todo{1};
  seen[1] = true;
  while (!todo.empty()) {
    const Vertex v = todo.front();
    todo.pop_front();
    for (const auto& [a, b] : edges) {
      const Vertex w = a == v ? b : (b == v ? a : 0);
      if (w != 0 && !seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
    }
  }
  for (int v = 1; v <= rank; ++v)
    if (!seen[v]) throw std::invalid_argument("Dynkin diagram is not connected");
}

}  // namespace

DynkinDiagram::DynkinDiagram(int rank, std::vector<std::pair<Vertex, Vertex>> edges,
                             std::string type_label)
    : rank_(rank), label_(std::move(type_label)) {
  if (rank < 1) throw std::invalid_argument("Dynkin diagram needs rank >= 1");
  std::set<std::pair<Vertex, Vertex>> uniq;
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || a > rank || b > rank)
      throw std::invalid_argument("edge vertex out of range");
    if (a == b) throw std::invalid_argument("Dynkin diagram edge loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (!uniq.insert({a, b}).second)
      throw std::invalid_argument("multiple edges are not simply-laced");
  }
  edges_.assign(uniq.begin(), uniq.end());
  check_connected(rank_, edges_);
  (void)cartan_matrix(*this);  // positive definiteness
}

DynkinDiagram DynkinDiagram::type_a(int rank) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i < rank; ++i) e.emplace_back(i, i + 1);
  return DynkinDiagram(rank, std::move(e), "A_" + std::to_string(rank));
}

DynkinDiagram DynkinDiagram::type_d(int rank) {
  if (rank < 4) throw std::invalid_argument("type D needs rank >= 4");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i < rank - 1; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(rank - 2, rank);
  return DynkinDiagram(rank, std::move(e), "D_" + std::to_string(rank));
}

DynkinDiagram DynkinDiagram::type_e(int rank) {
  if (rank < 6 || rank > 8) throw std::invalid_argument("type E needs rank 6, 7 or 8");
  // Bourbaki labelling: 1-3-4-5-..., 2 attached to 4.
  std::vector<std::pair<Vertex, Vertex>> e{{1, 3}, {3, 4}, {2, 4}};
  for (int i = 4; i < rank; ++i) e.emplace_back(i, i + 1);
  return DynkinDiagram(rank, std::move(e), "E_" + std::to_string(rank));
}

DynkinDiagram DynkinDiagram::from_type(const std::string& type, int rank) {
  if (type == "A") return type_a(rank);
  if (type == "D") return type_d(rank);
  if (type == "E") return type_e(rank);
  throw std::invalid_argument("unsupported diagram type '" + type + "' (expected A, D or E)");
}

bool DynkinDiagram::is_type_a() const {
  if (static_cast<int>(edges_.size()) != rank_ - 1) return false;
  for (int i = 1; i < rank_; ++i)
    if (edges_[i - 1] != std::make_pair(i, i + 1)) return false;
  return true;
}

bool DynkinDiagram::adjacent(Vertex i, Vertex j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(i, j));
}

int DynkinDiagram::cartan(Vertex i, Vertex j) const {
  if (i == j) return 2;
  return adjacent(i, j) ? -1 : 0;
}

bool Weight::dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.coords.size() != coords.size()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight operator-(const Weight& a) {
  Weight r = a;
  for (int& c : r.coords) c = -c;
  return r;
}

bool RootVector::dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

int RootVector::height() const {
  int h = 0;
  for (int c : coords) h += c;
  return h;
}

CartanMatrix cartan_matrix(const DynkinDiagram& d) {
  const int n = d.rank();
  CartanMatrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a[i - 1][j - 1] = d.cartan(i, j);
  // Leading principal minors by exact elimination.
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i].emplace_back(a[i][j]);
  Rational det(1);
  for (int k = 0; k < n; ++k) {
    const Rational pivot = m[k][k];
    det *= pivot;
    if (det.sign() <= 0)
      throw std::invalid_argument("diagram is not of finite type: leading minor of size " +
                                  std::to_string(k + 1) + " equals " + det.to_string());
    for (int i = k + 1; i < n; ++i) {
      const Rational f = m[i][k] / pivot;
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return a;
}

int pairing(const RootVector& alpha, const Weight& lambda) {
  if (alpha.coords.size() != lambda.coords.size())
    throw std::invalid_argument("pairing between different diagrams");
  int s = 0;
  for (std::size_t i = 0; i < alpha.coords.size(); ++i) s += alpha.coords[i] * lambda.coords[i];
  return s;
}

Weight root_as_weight(const DynkinDiagram& d, const RootVector& alpha) {
  Weight w{std::vector<int>(static_cast<std::size_t>(d.rank()))};
  for (int i = 1; i <= d.rank(); ++i)
    for (int j = 1; j <= d.rank(); ++j) w.coords[j - 1] += alpha.coords[i - 1] * d.cartan(i, j);
  return w;
}

RootVector simple_root(const DynkinDiagram& d, Vertex i) {
  RootVector r{std::vector<int>(static_cast<std::size_t>(d.rank()))};
  r.coords.at(static_cast<std::size_t>(i - 1)) = 1;
  return r;
}

Weight fundamental_weight(const DynkinDiagram& d, Vertex i) {
  Weight w{std::vector<int>(static_cast<std::size_t>(d.rank()))};
  w.coords.at(static_cast<std::size_t>(i - 1)) = 1;
  return w;
}

Weight weyl_rho(const DynkinDiagram& d) {
  return Weight{std::vector<int>(static_cast<std::size_t>(d.rank()), 1)};
}

std::vector<RootVector> positive_roots(const DynkinDiagram& d) {
  const int n = d.rank();
  std::set<RootVector> roots;
  std::deque<RootVector> todo;
  for (int i = 1; i <= n; ++i) {
    roots.insert(simple_root(d, i));
    todo.push_back(simple_root(d, i));
  }
  // In simply-laced type, beta + alpha_i is a root iff (beta, alpha_i) = -1.
  while (!todo.empty()) {
    RootVector b = todo.front();
    todo.pop_front();
    const Weight bw = root_as_weight(d, b);
    for (int i = 1; i <= n; ++i) {
      if (bw.coords[i - 1] != -1) continue;
      RootVector c = b;
      c.coords[i - 1] += 1;
      if (roots.insert(c).second) todo.push_back(c);
    }
  }
  return {roots.begin(), roots.end()};
}

RootVector highest_root(const DynkinDiagram& d) {
  const auto roots = positive_roots(d);
  return *std::max_element(roots.begin(), roots.end(),
                           [](const RootVector& a, const RootVector& b) {
                             return a.height() < b.height();
                           });
}

Weight reflect(const DynkinDiagram& d, Vertex i, const Weight& mu) {
  const int c = mu.coords.at(static_cast<std::size_t>(i - 1));
  RootVector a = simple_root(d, i);
  a.coords[i - 1] = c;
  return mu - root_as_weight(d, a);
}

bool dominates(const DynkinDiagram& d, const Weight& mu, const Weight& nu) {
  const Index n = static_cast<Index>(d.rank());
  SparseMatrix a(n, n);
  for (Vertex i = 1; i <= d.rank(); ++i)
    for (Vertex j = 1; j <= d.rank(); ++j)
      if (d.cartan(i, j)) a.set(i - 1, j - 1, Rational(d.cartan(i, j)));
  // the Cartan matrix is symmetric, so column j is alpha_j in the omega basis
  Vector diff;
  for (Index t = 0; t < n; ++t) diff.emplace_back(mu.coords.at(t) - nu.coords.at(t));
  for (const auto& c : a.inverse()->apply(diff))
    if (c.sign() < 0 || c.denominator() != 1) return false;
  return true;
}

}  // namespace qloop
