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

#ifndef QLOOP_LINALG_HPP
#define QLOOP_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qloop/scalar.hpp"

namespace qloop {

using Index = std::size_t;
using Vector = std::vector<Rational>;
/// Sparse row: column -> nonzero value.
using SparseRow = std::map<Index, Rational>;

Vector unit_vector(Index dim, Index i);
bool is_zero(const Vector& v);

/// Exact sparse matrix, row-major. Zero entries are never stored.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(Index rows, Index cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix identity(Index n);
  static SparseMatrix diagonal(const Vector& d);
  /// Rank-one unit: single entry 1 at (r, c).
  static SparseMatrix unit(Index rows, Index cols, Index r, Index c);

  [[nodiscard]] Index rows() const { return rows_.size(); }
  [[nodiscard]] Index cols() const { return cols_; }
  [[nodiscard]] const SparseRow& row(Index i) const { return rows_.at(i); }
  [[nodiscard]] Rational get(Index r, Index c) const;
  void set(Index r, Index c, const Rational& v);
  void add(Index r, Index c, const Rational& v);

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::size_t nonzeros() const;
  [[nodiscard]] bool is_diagonal() const;

  [[nodiscard]] SparseMatrix transpose() const;
  [[nodiscard]] Vector apply(const Vector& v) const;
  /// Column c as a dense vector.
  [[nodiscard]] Vector column(Index c) const;
  [[nodiscard]] SparseMatrix pow(unsigned e) const;
  /// Exact inverse by Gauss-Jordan; std::nullopt when singular.
  [[nodiscard]] std::optional<SparseMatrix> inverse() const;

  SparseMatrix& operator+=(const SparseMatrix& o);
  SparseMatrix& operator-=(const SparseMatrix& o);
  SparseMatrix& operator*=(const Rational& s);
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(SparseMatrix a, const Rational& s) { return a *= s; }
  friend SparseMatrix operator*(const Rational& s, SparseMatrix a) { return a *= s; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  void check_same_shape(const SparseMatrix& o) const;
  Index cols_ = 0;
  std::vector<SparseRow> rows_;
};

/// Kronecker product a (x) b; the basis of the product is ordered with the
/// second factor's index varying fastest.
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
/// [a, b] = ab - ba.
SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b);

/// Subspace of Q^n stored as a reduced row echelon basis: pivots strictly
/// increasing, leftmost pivot normalized to 1, pivot columns cleared in all
/// other rows. Insertion order does not affect the stored basis.
class Subspace {
 public:
  explicit Subspace(Index ambient) : ambient_(ambient) {}

  [[nodiscard]] Index ambient_dim() const { return ambient_; }
  [[nodiscard]] Index dim() const { return rows_.size(); }
  [[nodiscard]] const std::vector<SparseRow>& basis() const { return rows_; }
  [[nodiscard]] std::vector<Index> pivots() const;

  /// Adds v; returns true when the dimension grew.
  bool insert(const Vector& v);
  bool insert(SparseRow v);
  [[nodiscard]] bool contains(const Vector& v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;
  /// Reduced remainder of v modulo the subspace (zero iff v is contained).
  [[nodiscard]] SparseRow reduce(SparseRow v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Index ambient_;
  std::vector<SparseRow> rows_;
};

SparseRow to_sparse(const Vector& v);
Vector to_dense(const SparseRow& r, Index dim);

/// Basis of {x : E x = 0} for the equations given as sparse rows over
/// `unknowns` variables. The basis is canonical: one vector per free column,
/// with that free variable equal to 1 and the other free variables 0.
std::vector<Vector> nullspace(const std::vector<SparseRow>& equations, Index unknowns);

/// Rank of the matrix.
Index rank(const SparseMatrix& m);

}  // namespace qloop

#endif  // QLOOP_LINALG_HPP
