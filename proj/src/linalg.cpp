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

#include "qloop/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qloop {

Vector unit_vector(Index dim, Index i) {
  Vector v(dim);
  v.at(i) = Rational(1);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

SparseMatrix SparseMatrix::identity(Index n) {
  SparseMatrix m(n, n);
  for (Index i = 0; i < n; ++i) m.rows_[i].emplace(i, Rational(1));
  return m;
}

SparseMatrix SparseMatrix::diagonal(const Vector& d) {
  SparseMatrix m(d.size(), d.size());
  for (Index i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) m.rows_[i].emplace(i, d[i]);
  return m;
}

SparseMatrix SparseMatrix::unit(Index rows, Index cols, Index r, Index c) {
  SparseMatrix m(rows, cols);
  m.set(r, c, Rational(1));
  return m;
}

Rational SparseMatrix::get(Index r, Index c) const {
  const auto& row = rows_.at(r);
  const auto it = row.find(c);
  return it == row.end() ? Rational(0) : it->second;
}

void SparseMatrix::set(Index r, Index c, const Rational& v) {
  if (c >= cols_) throw std::out_of_range("column index out of range");
  auto& row = rows_.at(r);
  if (v.is_zero()) row.erase(c);
  else row[c] = v;
}

void SparseMatrix::add(Index r, Index c, const Rational& v) {
  if (v.is_zero()) return;
  if (c >= cols_) throw std::out_of_range("column index out of range");
  auto& row = rows_.at(r);
  auto [it, inserted] = row.try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) row.erase(it);
  }
}

bool SparseMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const SparseRow& r) { return r.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool SparseMatrix::is_diagonal() const {
  for (Index i = 0; i < rows_.size(); ++i)
    for (const auto& [c, v] : rows_[i])
      if (c != i) return false;
  return true;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_.size());
  for (Index i = 0; i < rows_.size(); ++i)
    for (const auto& [c, v] : rows_[i]) t.rows_[c].emplace(i, v);
  return t;
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector size mismatch");
  Vector out(rows_.size());
  for (Index i = 0; i < rows_.size(); ++i)
    for (const auto& [c, x] : rows_[i]) out[i] += x * v[c];
  return out;
}

Vector SparseMatrix::column(Index c) const {
  Vector out(rows_.size());
  for (Index i = 0; i < rows_.size(); ++i) out[i] = get(i, c);
  return out;
}

SparseMatrix SparseMatrix::pow(unsigned e) const {
  if (rows() != cols()) throw std::invalid_argument("power of non-square matrix");
  SparseMatrix r = identity(rows());
  for (unsigned k = 0; k < e; ++k) r = r * *this;
  return r;
}

std::optional<SparseMatrix> SparseMatrix::inverse() const {
  const Index n = rows();
  if (n != cols()) throw std::invalid_argument("inverse of non-square matrix");
  std::vector<SparseRow> a = rows_;
  std::vector<SparseRow> inv(n);
  for (Index i = 0; i < n; ++i) inv[i].emplace(i, Rational(1));
  for (Index col = 0; col < n; ++col) {
    Index p = col;
    while (p < n && !a[p].contains(col)) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    const Rational s = a[col].at(col).inverse();
    for (auto& [c, v] : a[col]) v *= s;
    for (auto& [c, v] : inv[col]) v *= s;
    for (Index r = 0; r < n; ++r) {
      if (r == col) continue;
      const auto it = a[r].find(col);
      if (it == a[r].end()) continue;
      const Rational f = it->second;
      for (const auto& [c, v] : a[col]) {
        auto& x = a[r][c];
        x -= f * v;
        if (x.is_zero()) a[r].erase(c);
      }
      for (const auto& [c, v] : inv[col]) {
        auto& x = inv[r][c];
        x -= f * v;
        if (x.is_zero()) inv[r].erase(c);
      }
    }
  }
  SparseMatrix out(n, n);
  out.rows_ = std::move(inv);
  return out;
}

void SparseMatrix::check_same_shape(const SparseMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols())
    throw std::invalid_argument("matrix shape mismatch");
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
  check_same_shape(o);
  for (Index i = 0; i < rows_.size(); ++i)
    for (const auto& [c, v] : o.rows_[i]) add(i, c, v);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) {
  check_same_shape(o);
  for (Index i = 0; i < rows_.size(); ++i)
    for (const auto& [c, v] : o.rows_[i]) add(i, c, -v);
  return *this;
}

SparseMatrix& SparseMatrix::operator*=(const Rational& s) {
  if (s.is_zero()) {
    for (auto& r : rows_) r.clear();
    return *this;
  }
  for (auto& r : rows_)
    for (auto& [c, v] : r) v *= s;
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  SparseMatrix out(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    SparseRow acc;
    for (const auto& [k, x] : a.rows_[i])
      for (const auto& [j, y] : b.rows_[k]) acc[j] += x * y;
    for (auto& [j, v] : acc)
      if (!v.is_zero()) out.rows_[i].emplace(j, std::move(v));
  }
  return out;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (const auto& [j, x] : a.row(i))
      for (Index k = 0; k < b.rows(); ++k)
        for (const auto& [l, y] : b.row(k)) out.set(i * b.rows() + k, j * b.cols() + l, x * y);
  return out;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------- Subspace

SparseRow to_sparse(const Vector& v) {
  SparseRow r;
  for (Index i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.emplace(i, v[i]);
  return r;
}

Vector to_dense(const SparseRow& r, Index dim) {
  Vector v(dim);
  for (const auto& [i, x] : r) v.at(i) = x;
  return v;
}

namespace {

void axpy(SparseRow& y, const Rational& a, const SparseRow& x) {
  for (const auto& [c, v] : x) {
    auto [it, inserted] = y.try_emplace(c, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

}  // namespace

std::vector<Index> Subspace::pivots() const {
  std::vector<Index> p;
  for (const auto& r : rows_) p.push_back(r.begin()->first);
  return p;
}

SparseRow Subspace::reduce(SparseRow v) const {
  for (const auto& r : rows_) {
    const auto it = v.find(r.begin()->first);
    if (it != v.end()) {
      const Rational f = it->second;
      axpy(v, -f, r);
    }
  }
  return v;
}

bool Subspace::insert(const Vector& v) {
  if (v.size() != ambient_) throw std::invalid_argument("vector outside ambient space");
  return insert(to_sparse(v));
}

bool Subspace::insert(SparseRow v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const Index pivot = v.begin()->first;
  const Rational s = v.begin()->second.inverse();
  for (auto& [c, x] : v) x *= s;
  for (auto& r : rows_) {
    const auto it = r.find(pivot);
    if (it != r.end()) {
      const Rational f = it->second;
      axpy(r, -f, v);
    }
  }
  const auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                    [](const SparseRow& r, Index p) { return r.begin()->first < p; });
  rows_.insert(pos, std::move(v));
  return true;
}

bool Subspace::contains(const Vector& v) const { return reduce(to_sparse(v)).empty(); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const SparseRow& r) { return reduce(r).empty(); });
}

std::vector<Vector> nullspace(const std::vector<SparseRow>& equations, Index unknowns) {
  Subspace rowspace(unknowns);
  for (const auto& e : equations) rowspace.insert(e);
  const auto piv = rowspace.pivots();
  std::vector<bool> is_pivot(unknowns, false);
  for (Index p : piv) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (Index f = 0; f < unknowns; ++f) {
    if (is_pivot[f]) continue;
    Vector x(unknowns);
    x[f] = Rational(1);
    for (const auto& r : rowspace.basis()) {
      const auto it = r.find(f);
      if (it != r.end()) x[r.begin()->first] = -it->second;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Index rank(const SparseMatrix& m) {
  Subspace s(m.cols());
  for (Index i = 0; i < m.rows(); ++i) s.insert(m.row(i));
  return s.dim();
}

}  // namespace qloop
