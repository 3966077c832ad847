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

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "qloop/algebra.hpp"
#include "qloop/module.hpp"

namespace qloop {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::InsufficientData: return "insufficient_data";
  }
  return "?";
}

bool RelationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const RelationCheck& c) { return c.status != CheckStatus::Pass; });
}

std::size_t RelationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [&](const RelationCheck& c) { return c.status == s; }));
}

std::size_t RelationReport::count(const std::string& relation_id, CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) {
    return c.relation_id == relation_id && c.status == s;
  }));
}

std::vector<std::string> RelationReport::relation_ids() const {
  std::set<std::string> ids;
  for (const auto& c : checks) ids.insert(c.relation_id);
  return {ids.begin(), ids.end()};
}

const RelationCheck* RelationReport::first_failure() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return &c;
  return nullptr;
}

std::optional<Witness> compare_operators(const SparseMatrix& lhs, const SparseMatrix& rhs) {
  const SparseMatrix diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  Index col = diff.cols();
  for (Index r = 0; r < diff.rows(); ++r)
    if (!diff.row(r).empty()) col = std::min(col, diff.row(r).begin()->first);
  return Witness{col, diff.column(col)};
}

namespace {

class Checker {
 public:
  explicit Checker(const ModuleRealization& m) : m_(m), n_(m.dim()) {}

  void run(const std::string& id, std::vector<int> indices, std::vector<int> modes,
           const std::function<std::pair<SparseMatrix, SparseMatrix>()>& sides) {
    RelationCheck c{id, std::move(indices), std::move(modes), CheckStatus::Pass, std::nullopt, ""};
    try {
      const auto [lhs, rhs] = sides();
      c.witness = compare_operators(lhs, rhs);
      if (c.witness) c.status = CheckStatus::Fail;
    } catch (const InsufficientData& e) {
      c.status = CheckStatus::InsufficientData;
      c.detail = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  [[nodiscard]] SparseMatrix act(const GeneratorSymbol& g) const { return m_.act(g); }
  [[nodiscard]] SparseMatrix zero() const { return SparseMatrix(n_, n_); }
  [[nodiscard]] SparseMatrix id() const { return SparseMatrix::identity(n_); }
  [[nodiscard]] Rational q() const { return m_.zeta(); }

  // Coefficient of z^a in x^{+-}_i(z) = sum_r x^{+-}_{i,r} z^{-r}.
  [[nodiscard]] SparseMatrix x(int sign, Vertex i, int a) const {
    return sign > 0 ? act(GeneratorSymbol::x_plus(i, -a)) : act(GeneratorSymbol::x_minus(i, -a));
  }
  // Coefficient of w^b in k^{+-}_j(w).
  [[nodiscard]] SparseMatrix kser(int sign, Vertex j, int b) const {
    if (sign > 0) return b <= 0 ? act(GeneratorSymbol::k_plus(j, -b)) : zero();
    return b >= 0 ? act(GeneratorSymbol::k_minus(j, -b)) : zero();
  }
  [[nodiscard]] SparseMatrix kmode(Vertex i, int m) const {
    SparseMatrix out = zero();
    if (m >= 0) out += act(GeneratorSymbol::k_plus(i, m));
    if (m <= 0) out -= act(GeneratorSymbol::k_minus(i, m));
    return out;
  }

  RelationReport finish() {
    std::stable_sort(report_.checks.begin(), report_.checks.end(),
                     [](const RelationCheck& a, const RelationCheck& b) {
                       return std::tie(a.relation_id, a.indices, a.modes) <
                              std::tie(b.relation_id, b.indices, b.modes);
                     });
    return std::move(report_);
  }

 private:
  const ModuleRealization& m_;
  Index n_;
  RelationReport report_;
};

SparseMatrix product(const std::vector<SparseMatrix>& ops, Index n) {
  SparseMatrix out = SparseMatrix::identity(n);
  for (const auto& o : ops) out = out * o;
  return out;
}

// sum_{p=0}^{m} (-1)^p [m, p] a_{w(1)} ... a_{w(p)} b a_{w(p+1)} ... a_{w(m)}, summed over
// the distinct orderings w of `order` (entries index into `as`).
SparseMatrix serre_sum(const std::vector<SparseMatrix>& as, const SparseMatrix& b,
                       std::vector<int> order, const Rational& q, Index n) {
  const int m = static_cast<int>(order.size());
  SparseMatrix total(n, n);
  std::sort(order.begin(), order.end());
  do {
    for (int p = 0; p <= m; ++p) {
      std::vector<SparseMatrix> word;
      for (int t = 0; t < p; ++t) word.push_back(as[order[t]]);
      word.push_back(b);
      for (int t = p; t < m; ++t) word.push_back(as[order[t]]);
      Rational c = specialize(qbinom(m, p), q);
      if (p % 2) c = -c;
      total += c * product(word, n);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return total;
}

}  // namespace

RelationReport verify_relations(const ModuleRealization& m, int mode_bound) {
  if (mode_bound < 0) throw std::invalid_argument("mode bound must be nonnegative");
  Checker ck(m);
  const auto& d = m.diagram();
  const int n = d.rank();
  const int mb = mode_bound;
  const Rational q = m.zeta();

  for (Vertex i = 1; i <= n; ++i) {
    ck.run("k_inverse", {i}, {}, [&] {
      const SparseMatrix a = ck.act(GeneratorSymbol::k(i, 1));
      const SparseMatrix b = ck.act(GeneratorSymbol::k(i, -1));
      return std::pair{a * b + b * a, ck.id() + ck.id()};
    });
  }

  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = 1; j <= n; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1})
          for (int r = 0; r <= mb; ++r)
            for (int s = 0; s <= mb; ++s)
              ck.run("k_commute", {i, j, si, sj}, {si * r, sj * s}, [&] {
                const SparseMatrix a = ck.kser(si, i, -si * r);
                const SparseMatrix b = ck.kser(sj, j, -sj * s);
                return std::pair{a * b, b * a};
              });

  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = 1; j <= n; ++j)
      for (int sign : {1, -1})
        for (int r = -mb; r <= mb; ++r)
          ck.run("k_x_conjugation", {i, j, sign}, {r}, [&] {
            const SparseMatrix k = ck.act(GeneratorSymbol::k(i, 1));
            const SparseMatrix kinv = ck.act(GeneratorSymbol::k(i, -1));
            const SparseMatrix x = ck.x(sign, j, -r);
            return std::pair{k * x * kinv, q.pow(sign * d.cartan(i, j)) * x};
          });

  // (w - c z) k_j(w) x_i(z) = (c w - z) x_i(z) k_j(w), c = q^{+-a_ji}.
  for (Vertex j = 1; j <= n; ++j)
    for (Vertex i = 1; i <= n; ++i)
      for (int eps : {1, -1})
        for (int sign : {1, -1})
          for (int a = -mb; a <= mb; ++a)
            for (int b = -mb; b <= mb; ++b)
              ck.run("k_x_series", {j, i, eps, sign}, {a, b}, [&] {
                const Rational c = q.pow(sign * d.cartan(j, i));
                const SparseMatrix x0 = ck.x(sign, i, a);
                const SparseMatrix x1 = ck.x(sign, i, a - 1);
                const SparseMatrix k0 = ck.kser(eps, j, b);
                const SparseMatrix k1 = ck.kser(eps, j, b - 1);
                return std::pair{k1 * x0 - c * (k0 * x1), c * (x0 * k1) - x1 * k0};
              });

  // (z - c w) x_i(z) x_j(w) = (c z - w) x_j(w) x_i(z), c = q^{+-a_ij}.
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = 1; j <= n; ++j)
      for (int sign : {1, -1})
        for (int a = -mb; a <= mb; ++a)
          for (int b = -mb; b <= mb; ++b)
            ck.run("x_x_series", {i, j, sign}, {a, b}, [&] {
              const Rational c = q.pow(sign * d.cartan(i, j));
              const SparseMatrix xi0 = ck.x(sign, i, a);
              const SparseMatrix xi1 = ck.x(sign, i, a - 1);
              const SparseMatrix xj0 = ck.x(sign, j, b);
              const SparseMatrix xj1 = ck.x(sign, j, b - 1);
              return std::pair{xi1 * xj0 - c * (xi0 * xj1), c * (xj0 * xi1) - xj1 * xi0};
            });

  const Rational qdiff = q - q.inverse();
  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = 1; j <= n; ++j)
      for (int r = -mb; r <= mb; ++r)
        for (int s = -mb; s <= mb; ++s)
          ck.run("x_commutator", {i, j}, {r, s}, [&] {
            const SparseMatrix lhs = commutator(ck.act(GeneratorSymbol::x_plus(i, r)),
                                                ck.act(GeneratorSymbol::x_minus(j, s)));
            SparseMatrix rhs = ck.zero();
            if (i == j) rhs = qdiff.inverse() * ck.kmode(i, r + s);
            return std::pair{lhs, rhs};
          });

  for (Vertex i = 1; i <= n; ++i)
    for (Vertex j = 1; j <= n; ++j) {
      if (i == j) continue;
      const int mm = 1 - d.cartan(i, j);
      for (int sign : {1, -1}) {
        std::vector<int> rs(mm, -mb);
        while (true) {
          for (int s = -mb; s <= mb; ++s) {
            std::vector<int> modes = rs;
            modes.push_back(s);
            ck.run("serre", {i, j, sign}, modes, [&] {
              std::vector<SparseMatrix> as;
              std::vector<int> order;
              for (int t = 0; t < mm; ++t) {
                as.push_back(sign > 0 ? ck.act(GeneratorSymbol::x_plus(i, rs[t]))
                                      : ck.act(GeneratorSymbol::x_minus(i, rs[t])));
                order.push_back(t);
              }
              const SparseMatrix b = sign > 0 ? ck.act(GeneratorSymbol::x_plus(j, s))
                                              : ck.act(GeneratorSymbol::x_minus(j, s));
              return std::pair{serre_sum(as, b, order, q, m.dim()), ck.zero()};
            });
          }
          // next nondecreasing tuple rs
          int t = mm - 1;
          while (t >= 0 && rs[t] == mb) --t;
          if (t < 0) break;
          ++rs[t];
          for (int u = t + 1; u < mm; ++u) rs[u] = rs[t];
        }
      }
    }

  return ck.finish();
}

RelationReport verify_kac_moody_relations(const ModuleRealization& m) {
  Checker ck(m);
  const auto& d = m.diagram();
  const int n = d.rank();
  const Rational q = m.zeta();
  const Weight theta = root_as_weight(d, highest_root(d));
  const RootVector theta_root = highest_root(d);
  auto a = [&](Vertex i, Vertex j) {
    if (i == j) return 2;
    if (i == 0) return -theta.coords[j - 1];
    if (j == 0) return -theta.coords[i - 1];
    return d.cartan(i, j);
  };
  auto E = [&](Vertex i) { return ck.act(GeneratorSymbol::e(i)); };
  auto F = [&](Vertex i) { return ck.act(GeneratorSymbol::f(i)); };
  auto K = [&](Vertex i, int s) { return ck.act(GeneratorSymbol::kkac(i, s)); };

  for (Vertex i = 0; i <= n; ++i)
    ck.run("km_k_inverse", {i}, {}, [&] { return std::pair{K(i, 1) * K(i, -1), ck.id()}; });
  for (Vertex i = 0; i <= n; ++i)
    for (Vertex j = 0; j <= n; ++j) {
      ck.run("km_k_commute", {i, j}, {}, [&] {
        return std::pair{K(i, 1) * K(j, 1), K(j, 1) * K(i, 1)};
      });
      ck.run("km_k_conjugation", {i, j, 1}, {}, [&] {
        return std::pair{K(i, 1) * E(j) * K(i, -1), q.pow(a(i, j)) * E(j)};
      });
      ck.run("km_k_conjugation", {i, j, -1}, {}, [&] {
        return std::pair{K(i, 1) * F(j) * K(i, -1), q.pow(-a(i, j)) * F(j)};
      });
      ck.run("km_ef_commutator", {i, j}, {}, [&] {
        SparseMatrix rhs = ck.zero();
        if (i == j) rhs = (q - q.inverse()).inverse() * (K(i, 1) - K(i, -1));
        return std::pair{commutator(E(i), F(j)), rhs};
      });
      if (i == j) continue;
      const int mm = 1 - a(i, j);
      std::vector<int> order(mm);
      for (int t = 0; t < mm; ++t) order[t] = 0;
      ck.run("km_serre", {i, j, 1}, {}, [&] {
        return std::pair{serre_sum({E(i)}, E(j), order, q, m.dim()), ck.zero()};
      });
      ck.run("km_serre", {i, j, -1}, {}, [&] {
        return std::pair{serre_sum({F(i)}, F(j), order, q, m.dim()), ck.zero()};
      });
    }
  ck.run("km_central", {0}, {}, [&] {
    SparseMatrix c = K(0, 1);
    for (Vertex i = 1; i <= n; ++i)
      for (int t = 0; t < theta_root.coords[i - 1]; ++t) c = c * K(i, 1);
    return std::pair{c, ck.id()};
  });
  return ck.finish();
}

}  // namespace qloop
