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

#include "qloop/rmatrix.hpp"

#include <map>
#include <tuple>

namespace qloop {

namespace {

std::vector<GeneratorSymbol> kac_moody_generators(const DynkinDiagram& d) {
  std::vector<GeneratorSymbol> out;
  for (Vertex i = 0; i <= d.rank(); ++i) {
    out.push_back(GeneratorSymbol::e(i));
    out.push_back(GeneratorSymbol::f(i));
  }
  return out;
}

std::optional<Rational> proportionality(const Vector& w, const Vector& v) {
  Index b = 0;
  while (b < v.size() && v[b].is_zero()) ++b;
  if (b == v.size()) return std::nullopt;
  const Rational lambda = w[b] / v[b];
  for (Index t = 0; t < v.size(); ++t)
    if (w[t] != lambda * v[t]) return std::nullopt;
  return lambda;
}

IntertwinerResult solve_between(const ModuleRealization& src, const ModuleRealization& dst,
                                 IntertwinerKind kind) {
  IntertwinerResult out;
  out.kind = kind;
  const auto maps = module_maps(src, dst);
  out.solution_space_dim = maps.size();
  if (maps.empty()) {
    out.matrix = SparseMatrix(dst.dim(), src.dim());
    return out;
  }
  out.matrix = maps.front();
  if (maps.size() == 1) {
    const Vector vs = highest_weight_tensor(src);
    const Vector vd = highest_weight_tensor(dst);
    const auto lambda = proportionality(out.matrix.apply(vs), vd);
    if (lambda && !lambda->is_zero()) {
      out.matrix *= lambda->inverse();
      out.normalized = true;
    }
  }
  out.invertible = src.dim() == dst.dim() && out.matrix.inverse().has_value();
  return out;
}

std::vector<SparseMatrix> divided_powers(const SparseMatrix& x, const Rational& q) {
  std::vector<SparseMatrix> out{SparseMatrix::identity(x.rows())};
  while (true) {
    const int a = static_cast<int>(out.size());
    SparseMatrix next = specialize(qint(a), q).inverse() * (x * out.back());
    if (next.is_zero()) break;
    out.push_back(std::move(next));
  }
  return out;
}

SparseMatrix kron_id_left(Index n, const SparseMatrix& a) { return kron(SparseMatrix::identity(n), a); }
SparseMatrix kron_id_right(const SparseMatrix& a, Index n) { return kron(a, SparseMatrix::identity(n)); }

SparseMatrix partial_sum(const ModuleRealization& m1, const ModuleRealization& m2, Vertex i,
                         bool inverse) {
  if (!(m1.diagram() == m2.diagram()) || m1.zeta() != m2.zeta())
    throw std::invalid_argument("partial R-matrix factors must share diagram and zeta");
  const Rational& q = m1.zeta();
  const SparseMatrix t1 = braid_T_si(m1, i);
  const SparseMatrix t2 = braid_T_si(m2, i);
  const SparseMatrix a = t1 * m1.act(GeneratorSymbol::f(i)) * *t1.inverse();
  const SparseMatrix b = t2 * m2.act(GeneratorSymbol::e(i)) * *t2.inverse();
  const auto ap = divided_powers(a, q);
  const auto bp = divided_powers(b, q);
  SparseMatrix out(m1.dim() * m2.dim(), m1.dim() * m2.dim());
  for (std::size_t l = 0; l < std::min(ap.size(), bp.size()); ++l) {
    const int li = static_cast<int>(l);
    const Rational c = specialize(
        inverse ? partial_r_inverse_coefficient(li) : partial_r_coefficient(li), q);
    out += c * kron(ap[l], bp[l]);
  }
  return out;
}

SparseMatrix conjugate(const SparseMatrix& u, const SparseMatrix& x) {
  return u * x * *u.inverse();
}

}  // namespace

std::vector<SparseMatrix> module_maps(const ModuleRealization& src, const ModuleRealization& dst) {
  if (!(src.diagram() == dst.diagram()) || src.zeta() != dst.zeta())
    throw std::invalid_argument("module maps need a common diagram and zeta");
  std::map<std::pair<Index, Index>, Index> unknown;
  std::vector<std::pair<Index, Index>> cells;
  for (Index u = 0; u < dst.dim(); ++u)
    for (Index v = 0; v < src.dim(); ++v)
      if (dst.weights()[u] == src.weights()[v]) {
        unknown[{u, v}] = cells.size();
        cells.emplace_back(u, v);
      }

  std::map<std::tuple<std::size_t, Index, Index>, SparseRow> eqs;
  const auto gens = kac_moody_generators(src.diagram());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const SparseMatrix a = src.act(gens[g]);
    const SparseMatrix bt = dst.act(gens[g]).transpose();
    for (Index x = 0; x < cells.size(); ++x) {
      const auto [u, v] = cells[x];
      for (const auto& [vp, val] : a.row(v)) {
        auto& row = eqs[{g, u, vp}];
        row[x] += val;
        if (row[x].is_zero()) row.erase(x);
      }
      for (const auto& [uu, val] : bt.row(u)) {
        auto& row = eqs[{g, uu, v}];
        row[x] -= val;
        if (row[x].is_zero()) row.erase(x);
      }
    }
  }
  std::vector<SparseRow> rows;
  for (auto& [key, row] : eqs)
    if (!row.empty()) rows.push_back(std::move(row));

  std::vector<SparseMatrix> out;
  for (const auto& sol : nullspace(rows, cells.size())) {
    SparseMatrix m(dst.dim(), src.dim());
    for (Index x = 0; x < cells.size(); ++x)
      if (!sol[x].is_zero()) m.set(cells[x].first, cells[x].second, sol[x]);
    out.push_back(std::move(m));
  }
  return out;
}

IntertwinerResult solve_intertwiner(const ModulePtr& m1, const ModulePtr& m2) {
  return solve_between(*tensor(m1, m2), *tensor(m2, m1), IntertwinerKind::Braiding);
}

IntertwinerResult solve_drinfeld_twist(const ModulePtr& m1, const ModulePtr& m2) {
  return solve_between(*tensor(m1, m2), *drinfeld_tensor(m1, m2), IntertwinerKind::Twist);
}

SparseMatrix flip_operator(Index n1, Index n2) {
  SparseMatrix p(n1 * n2, n1 * n2);
  for (Index a = 0; a < n1; ++a)
    for (Index b = 0; b < n2; ++b) p.set(b * n1 + a, a * n2 + b, Rational(1));
  return p;
}

// ------------------------------------------------------------- Yang-Baxter

YbeReport yang_baxter_report(const ModulePtr& m1, const ModulePtr& m2, const ModulePtr& m3) {
  YbeReport rep;
  const IntertwinerResult r12 = solve_intertwiner(m1, m2);
  const IntertwinerResult r13 = solve_intertwiner(m1, m3);
  const IntertwinerResult r23 = solve_intertwiner(m2, m3);
  const std::pair<const char*, const IntertwinerResult*> all[] = {
      {"R12", &r12}, {"R13", &r13}, {"R23", &r23}};
  for (const auto& [name, r] : all) {
    if (r->solution_space_dim != 1 || !r->normalized) {
      rep.abstained = true;
      rep.reason = std::string(name) + " is not unique up to scalar (solution space dimension " +
                   std::to_string(r->solution_space_dim) + ")";
      return rep;
    }
  }
  const Index n1 = m1->dim(), n2 = m2->dim(), n3 = m3->dim();
  const SparseMatrix lhs = kron_id_right(r23.matrix, n1) * kron_id_left(n2, r13.matrix) *
                           kron_id_right(r12.matrix, n3);
  const SparseMatrix rhs = kron_id_left(n3, r12.matrix) * kron_id_right(r13.matrix, n2) *
                           kron_id_left(n1, r23.matrix);
  const SparseMatrix diff = lhs - rhs;
  rep.holds = diff.is_zero();
  for (Index r = 0; r < diff.rows(); ++r)
    for (const auto& [c, v] : diff.row(r))
      if (!rep.witness || v.abs() > rep.defect.abs()) {
        rep.witness = {r, c};
        rep.defect = v;
      }
  return rep;
}

bool yang_baxter_check(const ModulePtr& m1, const ModulePtr& m2, const ModulePtr& m3) {
  return yang_baxter_report(m1, m2, m3).holds;
}

// ------------------------------------------------------------ braid symmetry

AlgebraElement braid_image(const DynkinDiagram& d, Vertex i, const GeneratorSymbol& g) {
  const auto k = [&](int s) { return GeneratorSymbol::kkac(i, s); };
  if (g.kind == GenKind::E && g.node == i)
    return AlgebraElement(Scalar(-1), Word{GeneratorSymbol::f(i), k(1)});
  if (g.kind == GenKind::F && g.node == i)
    return AlgebraElement(Scalar(-1), Word{k(-1), GeneratorSymbol::e(i)});
  if (g.kind == GenKind::KKac && g.node >= 1) {
    Word w{g};
    const int a = d.cartan(i, g.node);
    for (int t = 0; t < std::abs(a); ++t) w.push_back(k(a > 0 ? -g.index : g.index));
    return AlgebraElement(Scalar(1), w);
  }
  throw std::invalid_argument("no braid image recorded for " + g.to_string());
}

AlgebraElement braid_inverse_image(const DynkinDiagram& d, Vertex i, const GeneratorSymbol& g) {
  const auto k = [&](int s) { return GeneratorSymbol::kkac(i, s); };
  if (g.kind == GenKind::E && g.node == i)
    return AlgebraElement(Scalar(-1), Word{k(-1), GeneratorSymbol::f(i)});
  if (g.kind == GenKind::F && g.node == i)
    return AlgebraElement(Scalar(-1), Word{GeneratorSymbol::e(i), k(1)});
  return braid_image(d, i, g);
}

SparseMatrix braid_T_si(const ModuleRealization& m, Vertex i) {
  if (i < 1 || i > m.diagram().rank()) throw std::invalid_argument("vertex outside the diagram");
  const Rational& q = m.zeta();
  const auto ep = divided_powers(m.act(GeneratorSymbol::e(i)), q);
  const auto fp = divided_powers(m.act(GeneratorSymbol::f(i)), q);
  const int na = static_cast<int>(ep.size());
  const int nb = static_cast<int>(fp.size());
  SparseMatrix t(m.dim(), m.dim());
  for (Index col = 0; col < m.dim(); ++col) {
    const int mm = m.weights()[col].coords[i - 1];
    const Vector v = unit_vector(m.dim(), col);
    Vector acc(m.dim());
    for (int a = 0; a < na; ++a)
      for (int c = 0; c < na; ++c) {
        const int b = mm + a + c;
        if (b < 0 || b >= nb) continue;
        Rational coef = q.pow(b - a * c);
        if (b % 2) coef = -coef;
        const Vector w = ep[a].apply(fp[b].apply(ep[c].apply(v)));
        for (Index s = 0; s < m.dim(); ++s) acc[s] += coef * w[s];
      }
    for (Index s = 0; s < m.dim(); ++s)
      if (!acc[s].is_zero()) t.set(s, col, acc[s]);
  }
  const auto tinv = t.inverse();
  if (!tinv) throw std::logic_error("braid operator is singular");
  std::vector<GeneratorSymbol> checks{GeneratorSymbol::e(i), GeneratorSymbol::f(i)};
  for (Vertex j = 1; j <= m.diagram().rank(); ++j) checks.push_back(GeneratorSymbol::kkac(j, 1));
  for (const auto& g : checks)
    if (!(t * m.act(g) * *tinv == evaluate(m, braid_image(m.diagram(), i, g))))
      throw std::logic_error("braid operator fails the conjugation check on " + g.to_string());
  return t;
}

// ------------------------------------------------------- partial R-matrices

LaurentPoly partial_r_coefficient(int l) {
  if (l < 0) throw std::invalid_argument("negative index");
  const LaurentPoly qd = LaurentPoly::var() - LaurentPoly::monomial(-1);
  LaurentPoly c = LaurentPoly::monomial(-l * (l - 1) / 2, l % 2 ? Rational(-1) : Rational(1));
  for (int t = 0; t < l; ++t) c *= qd;
  return c * qfact(l);
}

LaurentPoly partial_r_inverse_coefficient(int l) {
  if (l < 0) throw std::invalid_argument("negative index");
  const LaurentPoly qd = LaurentPoly::var() - LaurentPoly::monomial(-1);
  LaurentPoly c = LaurentPoly::monomial(l * (l - 1) / 2);
  for (int t = 0; t < l; ++t) c *= qd;
  return c * qfact(l);
}

SparseMatrix partial_R_i(const ModuleRealization& m1, const ModuleRealization& m2, Vertex i) {
  return partial_sum(m1, m2, i, false);
}

SparseMatrix partial_R_i_inverse(const ModuleRealization& m1, const ModuleRealization& m2,
                                 Vertex i) {
  return partial_sum(m1, m2, i, true);
}

std::optional<std::string> partial_R_conjugation_failure(const ModuleRealization& m1,
                                                         const ModuleRealization& m2, Vertex i) {
  const SparseMatrix r = partial_R_i(m1, m2, i);
  const SparseMatrix rinv = partial_R_i_inverse(m1, m2, i);
  const SparseMatrix tt = kron(braid_T_si(m1, i), braid_T_si(m2, i));
  for (const auto& g :
       {GeneratorSymbol::e(i), GeneratorSymbol::f(i), GeneratorSymbol::kkac(i, 1)}) {
    const SparseMatrix lhs = r * evaluate(m1, m2, coproduct_circ(g)) * rinv;
    const SparseMatrix rhs =
        conjugate(tt, evaluate(m1, m2, coproduct_circ(braid_inverse_image(m1.diagram(), i, g))));
    if (!(lhs == rhs)) return g.to_string();
  }
  return std::nullopt;
}

bool braid_product_law_check(const ModuleRealization& m1, const ModuleRealization& m2, Vertex i,
                             Vertex j) {
  if (m1.diagram().cartan(i, j) != -1)
    throw std::invalid_argument("product law check needs adjacent vertices");
  const SparseMatrix ti = kron(braid_T_si(m1, i), braid_T_si(m2, i));
  const SparseMatrix tj = kron(braid_T_si(m1, j), braid_T_si(m2, j));
  const SparseMatrix ri = partial_R_i(m1, m2, i);
  const SparseMatrix rj = partial_R_i(m1, m2, j);
  const SparseMatrix lhs = conjugate(ti * tj, ri) * conjugate(ti, rj) * ri;
  const SparseMatrix rhs = conjugate(tj * ti, rj) * conjugate(tj, ri) * rj;
  return lhs == rhs;
}

// ----------------------------------------------------------------- unipotence

UnipotenceReport unipotence_report(const ModuleRealization& m1, const ModuleRealization& m2,
                                   const IntertwinerResult& r) {
  if (!r.normalized) throw std::invalid_argument("unipotence needs a normalised intertwiner");
  if (!r.invertible) throw std::invalid_argument("unipotence needs an invertible intertwiner");
  const Index n1 = m1.dim(), n2 = m2.dim(), n = n1 * n2;
  const SparseMatrix rhat =
      r.kind == IntertwinerKind::Braiding ? flip_operator(n2, n1) * r.matrix : r.matrix;
  if (rhat.rows() != n || rhat.cols() != n)
    throw std::invalid_argument("intertwiner does not match the factors");

  auto strictly_above = [&](const Weight& mu, const Weight& nu) {
    return mu != nu && dominates(m1.diagram(), mu, nu);
  };

  UnipotenceReport rep;
  rep.weight_preserving = true;
  rep.filtration_lowering = true;
  const SparseMatrix nil = rhat - SparseMatrix::identity(n);
  for (Index u = 0; u < n; ++u) {
    for (const auto& [v, val] : rhat.row(u))
      if (m1.weights()[u / n2] + m2.weights()[u % n2] != m1.weights()[v / n2] + m2.weights()[v % n2])
        rep.weight_preserving = false;
    for (const auto& [v, val] : nil.row(u))
      if (!strictly_above(m1.weights()[v / n2], m1.weights()[u / n2]))
        rep.filtration_lowering = false;
  }
  rep.nilpotent = nil.pow(static_cast<unsigned>(n + 1)).is_zero();
  return rep;
}

bool unipotence_check(const ModuleRealization& m1, const ModuleRealization& m2,
                      const IntertwinerResult& r) {
  return unipotence_report(m1, m2, r).holds();
}

}  // namespace qloop
