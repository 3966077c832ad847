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

#include "qloop/structure.hpp"

#include <deque>

#include "qloop/rmatrix.hpp"

namespace qloop {

namespace {

std::vector<SparseMatrix> closure_generators(const ModuleRealization& m) {
  std::vector<SparseMatrix> out;
  for (Vertex i = 0; i <= m.diagram().rank(); ++i)
    for (const auto& g : {GeneratorSymbol::e(i), GeneratorSymbol::f(i),
                          GeneratorSymbol::kkac(i, 1), GeneratorSymbol::kkac(i, -1)})
      out.push_back(m.act(g));
  return out;
}

Subspace closure(const ModuleRealization& m, const Vector& v, Index* processed) {
  if (v.size() != m.dim()) throw std::invalid_argument("vector outside the module");
  const auto gens = closure_generators(m);
  Subspace s(m.dim());
  std::deque<Vector> work;
  if (s.insert(v)) work.push_back(v);
  Index count = 0;
  while (!work.empty()) {
    const Vector w = work.front();
    work.pop_front();
    ++count;
    for (const auto& g : gens) {
      Vector u = g.apply(w);
      if (s.insert(u)) work.push_back(std::move(u));
    }
  }
  if (processed) *processed = count;
  return s;
}

}  // namespace

Subspace generated_submodule(const ModuleRealization& m, const Vector& v) {
  return closure(m, v, nullptr);
}

CyclicityResult cyclicity(const ModuleRealization& m, const Vector& v) {
  if (is_zero(v)) throw std::invalid_argument("cyclicity of the zero vector");
  CyclicityResult out;
  const Subspace s = closure(m, v, &out.witness_basis_size);
  out.submodule_dim = s.dim();
  out.cyclic = s.dim() == m.dim();
  return out;
}

bool is_cyclic(const ModuleRealization& m, const Vector& v) { return cyclicity(m, v).cyclic; }

ModulePtr dual_module(const ModulePtr& m) {
  const ModuleData& src = m->data();
  ModuleData data;
  data.diagram = src.diagram;
  data.zeta = src.zeta.inverse();
  data.dim = src.dim;
  data.weights = src.weights;
  data.spectral_params = src.spectral_params;
  data.coproduct = src.coproduct;
  data.name = "dual(" + src.name + ")";
  for (const auto& l : src.labels) data.labels.push_back(l + "*");
  for (const auto& [g, op] : src.kac_moody) data.kac_moody[g] = m->act(tau(g)).transpose();
  if (src.drinfeld) {
    std::vector<NodeDrinfeld> nodes;
    for (const auto& nd : *src.drinfeld) {
      NodeDrinfeld out;
      // x^+_{i,r} acts by (x^-_{i,-r})^T, and dually.
      for (const auto& t : nd.x_minus)
        out.x_plus.push_back({t.col, t.row, t.coef, t.param.inverse()});
      for (const auto& t : nd.x_plus)
        out.x_minus.push_back({t.col, t.row, t.coef, t.param.inverse()});
      for (const auto& f : nd.k_eigen) out.k_eigen.push_back(f.invert_variable());
      nodes.push_back(std::move(out));
    }
    data.drinfeld = std::move(nodes);
  }
  return std::make_shared<const ModuleRealization>(std::move(data));
}

CyclicityResult cocyclicity(const ModulePtr& m, const Vector& v) {
  if (v.size() != m->dim()) throw std::invalid_argument("vector outside the module");
  if (is_zero(v)) throw std::invalid_argument("cocyclicity of the zero vector");
  Index b = 0;
  while (v[b].is_zero()) ++b;
  const Weight& mu = m->weights()[b];
  Index multiplicity = 0;
  for (Index t = 0; t < m->dim(); ++t) {
    if (m->weights()[t] == mu) ++multiplicity;
    if (!v[t].is_zero() && m->weights()[t] != mu)
      throw std::invalid_argument("cocyclicity needs a weight vector");
  }
  if (multiplicity != 1)
    throw std::invalid_argument("cocyclicity needs a vector spanning a one-dimensional weight space");
  return cyclicity(*dual_module(m), unit_vector(m->dim(), b));
}

bool is_cocyclic(const ModulePtr& m, const Vector& v) { return cocyclicity(m, v).cyclic; }

ModulePtr standard_module(const DynkinDiagram& d, const std::vector<StandardFactor>& spec,
                          const Rational& zeta, Coproduct c) {
  require_valid_zeta(zeta);
  if (spec.empty()) throw std::invalid_argument("standard module needs at least one factor");
  ModulePtr out;
  for (const auto& f : spec) {
    ModulePtr v = evaluation_module(d, f.node, f.alpha * zeta.pow(f.shift), zeta);
    out = out ? tensor(out, v, c) : v;
  }
  return out;
}

// ------------------------------------------------------------ triangularity

namespace {

struct RecoveredModes {
  std::map<int, SparseMatrix> plus, minus;
};

// Drinfeld modes of an A_1 module from its Kac-Moody action.
RecoveredModes recover_modes(const ModuleRealization& m, int reach) {
  const Rational& q = m.zeta();
  const Rational two = specialize(qint(2), q);
  const SparseMatrix k = m.act(GeneratorSymbol::kkac(1, 1));
  const SparseMatrix kinv = m.act(GeneratorSymbol::kkac(1, -1));
  RecoveredModes out;
  out.plus[0] = m.act(GeneratorSymbol::e(1));
  out.minus[0] = m.act(GeneratorSymbol::f(1));
  out.minus[1] = m.act(GeneratorSymbol::e(0)) * k;
  out.plus[-1] = kinv * m.act(GeneratorSymbol::f(0));
  const SparseMatrix h1 = kinv * commutator(out.plus[0], out.minus[1]);
  const SparseMatrix hm1 = k * commutator(out.plus[-1], out.minus[0]);
  const Rational inv2 = two.inverse();
  for (int r = 0; r < reach; ++r) {
    out.plus[r + 1] = inv2 * commutator(h1, out.plus[r]);
    out.minus[-r - 1] = -inv2 * commutator(hm1, out.minus[-r]);
  }
  for (int r = 1; r < reach; ++r) out.minus[r + 1] = -inv2 * commutator(h1, out.minus[r]);
  for (int r = -1; r > -reach; --r) out.plus[r - 1] = inv2 * commutator(hm1, out.plus[r]);
  return out;
}

// Rows and columns whose index in factor `which` (0 or 1) equals `fixed`.
SparseMatrix block(const SparseMatrix& x, Index n1, Index n2, int which, Index fixed) {
  const Index n = which == 0 ? n2 : n1;
  SparseMatrix out(n, n);
  for (Index r = 0; r < x.rows(); ++r) {
    const Index rf = which == 0 ? r / n2 : r % n2;
    if (rf != fixed) continue;
    for (const auto& [c, v] : x.row(r)) {
      const Index cf = which == 0 ? c / n2 : c % n2;
      if (cf != fixed) continue;
      out.set(which == 0 ? r % n2 : r / n2, which == 0 ? c % n2 : c / n2, v);
    }
  }
  return out;
}

Index unit_index(const Vector& v) {
  Index hits = 0, at = 0;
  for (Index t = 0; t < v.size(); ++t)
    if (!v[t].is_zero()) {
      ++hits;
      at = t;
    }
  if (hits != 1) throw std::invalid_argument("highest weight vector is not a basis vector");
  return at;
}

Rational eigenvalue(const SparseMatrix& diag, Index b) { return diag.get(b, b); }

}  // namespace

TriangularReport triangular_coproduct_report(const ModulePtr& m1, const ModulePtr& m2, Vertex i,
                                             int r, int order) {
  const auto& d = m1->diagram();
  if (d.rank() != 1 || i != 1)
    throw std::invalid_argument("the triangular check is implemented for A_1, vertex 1");
  if (std::abs(r) > order)
    throw InsufficientData("series order " + std::to_string(order) +
                           " does not reach mode " + std::to_string(r));
  const ModulePtr t = tensor(m1, m2, Coproduct::Circ);
  const Index n1 = m1->dim(), n2 = m2->dim();
  const RecoveredModes modes = recover_modes(*t, std::abs(r) + 1);
  const SparseMatrix& xp = modes.plus.at(r);
  const SparseMatrix& xm = modes.minus.at(r);

  TriangularReport rep;
  const Index h1 = unit_index(highest_weight_tensor(*m1));
  const Index h2 = unit_index(highest_weight_tensor(*m2));
  auto lam_plus = [&](int s) { return eigenvalue(m1->act(GeneratorSymbol::k_plus(1, s)), h1); };
  auto lam_minus = [&](int s) { return eigenvalue(m1->act(GeneratorSymbol::k_minus(1, -s)), h1); };
  auto mu_plus = [&](int s) { return eigenvalue(m2->act(GeneratorSymbol::k_plus(1, s)), h2); };
  auto mu_minus = [&](int s) { return eigenvalue(m2->act(GeneratorSymbol::k_minus(1, -s)), h2); };

  SparseMatrix expect_plus(n2, n2);
  if (r >= 0) {
    for (int s = 0; s <= r; ++s)
      expect_plus += lam_plus(s) * m2->act(GeneratorSymbol::x_plus(1, r - s));
  } else {
    for (int s = 0; s <= -r - 1; ++s)
      expect_plus += lam_minus(s) * m2->act(GeneratorSymbol::x_plus(1, r + s));
  }
  rep.truncated_plus = block(xp, n1, n2, 0, h1) == expect_plus;

  SparseMatrix expect_minus(n1, n1);
  if (r <= 0) {
    for (int s = 0; s <= -r; ++s)
      expect_minus += mu_minus(s) * m1->act(GeneratorSymbol::x_minus(1, r + s));
  } else {
    for (int s = 0; s <= r - 1; ++s)
      expect_minus += mu_plus(s) * m1->act(GeneratorSymbol::x_minus(1, r - s));
  }
  rep.truncated_minus = block(xm, n1, n2, 1, h2) == expect_minus;

  const IntertwinerResult tw = solve_drinfeld_twist(m1, m2);
  if (!tw.normalized || !tw.invertible) {
    rep.detail = "twist intertwiner is not unique and invertible";
    return rep;
  }
  const ModulePtr dt = drinfeld_tensor(m1, m2);
  const SparseMatrix twinv = *tw.matrix.inverse();
  rep.twist_plus = tw.matrix * xp * twinv == dt->act(GeneratorSymbol::x_plus(1, r));
  rep.twist_minus = tw.matrix * xm * twinv == dt->act(GeneratorSymbol::x_minus(1, r));
  if (!rep.holds()) {
    rep.detail = std::string("failed:") + (rep.truncated_plus ? "" : " truncated x+") +
                 (rep.truncated_minus ? "" : " truncated x-") + (rep.twist_plus ? "" : " twist x+") +
                 (rep.twist_minus ? "" : " twist x-");
  }
  return rep;
}

bool triangular_coproduct_check(const ModulePtr& m1, const ModulePtr& m2, Vertex i, int r,
                                int order) {
  return triangular_coproduct_report(m1, m2, i, r, order).holds();
}

}  // namespace qloop
