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

#include "qloop/module.hpp"

#include <algorithm>
#include <numeric>

namespace qloop {

std::string to_string(Coproduct c) {
  switch (c) {
    case Coproduct::Circ: return "circ";
    case Coproduct::Bullet: return "bullet";
    case Coproduct::Drinfeld: return "drinfeld";
  }
  return "?";
}

namespace {

SparseMatrix mode_op(const std::vector<ModeTerm>& terms, int r, Index dim) {
  SparseMatrix out(dim, dim);
  for (const auto& t : terms) out.add(t.row, t.col, t.coef * t.param.pow(r));
  return out;
}

// alpha_i as a weight; alpha_0 = -theta.
Weight alpha_weight(const DynkinDiagram& d, Vertex i) {
  if (i == 0) return -root_as_weight(d, highest_root(d));
  return root_as_weight(d, simple_root(d, i));
}

// (alpha_i | mu); alpha_0 = -theta.
int alpha_pairing(const DynkinDiagram& d, Vertex i, const Weight& mu) {
  if (i == 0) return -pairing(highest_root(d), mu);
  return mu.coords[i - 1];
}

Rational coefficient_at_infinity(const RationalFunction& f, int r) {
  int lead = 0;
  (void)f.expand_at_infinity(1, &lead);
  const int k = r + lead;
  if (k < 0) return Rational(0);
  return f.expand_at_infinity(k + 1)[static_cast<std::size_t>(k)];
}

Rational coefficient_at_zero(const RationalFunction& f, int m) {
  int lead = 0;
  (void)f.expand_at_zero(1, &lead);
  const int k = m - lead;
  if (k < 0) return Rational(0);
  return f.expand_at_zero(k + 1)[static_cast<std::size_t>(k)];
}

void check_shift(const SparseMatrix& op, const std::vector<Weight>& weights, const Weight& shift,
                 const std::string& what) {
  for (Index r = 0; r < op.rows(); ++r)
    for (const auto& [c, v] : op.row(r))
      if (weights[r] != weights[c] + shift)
        throw std::invalid_argument(what + " does not shift weights by the simple root");
}

Vector kron_vector(const Vector& a, const Vector& b) {
  Vector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

std::vector<Rational> series_product(const std::vector<Rational>& a,
                                     const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n)
    for (std::size_t m = 0; m <= n; ++m) out[n] += a[m] * b[n - m];
  return out;
}

}  // namespace

// ---------------------------------------------------------- realization

ModuleRealization::ModuleRealization(ModuleData data, std::vector<ModulePtr> factors)
    : data_(std::move(data)), factors_(std::move(factors)) {
  const auto& d = data_.diagram;
  const int n = d.rank();
  require_valid_zeta(data_.zeta);
  if (data_.labels.size() != data_.dim || data_.weights.size() != data_.dim)
    throw std::invalid_argument("labels and weights must match the dimension");
  for (const auto& w : data_.weights)
    if (static_cast<int>(w.coords.size()) != n)
      throw std::invalid_argument("weight with the wrong number of coordinates");

  for (Vertex i = 0; i <= n; ++i) {
    for (const auto& g : {GeneratorSymbol::e(i), GeneratorSymbol::f(i),
                          GeneratorSymbol::kkac(i, 1), GeneratorSymbol::kkac(i, -1)}) {
      const auto it = data_.kac_moody.find(g);
      if (it == data_.kac_moody.end())
        throw std::invalid_argument("missing Kac-Moody operator " + g.to_string());
      if (it->second.rows() != data_.dim || it->second.cols() != data_.dim)
        throw std::invalid_argument("operator " + g.to_string() + " has the wrong shape");
    }
    const Weight a = alpha_weight(d, i);
    const SparseMatrix& k = data_.kac_moody.at(GeneratorSymbol::kkac(i, 1));
    const SparseMatrix& kinv = data_.kac_moody.at(GeneratorSymbol::kkac(i, -1));
    if (!k.is_diagonal() || !kinv.is_diagonal())
      throw std::invalid_argument("k operators must be diagonal");
    for (Index b = 0; b < data_.dim; ++b) {
      const Rational ev = data_.zeta.pow(alpha_pairing(d, i, data_.weights[b]));
      if (k.get(b, b) != ev || kinv.get(b, b) != ev.inverse())
        throw std::invalid_argument("k_" + std::to_string(i) +
                                    " eigenvalue disagrees with the weight of basis vector " +
                                    std::to_string(b));
    }
    check_shift(data_.kac_moody.at(GeneratorSymbol::e(i)), data_.weights, a,
                GeneratorSymbol::e(i).to_string());
    check_shift(data_.kac_moody.at(GeneratorSymbol::f(i)), data_.weights, -a,
                GeneratorSymbol::f(i).to_string());
  }

  if (data_.drinfeld) {
    if (static_cast<int>(data_.drinfeld->size()) != n)
      throw std::invalid_argument("Drinfeld data needs one entry per vertex");
    for (Vertex i = 1; i <= n; ++i) {
      const auto& nd = (*data_.drinfeld)[i - 1];
      const Weight a = alpha_weight(d, i);
      if (nd.k_eigen.size() != data_.dim)
        throw std::invalid_argument("k series needs one eigenvalue per basis vector");
      for (const auto* terms : {&nd.x_plus, &nd.x_minus})
        for (const auto& t : *terms) {
          if (t.row >= data_.dim || t.col >= data_.dim)
            throw std::invalid_argument("mode term outside the basis");
          if (t.param.is_zero()) throw std::invalid_argument("mode parameter must be nonzero");
          const Weight expect = terms == &nd.x_plus ? data_.weights[t.col] + a
                                                    : data_.weights[t.col] - a;
          if (data_.weights[t.row] != expect)
            throw std::invalid_argument("x modes of vertex " + std::to_string(i) +
                                        " do not shift weights by the simple root");
        }
      for (Index b = 0; b < data_.dim; ++b) {
        const Rational ev = data_.zeta.pow(data_.weights[b].coords[i - 1]);
        if (coefficient_at_infinity(nd.k_eigen[b], 0) != ev ||
            coefficient_at_zero(nd.k_eigen[b], 0) != ev.inverse())
          throw std::invalid_argument("k series of vertex " + std::to_string(i) +
                                      " does not start with k^{+-1}");
      }
    }
  }
}

const NodeDrinfeld& ModuleRealization::drinfeld(Vertex i) const {
  if (!data_.drinfeld)
    throw InsufficientData("realization '" + data_.name + "' carries no Drinfeld modes");
  if (i < 1 || i > data_.diagram.rank()) throw std::out_of_range("vertex out of range");
  return (*data_.drinfeld)[i - 1];
}

SparseMatrix ModuleRealization::mode_operator(const std::vector<ModeTerm>& terms, int r) const {
  return mode_op(terms, r, data_.dim);
}

SparseMatrix ModuleRealization::k_mode(Vertex i, int r) const {
  const auto& nd = drinfeld(i);
  Vector diag(data_.dim);
  for (Index b = 0; b < data_.dim; ++b)
    diag[b] = r >= 0 ? coefficient_at_infinity(nd.k_eigen[b], r)
                     : coefficient_at_zero(nd.k_eigen[b], -r);
  return SparseMatrix::diagonal(diag);
}

SparseMatrix ModuleRealization::act(const GeneratorSymbol& g) const {
  const int n = data_.diagram.rank();
  const bool affine_ok = g.is_kac_moody();
  if (g.node < (affine_ok ? 0 : 1) || g.node > n)
    throw std::out_of_range("generator " + g.to_string() + " outside the diagram");
  switch (g.kind) {
    case GenKind::E:
    case GenKind::F:
    case GenKind::KKac:
      return data_.kac_moody.at(g);
    case GenKind::K:
      return data_.kac_moody.at(GeneratorSymbol::kkac(g.node, g.index));
    case GenKind::KPlusMode:
      if (g.index == 0) return data_.kac_moody.at(GeneratorSymbol::kkac(g.node, 1));
      return k_mode(g.node, g.index);
    case GenKind::KMinusMode:
      if (g.index == 0) return data_.kac_moody.at(GeneratorSymbol::kkac(g.node, -1));
      return k_mode(g.node, g.index);
    case GenKind::XPlus:
      return mode_operator(drinfeld(g.node).x_plus, g.index);
    case GenKind::XMinus:
      return mode_operator(drinfeld(g.node).x_minus, g.index);
    case GenKind::H: {
      const int s = std::abs(g.index);
      const HOperators h = h_operators(*this, g.node, s);
      return g.index > 0 ? h.positive[s - 1] : h.negative[s - 1];
    }
  }
  throw std::logic_error("unknown generator kind");
}

// ------------------------------------------------------------ affine node

void attach_affine_node(ModuleData& data) {
  const auto& d = data.diagram;
  if (!d.is_type_a())
    throw std::invalid_argument("the affine node is only built from Drinfeld modes in type A");
  if (!data.drinfeld) throw std::invalid_argument("affine node needs Drinfeld modes");
  const int n = d.rank();
  const Index dim = data.dim;
  const Rational& q = data.zeta;
  auto xp = [&](Vertex i, int r) { return mode_op((*data.drinfeld)[i - 1].x_plus, r, dim); };
  auto xm = [&](Vertex i, int r) { return mode_op((*data.drinfeld)[i - 1].x_minus, r, dim); };

  Vector kth(dim), kth_inv(dim);
  for (Index b = 0; b < dim; ++b) {
    const int p = pairing(highest_root(d), data.weights[b]);
    kth[b] = q.pow(p);
    kth_inv[b] = q.pow(-p);
  }
  const SparseMatrix k_theta = SparseMatrix::diagonal(kth);
  const SparseMatrix k_theta_inv = SparseMatrix::diagonal(kth_inv);

  // e_0 = [x^-_{n,0}, ... [x^-_{2,0}, x^-_{1,1}]_u ...]_u k_theta^{-1},
  // f_0 = (-q)^{n-1} k_theta [x^+_{n,0}, ... [x^+_{2,0}, x^+_{1,-1}]_u ...]_u, u = q^{-1}.
  const Rational u = q.inverse();
  SparseMatrix lower = xm(1, 1);
  SparseMatrix raise = xp(1, -1);
  Rational c(1);
  for (Vertex j = 2; j <= n; ++j) {
    lower = xm(j, 0) * lower - u * (lower * xm(j, 0));
    raise = xp(j, 0) * raise - u * (raise * xp(j, 0));
    c *= -q;
  }
  data.kac_moody[GeneratorSymbol::e(0)] = lower * k_theta_inv;
  data.kac_moody[GeneratorSymbol::f(0)] = c * (k_theta * raise);
  data.kac_moody[GeneratorSymbol::kkac(0, 1)] = k_theta_inv;
  data.kac_moody[GeneratorSymbol::kkac(0, -1)] = k_theta;
}

// ------------------------------------------------------------ constructions

namespace {

void attach_finite_nodes_from_drinfeld(ModuleData& data) {
  const int n = data.diagram.rank();
  for (Vertex i = 1; i <= n; ++i) {
    const auto& nd = (*data.drinfeld)[i - 1];
    data.kac_moody[GeneratorSymbol::e(i)] = mode_op(nd.x_plus, 0, data.dim);
    data.kac_moody[GeneratorSymbol::f(i)] = mode_op(nd.x_minus, 0, data.dim);
    Vector k(data.dim), kinv(data.dim);
    for (Index b = 0; b < data.dim; ++b) {
      k[b] = data.zeta.pow(data.weights[b].coords[i - 1]);
      kinv[b] = k[b].inverse();
    }
    data.kac_moody[GeneratorSymbol::kkac(i, 1)] = SparseMatrix::diagonal(k);
    data.kac_moody[GeneratorSymbol::kkac(i, -1)] = SparseMatrix::diagonal(kinv);
  }
}

std::string subset_label(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(s[t]);
  }
  return out + "}";
}

}  // namespace

ModulePtr evaluation_module(const DynkinDiagram& d, Vertex node, const Rational& alpha,
                            const Rational& zeta) {
  if (!d.is_type_a())
    throw std::invalid_argument("evaluation modules are implemented in type A only");
  const int n = d.rank();
  if (node < 1 || node > n) throw std::invalid_argument("node outside the diagram");
  if (alpha.is_zero()) throw std::invalid_argument("spectral parameter must be nonzero");
  require_valid_zeta(zeta);

  // node-subsets of {0..n}, ordered by element sum then lexicographically.
  std::vector<std::vector<int>> subsets;
  std::vector<bool> mask(static_cast<std::size_t>(n + 1), false);
  std::fill(mask.begin(), mask.begin() + node, true);
  do {
    std::vector<int> s;
    for (int t = 0; t <= n; ++t)
      if (mask[t]) s.push_back(t);
    subsets.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    const int sa = std::accumulate(a.begin(), a.end(), 0);
    const int sb = std::accumulate(b.begin(), b.end(), 0);
    return sa != sb ? sa < sb : a < b;
  });
  std::map<std::vector<int>, Index> index;
  for (Index b = 0; b < subsets.size(); ++b) index[subsets[b]] = b;

  ModuleData data;
  data.diagram = d;
  data.zeta = zeta;
  data.dim = subsets.size();
  data.spectral_params = {SpectralParam{node, alpha, 0}};
  data.coproduct = Coproduct::Circ;
  data.name = "V(omega_" + std::to_string(node) + ")_" + alpha.to_string();
  for (const auto& s : subsets) {
    data.labels.push_back(subset_label(s));
    Weight w;
    for (Vertex j = 1; j <= n; ++j) {
      const bool lo = std::find(s.begin(), s.end(), j - 1) != s.end();
      const bool hi = std::find(s.begin(), s.end(), j) != s.end();
      w.coords.push_back(static_cast<int>(lo) - static_cast<int>(hi));
    }
    data.weights.push_back(w);
  }

  const Rational q = zeta;
  const RationalFunction z = RationalFunction::var();
  std::vector<NodeDrinfeld> nodes(static_cast<std::size_t>(n));
  for (Vertex j = 1; j <= n; ++j) {
    auto& nd = nodes[j - 1];
    nd.k_eigen.assign(data.dim, RationalFunction(1));
    for (Index b = 0; b < data.dim; ++b) {
      const auto& s = subsets[b];
      const auto pos_j = std::find(s.begin(), s.end(), j);
      const auto pos_jm = std::find(s.begin(), s.end(), j - 1);
      if (pos_j != s.end() && pos_jm == s.end()) {
        // bottom of the j-string: x^+ moves j to j-1
        const int p = static_cast<int>(pos_j - s.begin());
        const Rational c = alpha * q.pow(j + node - 2 - 2 * p);
        std::vector<int> t = s;
        t[p] = j - 1;
        const Index top = index.at(t);
        nd.x_plus.push_back({top, b, Rational(1), c});
        nd.x_minus.push_back({b, top, Rational(1), c});
        nd.k_eigen[b] = RationalFunction(q.inverse()) * (z - RationalFunction(q * q * c)) /
                        (z - RationalFunction(c));
        nd.k_eigen[top] = RationalFunction(q) * (z - RationalFunction(q.pow(-2) * c)) /
                          (z - RationalFunction(c));
      }
    }
  }
  data.drinfeld = std::move(nodes);
  attach_finite_nodes_from_drinfeld(data);
  attach_affine_node(data);
  return std::make_shared<const ModuleRealization>(std::move(data));
}

ModulePtr trivial_module(const DynkinDiagram& d, const Rational& zeta) {
  ModuleData data;
  data.diagram = d;
  data.zeta = zeta;
  data.dim = 1;
  data.labels = {"1"};
  data.weights = {Weight{std::vector<int>(static_cast<std::size_t>(d.rank()), 0)}};
  data.name = "trivial";
  for (Vertex i = 0; i <= d.rank(); ++i) {
    data.kac_moody[GeneratorSymbol::e(i)] = SparseMatrix(1, 1);
    data.kac_moody[GeneratorSymbol::f(i)] = SparseMatrix(1, 1);
    data.kac_moody[GeneratorSymbol::kkac(i, 1)] = SparseMatrix::identity(1);
    data.kac_moody[GeneratorSymbol::kkac(i, -1)] = SparseMatrix::identity(1);
  }
  std::vector<NodeDrinfeld> nodes(static_cast<std::size_t>(d.rank()));
  for (auto& nd : nodes) nd.k_eigen = {RationalFunction(1)};
  data.drinfeld = std::move(nodes);
  return std::make_shared<const ModuleRealization>(std::move(data));
}

namespace {

ModuleData tensor_skeleton(const ModulePtr& m1, const ModulePtr& m2, Coproduct c) {
  if (!(m1->diagram() == m2->diagram()))
    throw std::invalid_argument("tensor factors over different diagrams");
  if (m1->zeta() != m2->zeta())
    throw std::invalid_argument("tensor factors specialised at different zeta");
  ModuleData data;
  data.diagram = m1->diagram();
  data.zeta = m1->zeta();
  data.dim = m1->dim() * m2->dim();
  data.coproduct = c;
  data.name = "(" + m1->data().name + " x " + m2->data().name + ")";
  for (Index a = 0; a < m1->dim(); ++a)
    for (Index b = 0; b < m2->dim(); ++b) {
      data.labels.push_back(m1->labels()[a] + "⊗" + m2->labels()[b]);
      data.weights.push_back(m1->weights()[a] + m2->weights()[b]);
    }
  data.spectral_params = m1->spectral_params();
  data.spectral_params.insert(data.spectral_params.end(), m2->spectral_params().begin(),
                              m2->spectral_params().end());
  return data;
}

}  // namespace

ModulePtr tensor(const ModulePtr& m1, const ModulePtr& m2, Coproduct c) {
  if (c == Coproduct::Drinfeld) return drinfeld_tensor(m1, m2);
  ModuleData data = tensor_skeleton(m1, m2, c);
  for (Vertex i = 0; i <= data.diagram.rank(); ++i)
    for (const auto& g : {GeneratorSymbol::e(i), GeneratorSymbol::f(i),
                          GeneratorSymbol::kkac(i, 1), GeneratorSymbol::kkac(i, -1)}) {
      const TensorExpression t = c == Coproduct::Circ ? coproduct_circ(g) : coproduct_bullet(g);
      data.kac_moody[g] = evaluate(*m1, *m2, t);
    }
  return std::make_shared<const ModuleRealization>(std::move(data),
                                                   std::vector<ModulePtr>{m1, m2});
}

ModulePtr drinfeld_tensor(const ModulePtr& m1, const ModulePtr& m2) {
  ModuleData data = tensor_skeleton(m1, m2, Coproduct::Drinfeld);
  const int n = data.diagram.rank();
  const Index n1 = m1->dim();
  const Index n2 = m2->dim();
  auto idx = [&](Index a, Index b) { return a * n2 + b; };
  std::vector<NodeDrinfeld> nodes(static_cast<std::size_t>(n));
  for (Vertex j = 1; j <= n; ++j) {
    const auto& d1 = m1->drinfeld(j);
    const auto& d2 = m2->drinfeld(j);
    auto& nd = nodes[j - 1];
    // x^+(z) -> x^+(z) (x) 1 + k^+(z) (x) x^+(z)
    for (const auto& t : d1.x_plus)
      for (Index b = 0; b < n2; ++b) nd.x_plus.push_back({idx(t.row, b), idx(t.col, b), t.coef, t.param});
    for (const auto& t : d2.x_plus)
      for (Index a = 0; a < n1; ++a) {
        const Rational c = t.coef * d1.k_eigen[a].evaluate(t.param);
        if (!c.is_zero()) nd.x_plus.push_back({idx(a, t.row), idx(a, t.col), c, t.param});
      }
    // x^-(z) -> 1 (x) x^-(z) + x^-(z) (x) k^-(z)
    for (const auto& t : d2.x_minus)
      for (Index a = 0; a < n1; ++a) nd.x_minus.push_back({idx(a, t.row), idx(a, t.col), t.coef, t.param});
    for (const auto& t : d1.x_minus)
      for (Index b = 0; b < n2; ++b) {
        const Rational c = t.coef * d2.k_eigen[b].evaluate(t.param);
        if (!c.is_zero()) nd.x_minus.push_back({idx(t.row, b), idx(t.col, b), c, t.param});
      }
    for (Index a = 0; a < n1; ++a)
      for (Index b = 0; b < n2; ++b) nd.k_eigen.push_back(d1.k_eigen[a] * d2.k_eigen[b]);
  }
  data.drinfeld = std::move(nodes);
  attach_finite_nodes_from_drinfeld(data);
  attach_affine_node(data);
  return std::make_shared<const ModuleRealization>(std::move(data),
                                                   std::vector<ModulePtr>{m1, m2});
}

// ------------------------------------------------------ highest weights

std::vector<Vector> highest_weight_vectors(const ModuleRealization& m) {
  std::vector<SparseRow> eqs;
  auto add_rows = [&](const SparseMatrix& x) {
    for (Index r = 0; r < x.rows(); ++r)
      if (!x.row(r).empty()) eqs.push_back(x.row(r));
  };
  for (Vertex i = 1; i <= m.diagram().rank(); ++i) {
    add_rows(m.act(GeneratorSymbol::e(i)));
    if (m.has_drinfeld())
      for (int r = -2; r <= 2; ++r) add_rows(m.act(GeneratorSymbol::x_plus(i, r)));
  }
  return nullspace(eqs, m.dim());
}

Vector highest_weight_tensor(const ModuleRealization& m) {
  if (!m.factors().empty()) {
    Vector v = highest_weight_tensor(*m.factors()[0]);
    for (std::size_t t = 1; t < m.factors().size(); ++t)
      v = kron_vector(v, highest_weight_tensor(*m.factors()[t]));
    return v;
  }
  const auto hw = highest_weight_vectors(m);
  if (hw.size() != 1)
    throw std::invalid_argument("module has " + std::to_string(hw.size()) +
                                " independent highest weight vectors");
  return hw.front();
}

KSeries k_series(const ModuleRealization& m, Vertex i, int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  KSeries out;
  for (int r = 0; r <= order; ++r) {
    out.plus.push_back(m.act(GeneratorSymbol::k_plus(i, r)));
    out.minus.push_back(m.act(GeneratorSymbol::k_minus(i, -r)));
  }
  return out;
}

HOperators h_operators(const ModuleRealization& m, Vertex i, int s_max) {
  const KSeries ks = k_series(m, i, s_max);
  const Rational qd = m.zeta() - m.zeta().inverse();
  auto logs = [&](const SparseMatrix& k0inv, const std::vector<SparseMatrix>& modes) {
    std::vector<SparseMatrix> s, l;
    for (int t = 1; t <= s_max; ++t) s.push_back(k0inv * modes[t]);
    for (int t = 1; t <= s_max; ++t) {
      SparseMatrix acc = s[t - 1];
      for (int u = 1; u < t; ++u) acc -= Rational(u, t) * (l[u - 1] * s[t - u - 1]);
      l.push_back(acc);
    }
    return l;
  };
  HOperators out;
  for (const auto& l : logs(ks.minus[0], ks.plus)) out.positive.push_back(qd.inverse() * l);
  for (const auto& l : logs(ks.plus[0], ks.minus)) out.negative.push_back(-qd.inverse() * l);
  return out;
}

std::vector<Rational> highest_weight_series(const ModuleRealization& m, Vertex i, int order) {
  if (!m.has_drinfeld() && m.factors().size() == 2) {
    return series_product(highest_weight_series(*m.factors()[0], i, order),
                          highest_weight_series(*m.factors()[1], i, order));
  }
  const Vector v = highest_weight_tensor(m);
  Index b = 0;
  while (v[b].is_zero()) ++b;
  std::vector<Rational> out;
  for (int r = 0; r <= order; ++r) {
    const Vector w = m.act(GeneratorSymbol::k_plus(i, r)).apply(v);
    const Rational lambda = w[b] / v[b];
    for (Index t = 0; t < v.size(); ++t)
      if (w[t] != lambda * v[t])
        throw std::logic_error("highest weight vector is not a k-eigenvector");
    out.push_back(lambda);
  }
  return out;
}

namespace {

// Basis vector spanning the weight space of the unique maximal weight, if there is one.
std::optional<Vector> top_weight_vector(const ModuleRealization& m) {
  const auto& ws = m.weights();
  for (Index b = 0; b < m.dim(); ++b) {
    bool top = true;
    for (Index c = 0; c < m.dim() && top; ++c) {
      if (c == b) continue;
      if (ws[c] == ws[b] || !dominates(m.diagram(), ws[b], ws[c])) top = false;
    }
    if (top) return unit_vector(m.dim(), b);
  }
  return std::nullopt;
}

}  // namespace

std::vector<LaurentPoly> drinfeld_polynomials(const ModuleRealization& m) {
  Vector v;
  if (auto top = top_weight_vector(m)) {
    v = *top;
  } else {
    const auto hw = highest_weight_vectors(m);
    if (hw.size() != 1)
      throw std::invalid_argument("module has " + std::to_string(hw.size()) +
                                  " independent highest weight vectors");
    v = hw.front();
  }
  for (Vertex i = 1; i <= m.diagram().rank(); ++i)
    if (!is_zero(m.act(GeneratorSymbol::e(i)).apply(v)))
      throw std::invalid_argument("top weight vector is not a highest weight vector");
  Index b = 0;
  while (v[b].is_zero()) ++b;
  const Weight& lambda = m.weights()[b];
  const Rational& q = m.zeta();

  std::vector<LaurentPoly> out;
  for (Vertex i = 1; i <= m.diagram().rank(); ++i) {
    const int d = lambda.coords[i - 1];
    if (d < 0) throw std::logic_error("highest weight is not dominant");
    const int order = 2 * d + 2;
    const auto g = highest_weight_series(m, i, order);
    auto gc = [&](int k) { return k < 0 || k > order ? Rational(0) : g[k]; };
    // P(q^{-1} z) g(z) = q^{-d} P(q z), coefficient of z^{d-n} for n = 0..order.
    std::vector<SparseRow> eqs;
    for (int nn = 0; nn <= order; ++nn) {
      SparseRow row;
      for (int t = 0; t <= d; ++t) {
        Rational c = q.pow(-t) * gc(t - d + nn);
        if (nn <= d && t == d - nn) c -= q.pow(-nn);
        if (!c.is_zero()) row[static_cast<Index>(t)] = c;
      }
      if (!row.empty()) eqs.push_back(row);
    }
    const auto ns = nullspace(eqs, static_cast<Index>(d + 1));
    if (ns.size() != 1 || ns[0][d].is_zero())
      throw std::logic_error("k-series of vertex " + std::to_string(i) +
                             " is not of Drinfeld-polynomial form");
    LaurentPoly::Terms terms;
    for (int t = 0; t <= d; ++t)
      if (!ns[0][t].is_zero()) terms[t] = ns[0][t] / ns[0][d];
    out.emplace_back(terms);
  }
  return out;
}

}  // namespace qloop
