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

#include "qloop/algebra.hpp"

#include <stdexcept>

#include "qloop/module.hpp"

namespace qloop {

GeneratorSymbol GeneratorSymbol::k_plus(Vertex i, int r) {
  if (r < 0) throw std::invalid_argument("k^+ modes are nonnegative");
  return {GenKind::KPlusMode, i, r};
}

GeneratorSymbol GeneratorSymbol::k_minus(Vertex i, int r) {
  if (r > 0) throw std::invalid_argument("k^- modes are nonpositive");
  return {GenKind::KMinusMode, i, r};
}

GeneratorSymbol GeneratorSymbol::k(Vertex i, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("k exponent must be +1 or -1");
  return {GenKind::K, i, sign};
}

GeneratorSymbol GeneratorSymbol::h(Vertex i, int s) {
  if (s == 0) throw std::invalid_argument("h_{i,0} is not a generator");
  return {GenKind::H, i, s};
}

GeneratorSymbol GeneratorSymbol::kkac(Vertex i, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("k exponent must be +1 or -1");
  return {GenKind::KKac, i, sign};
}

std::string GeneratorSymbol::to_string() const {
  const std::string i = std::to_string(node);
  const std::string r = std::to_string(index);
  switch (kind) {
    case GenKind::XPlus: return "x+[" + i + "," + r + "]";
    case GenKind::XMinus: return "x-[" + i + "," + r + "]";
    case GenKind::KPlusMode: return "k+[" + i + "," + r + "]";
    case GenKind::KMinusMode: return "k-[" + i + "," + r + "]";
    case GenKind::K: return index > 0 ? "k[" + i + "]" : "k[" + i + "]^-1";
    case GenKind::H: return "h[" + i + "," + r + "]";
    case GenKind::E: return "e[" + i + "]";
    case GenKind::F: return "f[" + i + "]";
    case GenKind::KKac: return index > 0 ? "K[" + i + "]" : "K[" + i + "]^-1";
  }
  return "?";
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t n = 0; n < w.size(); ++n) {
    if (n) out += " ";
    out += w[n].to_string();
  }
  return out;
}

// ---------------------------------------------------------------- elements

AlgebraElement::AlgebraElement(const GeneratorSymbol& g) : terms{{Scalar(1), Word{g}}} {}
AlgebraElement::AlgebraElement(Scalar c, Word w) : terms{{std::move(c), std::move(w)}} {}

AlgebraElement AlgebraElement::one() { return AlgebraElement(Scalar(1), Word{}); }

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  for (const auto& x : a.terms) {
    for (const auto& y : b.terms) {
      Word w = x.word;
      w.insert(w.end(), y.word.begin(), y.word.end());
      out.terms.push_back({x.coeff * y.coeff, std::move(w)});
    }
  }
  return out;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a) {
  AlgebraElement out = a;
  for (auto& t : out.terms) t.coeff = c * t.coeff;
  return out;
}

TensorExpression& TensorExpression::operator+=(const TensorExpression& o) {
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

TensorExpression operator*(const TensorExpression& a, const TensorExpression& b) {
  TensorExpression out;
  for (const auto& x : a.terms) {
    for (const auto& y : b.terms) {
      Word l = x.left;
      l.insert(l.end(), y.left.begin(), y.left.end());
      Word r = x.right;
      r.insert(r.end(), y.right.begin(), y.right.end());
      out.terms.push_back({x.coeff * y.coeff, std::move(l), std::move(r)});
    }
  }
  return out;
}

TensorExpression operator*(const Scalar& c, const TensorExpression& a) {
  TensorExpression out = a;
  for (auto& t : out.terms) t.coeff = c * t.coeff;
  return out;
}

// --------------------------------------------------------------- coproducts

namespace {

TensorExpression pure(Word l, Word r) {
  TensorExpression t;
  t.terms.push_back({Scalar(1), std::move(l), std::move(r)});
  return t;
}

TensorExpression unit_tensor() { return pure({}, {}); }

TensorExpression flip(const TensorExpression& t) {
  TensorExpression out;
  for (const auto& x : t.terms) out.terms.push_back({x.coeff, x.right, x.left});
  return out;
}

}  // namespace

TensorExpression coproduct_circ(const GeneratorSymbol& g) {
  const Vertex i = g.node;
  switch (g.kind) {
    case GenKind::E:
      return pure({g}, {}) + pure({GeneratorSymbol::kkac(i, 1)}, {g});
    case GenKind::F:
      return pure({g}, {GeneratorSymbol::kkac(i, -1)}) + pure({}, {g});
    case GenKind::KKac:
      return pure({g}, {g});
    default:
      throw std::invalid_argument("no closed coproduct formula for " + g.to_string());
  }
}

TensorExpression coproduct_circ(const Word& w) {
  TensorExpression out = unit_tensor();
  for (const auto& g : w) out = out * coproduct_circ(g);
  return out;
}

TensorExpression coproduct_circ(const AlgebraElement& a) {
  TensorExpression out;
  for (const auto& t : a.terms) out += t.coeff * coproduct_circ(t.word);
  return out;
}

TensorExpression coproduct_bullet(const GeneratorSymbol& g) { return flip(coproduct_circ(g)); }
TensorExpression coproduct_bullet(const Word& w) { return flip(coproduct_circ(w)); }
TensorExpression coproduct_bullet(const AlgebraElement& a) { return flip(coproduct_circ(a)); }

// ---------------------------------------------------------------------- tau

GeneratorSymbol tau(const GeneratorSymbol& g) {
  const Vertex i = g.node;
  switch (g.kind) {
    case GenKind::XPlus: return GeneratorSymbol::x_minus(i, -g.index);
    case GenKind::XMinus: return GeneratorSymbol::x_plus(i, -g.index);
    case GenKind::KPlusMode: return GeneratorSymbol::k_minus(i, -g.index);
    case GenKind::KMinusMode: return GeneratorSymbol::k_plus(i, -g.index);
    case GenKind::K: return GeneratorSymbol::k(i, -g.index);
    case GenKind::H: return GeneratorSymbol::h(i, -g.index);
    case GenKind::E: return GeneratorSymbol::f(i);
    case GenKind::F: return GeneratorSymbol::e(i);
    case GenKind::KKac: return GeneratorSymbol::kkac(i, -g.index);
  }
  throw std::logic_error("unknown generator kind");
}

Word tau(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(tau(*it));
  return out;
}

AlgebraElement tau(const AlgebraElement& a) {
  AlgebraElement out;
  for (const auto& t : a.terms) out.terms.push_back({t.coeff.conjugate(), tau(t.word)});
  return out;
}

TensorExpression tau(const TensorExpression& t) {
  TensorExpression out;
  for (const auto& x : t.terms)
    out.terms.push_back({x.coeff.conjugate(), tau(x.left), tau(x.right)});
  return out;
}

// --------------------------------------------------------------- evaluation

SparseMatrix evaluate(const ModuleRealization& m, const Word& w) {
  SparseMatrix out = SparseMatrix::identity(m.dim());
  for (const auto& g : w) out = out * m.act(g);
  return out;
}

SparseMatrix evaluate(const ModuleRealization& m, const AlgebraElement& a) {
  SparseMatrix out(m.dim(), m.dim());
  for (const auto& t : a.terms) out += t.coeff.at(m.zeta()) * evaluate(m, t.word);
  return out;
}

SparseMatrix evaluate(const ModuleRealization& m1, const ModuleRealization& m2,
                      const TensorExpression& t) {
  if (m1.zeta() != m2.zeta())
    throw std::invalid_argument("tensor factors specialised at different zeta");
  SparseMatrix out(m1.dim() * m2.dim(), m1.dim() * m2.dim());
  for (const auto& x : t.terms) {
    const Rational c = x.coeff.at(m1.zeta());
    if (c.is_zero()) continue;
    out += c * kron(evaluate(m1, x.left), evaluate(m2, x.right));
  }
  return out;
}

}  // namespace qloop
