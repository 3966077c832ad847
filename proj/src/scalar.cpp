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

#include "qloop/scalar.hpp"

#include <sstream>
#include <utility>

namespace qloop {

// ---------------------------------------------------------------- Rational

Rational::Rational(long n, long d) : Rational(BigInt(n), BigInt(d)) {}

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (d == 0) throw ArithmeticError("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s), BigInt(1));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(BigInt(s.substr(0, slash)), den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
}

Rational Rational::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpq_class r(1), b(v_);
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

// ------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms)
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& c) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace(exponent, c);
  return p;
}

int LaurentPoly::low_degree() const {
  if (is_zero()) throw ArithmeticError("degree of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::high_degree() const {
  if (is_zero()) throw ArithmeticError("degree of zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  Rational sum;
  for (const auto& [e, c] : terms_) sum += c * x.pow(e);
  return sum;
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

LaurentPoly LaurentPoly::scale_variable(const Rational& s) const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(e, c * s.pow(e));
  return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  Terms out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out[e1 + e2] += c1 * c2;
  *this = LaurentPoly(std::move(out));
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    if (e != 0) os << "*" << var << "^" << e;
  }
  return os.str();
}

namespace {

// Division with remainder of genuine polynomials (all exponents >= 0).
std::pair<LaurentPoly, LaurentPoly> poly_divmod(LaurentPoly a, const LaurentPoly& b) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  const int db = b.high_degree();
  const Rational lb = b.high_coeff();
  LaurentPoly quot;
  while (!a.is_zero() && a.high_degree() >= db) {
    const int shift = a.high_degree() - db;
    const LaurentPoly t = LaurentPoly::monomial(shift, a.high_coeff() / lb);
    quot += t;
    a -= t * b;
  }
  return {quot, a};
}

LaurentPoly monic(const LaurentPoly& p) {
  return p * LaurentPoly(p.high_coeff().inverse());
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    auto r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? LaurentPoly(1) : monic(a);
}

}  // namespace

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw ArithmeticError("exact division by zero");
  if (num.is_zero()) return {};
  const int sn = num.low_degree();
  const int sd = den.low_degree();
  auto [quot, rem] = poly_divmod(num.shifted(-sn), den.shifted(-sd));
  if (!rem.is_zero())
    throw ArithmeticError("non-exact division: " + num.to_string() + " / " + den.to_string());
  return quot.shifted(sn - sd);
}

// -------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int a = num_.low_degree();
  const int b = den_.low_degree();
  LaurentPoly n0 = num_.shifted(-a);
  LaurentPoly d0 = den_.shifted(-b);
  const LaurentPoly g = poly_gcd(n0, d0);
  if (g.high_degree() > 0) {
    n0 = divide_exact(n0, g);
    d0 = divide_exact(d0, g);
  }
  // Integer coefficients with content 1 and positive constant term.
  BigInt lcm_den = 1, gcd_num = 0;
  for (const auto& [e, c] : d0.terms()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  }
  for (const auto& [e, c] : d0.terms()) {
    const BigInt scaled = c.numerator() * (lcm_den / c.denominator());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational scale(lcm_den, gcd_num);
  if ((d0.low_coeff() * scale).sign() < 0) scale = -scale;
  num_ = (n0 * LaurentPoly(scale)).shifted(a - b);
  den_ = d0 * LaurentPoly(scale);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

RationalFunction RationalFunction::invert_variable() const {
  return RationalFunction(num_.invert_variable(), den_.invert_variable());
}

Rational RationalFunction::evaluate(const Rational& x) const {
  const Rational d = den_.evaluate(x);
  if (d.is_zero())
    throw ArithmeticError("pole: denominator " + den_.to_string() + " vanishes at " +
                          x.to_string());
  return num_.evaluate(x) / d;
}

namespace {

std::vector<Rational> series_divide(const std::vector<Rational>& n,
                                    const std::vector<Rational>& d, int terms) {
  std::vector<Rational> out(static_cast<std::size_t>(terms));
  const Rational inv0 = d.at(0).inverse();
  for (int k = 0; k < terms; ++k) {
    Rational acc = k < static_cast<int>(n.size()) ? n[k] : Rational(0);
    for (int j = 1; j <= k && j < static_cast<int>(d.size()); ++j) acc -= d[j] * out[k - j];
    out[k] = acc * inv0;
  }
  return out;
}

}  // namespace

std::vector<Rational> RationalFunction::expand_at_infinity(int terms, int* lead) const {
  if (is_zero()) {
    if (lead) *lead = 0;
    return std::vector<Rational>(static_cast<std::size_t>(terms));
  }
  const int dn = num_.high_degree();
  const int dd = den_.high_degree();
  std::vector<Rational> n, d;
  for (int k = 0; k <= dn - num_.low_degree(); ++k) n.push_back(num_.coeff(dn - k));
  for (int k = 0; k <= dd - den_.low_degree(); ++k) d.push_back(den_.coeff(dd - k));
  if (lead) *lead = dn - dd;
  return series_divide(n, d, terms);
}

std::vector<Rational> RationalFunction::expand_at_zero(int terms, int* lead) const {
  if (is_zero()) {
    if (lead) *lead = 0;
    return std::vector<Rational>(static_cast<std::size_t>(terms));
  }
  const int ln = num_.low_degree();
  const int ld = den_.low_degree();
  std::vector<Rational> n, d;
  for (int k = 0; k <= num_.high_degree() - ln; ++k) n.push_back(num_.coeff(ln + k));
  for (int k = 0; k <= den_.high_degree() - ld; ++k) d.push_back(den_.coeff(ld + k));
  if (lead) *lead = ln - ld;
  return series_divide(n, d, terms);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = RationalFunction(num_ * o.num_, den_ * o.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this *= o.inverse();
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction r = a;
  r.num_ = -r.num_;
  return r;
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

// ------------------------------------------------------------------ Scalar

Scalar Scalar::specialized(const Rational& zeta, const Rational& value) {
  require_valid_zeta(zeta);
  return Scalar(zeta, value);
}

const Rational& Scalar::value() const {
  if (is_generic()) throw std::logic_error("generic scalar has no specialized value");
  return value_;
}

const RationalFunction& Scalar::generic() const {
  if (!is_generic()) throw std::logic_error("specialized scalar has no generic value");
  return generic_;
}

Rational Scalar::at(const Rational& zeta) const {
  if (is_generic()) return specialize(generic_, zeta);
  if (*zeta_ != zeta)
    throw std::invalid_argument("scalar specialized at " + zeta_->to_string() +
                                " used at zeta = " + zeta.to_string());
  return value_;
}

Scalar Scalar::conjugate() const {
  if (is_generic()) return Scalar(generic_.invert_variable());
  return Scalar(zeta_->inverse(), value_);
}

bool Scalar::is_zero() const { return is_generic() ? generic_.is_zero() : value_.is_zero(); }

void Scalar::require_same_tag(const Scalar& o) const {
  if (zeta_ != o.zeta_) throw std::invalid_argument("mixing scalars from different fields");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  // Generic constants combine freely with specialized values.
  if (is_generic() && !o.is_generic()) {
    *this = Scalar(*o.zeta_, at(*o.zeta_) + o.value_);
    return *this;
  }
  if (!is_generic() && o.is_generic()) {
    value_ += o.at(*zeta_);
    return *this;
  }
  require_same_tag(o);
  if (is_generic()) generic_ += o.generic_;
  else value_ += o.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_generic() && !o.is_generic()) {
    *this = Scalar(*o.zeta_, at(*o.zeta_) * o.value_);
    return *this;
  }
  if (!is_generic() && o.is_generic()) {
    value_ *= o.at(*zeta_);
    return *this;
  }
  require_same_tag(o);
  if (is_generic()) generic_ *= o.generic_;
  else value_ *= o.value_;
  return *this;
}

Scalar operator-(const Scalar& a) {
  Scalar r = a;
  if (r.is_generic()) r.generic_ = -r.generic_;
  else r.value_ = -r.value_;
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.zeta_ != b.zeta_) return false;
  return a.is_generic() ? a.generic_ == b.generic_ : a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (is_generic()) return generic_.to_string();
  return value_.to_string() + " @ q=" + zeta_->to_string();
}

// --------------------------------------------------------- quantum numbers

LaurentPoly qint(int n) {
  if (n < 0) return -qint(-n);
  LaurentPoly r;
  for (int e = 1 - n; e <= n - 1; e += 2) r += LaurentPoly::monomial(e);
  return r;
}

LaurentPoly qfact(int n) {
  if (n < 0) throw std::invalid_argument("qfact of negative integer");
  LaurentPoly r(1);
  for (int k = 2; k <= n; ++k) r *= qint(k);
  return r;
}

LaurentPoly qbinom(int m, int p) {
  if (p < 0 || m < 0 || p > m) throw std::invalid_argument("qbinom requires 0 <= p <= m");
  return divide_exact(qfact(m), qfact(p) * qfact(m - p));
}

bool is_valid_zeta(const Rational& zeta) {
  return !zeta.is_zero() && zeta != Rational(1) && zeta != Rational(-1);
}

void require_valid_zeta(const Rational& zeta) {
  if (!is_valid_zeta(zeta))
    throw std::invalid_argument("zeta = " + zeta.to_string() +
                                " is zero or a root of unity; specialization excluded");
}

Rational specialize(const RationalFunction& f, const Rational& zeta) {
  require_valid_zeta(zeta);
  const Rational d = f.denominator().evaluate(zeta);
  if (d.is_zero())
    throw ArithmeticError("denominator " + f.denominator().to_string() +
                          " has the factor (q - " + zeta.to_string() + ")");
  return f.numerator().evaluate(zeta) / d;
}

Rational specialize(const LaurentPoly& f, const Rational& zeta) {
  require_valid_zeta(zeta);
  return f.evaluate(zeta);
}

}  // namespace qloop
