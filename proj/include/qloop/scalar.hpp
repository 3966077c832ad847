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

#ifndef QLOOP_SCALAR_HPP
#define QLOOP_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qloop {

/// Raised when an exact computation hits a mathematically invalid state
/// (pole, non-exact division, invalid specialization).
class ArithmeticError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using BigInt = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  Rational(const BigInt& n, const BigInt& d);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "n", "n/d" (d may be negative; the result is canonical).
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt numerator() const { return v_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return v_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] bool is_one() const { return v_ == 1; }
  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] const mpq_class& raw() const { return v_; }

  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational pow(long e) const;
  [[nodiscard]] Rational abs() const { return Rational(::abs(v_)); }

  /// "num/den" with explicit denominator (always, even for integers).
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_;
};

/// Laurent polynomial in one indeterminate with exact rational coefficients.
/// No zero coefficient is ever stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(int exponent, const Rational& c = Rational(1));
  /// The indeterminate itself.
  static LaurentPoly var() { return monomial(1); }

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] int low_degree() const;
  [[nodiscard]] int high_degree() const;
  [[nodiscard]] Rational coeff(int exponent) const;
  [[nodiscard]] Rational low_coeff() const { return coeff(low_degree()); }
  [[nodiscard]] Rational high_coeff() const { return coeff(high_degree()); }

  [[nodiscard]] Rational evaluate(const Rational& x) const;
  /// Substitutes x -> x^{-1}.
  [[nodiscard]] LaurentPoly invert_variable() const;
  /// Substitutes x -> c*x.
  [[nodiscard]] LaurentPoly scale_variable(const Rational& c) const;
  [[nodiscard]] LaurentPoly shifted(int by) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  [[nodiscard]] std::string to_string(std::string_view var = "q") const;

 private:
  Terms terms_;
};

/// Exact quotient; throws ArithmeticError when `den` does not divide `num`.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// Element of Q(x), kept in the canonical form
///   numerator / denominator,
/// where the denominator is a genuine polynomial with nonzero constant term,
/// integer coefficients of content 1 and positive constant term, and
/// gcd(numerator, denominator) = 1 up to monomials. Equality is syntactic.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : RationalFunction(LaurentPoly(c)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(LaurentPoly(c)) {}  // NOLINT
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);

  static RationalFunction var() { return RationalFunction(LaurentPoly::var()); }

  [[nodiscard]] const LaurentPoly& numerator() const { return num_; }
  [[nodiscard]] const LaurentPoly& denominator() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_polynomial() const { return den_ == LaurentPoly(1); }

  [[nodiscard]] RationalFunction inverse() const;
  [[nodiscard]] RationalFunction pow(int e) const;
  /// Substitutes x -> x^{-1}.
  [[nodiscard]] RationalFunction invert_variable() const;
  /// Throws ArithmeticError at a pole.
  [[nodiscard]] Rational evaluate(const Rational& x) const;

  /// Coefficients c_0, c_1, ... of the expansion in powers of x^{-1}
  /// after removing the leading power: f = x^{d} (c_0 + c_1 x^{-1} + ...).
  /// `lead` receives d. Used for series at infinity.
  [[nodiscard]] std::vector<Rational> expand_at_infinity(int terms, int* lead = nullptr) const;
  /// Coefficients of the expansion in nonnegative powers of x around 0,
  /// starting at x^{d}; `lead` receives d.
  [[nodiscard]] std::vector<Rational> expand_at_zero(int terms, int* lead = nullptr) const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  [[nodiscard]] std::string to_string(std::string_view var = "q") const;

 private:
  void canonicalize();
  LaurentPoly num_;
  LaurentPoly den_;
};

/// Ground-field element: either a rational number in the specialization
/// q = zeta, or a generic rational function of q.
class Scalar {
 public:
  /// Generic scalar.
  Scalar(const RationalFunction& f) : generic_(f) {}  // NOLINT(google-explicit-constructor)
  Scalar(long c) : generic_(RationalFunction(c)) {}   // NOLINT
  static Scalar specialized(const Rational& zeta, const Rational& value);
  static Scalar q() { return Scalar(RationalFunction::var()); }

  [[nodiscard]] bool is_generic() const { return !zeta_.has_value(); }
  [[nodiscard]] const std::optional<Rational>& zeta() const { return zeta_; }
  [[nodiscard]] const Rational& value() const;
  [[nodiscard]] const RationalFunction& generic() const;

  /// Value in the specialization q = zeta (no-op for matching specialized values).
  [[nodiscard]] Rational at(const Rational& zeta) const;
  /// Semilinear conjugation q -> q^{-1}; specialized values move to zeta^{-1}.
  [[nodiscard]] Scalar conjugate() const;
  [[nodiscard]] bool is_zero() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator-(const Scalar& a);
  friend bool operator==(const Scalar& a, const Scalar& b);

  [[nodiscard]] std::string to_string() const;

 private:
  Scalar(const Rational& zeta, const Rational& value) : zeta_(zeta), value_(value) {}
  void require_same_tag(const Scalar& o) const;

  std::optional<Rational> zeta_;
  Rational value_;
  RationalFunction generic_;
};

/// Quantum integer [n] = q^{1-n} + q^{3-n} + ... + q^{n-1}; [-n] = -[n].
LaurentPoly qint(int n);
/// [n]! = [n][n-1]...[2]; throws std::invalid_argument for n < 0.
LaurentPoly qfact(int n);
/// [m]! / ([p]! [m-p]!), computed by exact division.
LaurentPoly qbinom(int m, int p);

/// True iff zeta is not zero and not a root of unity (for rationals: not 0, 1, -1).
bool is_valid_zeta(const Rational& zeta);
/// Throws std::invalid_argument unless is_valid_zeta(zeta).
void require_valid_zeta(const Rational& zeta);

/// Evaluates f at q = zeta. Throws ArithmeticError naming the factor (q - zeta)
/// when the denominator vanishes.
Rational specialize(const RationalFunction& f, const Rational& zeta);
Rational specialize(const LaurentPoly& f, const Rational& zeta);

}  // namespace qloop

#endif  // QLOOP_SCALAR_HPP
