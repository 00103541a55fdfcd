#pragma once

/**
 * @file scalar.hpp
 * @brief Exact arithmetic in Q(q), the field of rational functions in the
 * deformation parameter q with rational coefficients.
 *
 * A Scalar is kept in canonical form: numerator / denominator with
 *  - the denominator an ordinary polynomial in q with nonzero constant term,
 *    coprime integer coefficients and positive leading coefficient;
 *  - numerator and denominator coprime;
 *  - any power of q carried by the numerator (which is a Laurent polynomial).
 * Equality of Scalars is structural equality of canonical forms.
 */

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qbraid {

using Rational = mpq_class;

/// Raised on arithmetic that has no value in Q(q) (division by zero, poles).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Laurent polynomial in q with rational coefficients.
///
/// Stored densely: coefficient of q^(low + k) is coeffs[k]. The first and last
/// stored coefficients are nonzero; the zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c, int exponent = 0);
  LaurentPoly(int low, std::vector<Rational> coeffs);

  static LaurentPoly q_power(int exponent) { return LaurentPoly(Rational(1), exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() == 1 && low_ == 0; }
  bool is_one() const { return is_constant() && coeffs_[0] == 1; }
  bool is_monomial() const { return coeffs_.size() == 1; }

  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  int low() const { return low_; }
  /// Highest exponent with a nonzero coefficient (0 for the zero polynomial).
  int high() const { return coeffs_.empty() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const;

  Rational coefficient(int exponent) const;
  const std::vector<Rational>& raw_coefficients() const { return coeffs_; }
  const Rational& leading_coefficient() const { return coeffs_.back(); }

  /// Multiplies by q^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Substitutes q = q0. Throws MathError on a negative power with q0 = 0.
  Rational eval(const Rational& q0) const;

  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> coeffs_;
};

/// Ordinary-polynomial helpers used by the canonicalizer (inputs must have low() >= 0).
namespace poly {
/// Division with remainder; divisor must be nonzero.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
/// Monic gcd over Q; gcd(0, 0) = 0.
LaurentPoly gcd(LaurentPoly a, LaurentPoly b);
}  // namespace poly

/// Element of Q(q) in canonical form.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  explicit Scalar(LaurentPoly numerator);
  /// Builds num/den and canonicalizes. Throws MathError if den is zero.
  Scalar(LaurentPoly numerator, LaurentPoly denominator);

  static Scalar q() { return Scalar(LaurentPoly::q_power(1)); }
  static Scalar q_power(int k) { return Scalar(LaurentPoly::q_power(k)); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_zero() && num_.is_one(); }
  bool is_laurent() const { return den_.is_zero(); }

  const LaurentPoly& numerator() const { return num_; }
  /// Denominator polynomial; 1 when the scalar is a Laurent polynomial.
  LaurentPoly denominator() const { return den_.is_zero() ? LaurentPoly(Rational(1)) : den_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  Scalar pow(int k) const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical text in the Scalar grammar; re-parsing yields an equal Scalar.
  std::string to_string() const;

  /// True when to_string() is a single signed factor ("q", "-2/3*q^-1", "5").
  bool is_single_term() const { return den_.is_zero() && num_.term_count() <= 1; }

 private:
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;  // empty encodes 1
};

std::string rational_to_string(const Rational& r);

/// [n] at the given base: base^(n-1) + base^(n-3) + ... + base^(1-n). Throws on n < 0.
Scalar q_integer(int n, const Scalar& base = Scalar::q());

/// [n]! at the given base.
Scalar q_factorial(int n, const Scalar& base = Scalar::q());

/// Balanced q-binomial [n]! / ([r]! [n-r]!). Throws std::out_of_range unless 0 <= r <= n.
Scalar q_binomial(int n, int r, const Scalar& base = Scalar::q());

/// Exact substitution q = q0. Throws MathError at a pole.
Rational scalar_eval(const Scalar& s, const Rational& q0);

}  // namespace qbraid
