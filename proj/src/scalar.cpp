#include "qbraid/scalar.hpp"

#include <algorithm>
#include <cstdlib>

namespace qbraid {

LaurentPoly::LaurentPoly(const Rational& c, int exponent) : low_(exponent) {
  if (c != 0) coeffs_.push_back(c);
  for (auto& x : coeffs_) x.canonicalize();
  trim();
}

LaurentPoly::LaurentPoly(int low, std::vector<Rational> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  for (auto& x : coeffs_) x.canonicalize();
  trim();
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; }));
}

Rational LaurentPoly::coefficient(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.coeffs_.empty()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_ || hi > high()) {
    std::vector<Rational> grown(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) grown[static_cast<std::size_t>(low_ - lo) + k] = std::move(coeffs_[k]);
    coeffs_ = std::move(grown);
    low_ = lo;
  }
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[static_cast<std::size_t>(o.low_ - low_) + k] += o.coeffs_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(a.low_ + b.low_, std::move(out));
}

Rational LaurentPoly::eval(const Rational& q0) const {
  if (is_zero()) return 0;
  if (q0 == 0) {
    if (low_ < 0) throw MathError("negative power of q evaluated at q = 0");
    return coefficient(0);
  }
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
  Rational base = low_ >= 0 ? q0 : Rational(1) / q0;
  Rational scale = 1;
  for (int k = 0; k < std::abs(low_); ++k) scale *= base;
  return acc * scale;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    const Rational& c = coeffs_[static_cast<std::size_t>(e - low_)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    std::string body;
    if (e == 0) {
      body = rational_to_string(magnitude);
    } else {
      std::string qpart = e == 1 ? "q" : "q^" + std::to_string(e);
      body = magnitude == 1 ? qpart : rational_to_string(magnitude) + "*" + qpart;
    }
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

namespace poly {

namespace {
std::vector<Rational> dense(const LaurentPoly& p) {
  if (p.low() < 0) throw std::logic_error("poly::dense: negative exponent");
  std::vector<Rational> out(static_cast<std::size_t>(p.high() + 1));
  for (int e = p.low(); e <= p.high(); ++e) out[static_cast<std::size_t>(e)] = p.coefficient(e);
  return out;
}
}  // namespace

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  if (a.is_zero()) return {};
  std::vector<Rational> rem = dense(a);
  const std::vector<Rational> div = dense(b);
  const std::size_t db = div.size() - 1;
  if (rem.size() - 1 < db) return {LaurentPoly(), a};
  std::vector<Rational> quot(rem.size() - db);
  const Rational lead_inv = Rational(1) / div.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rational c = rem[k] * lead_inv;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * div[j];
    quot[k - db] = std::move(c);
  }
  return {LaurentPoly(0, std::move(quot)), LaurentPoly(0, std::move(rem))};
}

LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    b *= Rational(1) / b.leading_coefficient();
    LaurentPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= Rational(1) / a.leading_coefficient();
  return a;
}

}  // namespace poly

Scalar::Scalar(long value) : num_(Rational(value)) {}
Scalar::Scalar(const Rational& value) : num_(value) {}
Scalar::Scalar(LaurentPoly numerator) : num_(std::move(numerator)) {}

Scalar::Scalar(LaurentPoly numerator, LaurentPoly denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw MathError("division by the zero polynomial");
  canonicalize();
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly();
    return;
  }
  if (den_.is_zero()) return;
  const int shift = den_.low();
  if (shift != 0) {
    den_ = den_.shifted(-shift);
    num_ = num_.shifted(-shift);
  }
  if (!den_.is_constant()) {
    const int num_low = num_.low();
    LaurentPoly n0 = num_.shifted(-num_low);
    LaurentPoly g = poly::gcd(n0, den_);
    if (g.high() > 0) {
      num_ = poly::divmod(n0, g).first.shifted(num_low);
      den_ = poly::divmod(den_, g).first;
    }
  }
  if (den_.is_constant()) {
    num_ *= Rational(1) / den_.coefficient(0);
    den_ = LaurentPoly();
    return;
  }
  // Scale so the denominator has coprime integer coefficients and positive leading term.
  mpz_class lcm_den = 1;
  mpz_class gcd_num = 0;
  for (const auto& c : den_.raw_coefficients()) {
    if (c == 0) continue;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& c : den_.raw_coefficients()) {
    if (c == 0) continue;
    mpz_class scaled = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(lcm_den, gcd_num);
  factor.canonicalize();
  if (den_.leading_coefficient() < 0) factor = -factor;
  if (factor != 1) {
    den_ *= factor;
    num_ *= factor;
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_zero() && o.den_.is_zero()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.denominator() + o.num_ * denominator();
    den_ = denominator() * o.denominator();
  }
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (o.den_.is_zero() && o.num_.is_monomial()) {
    // A monomial shares no factor with a denominator that does not vanish at 0.
    num_ = num_ * o.num_;
    return *this;
  }
  if (den_.is_zero() && o.den_.is_zero()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = denominator() * o.denominator();
  canonicalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError("division by zero scalar");
  return Scalar(denominator(), num_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1L);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (den_.is_zero()) return num_.to_string();
  std::string n = num_.term_count() > 1 ? "(" + num_.to_string() + ")" : num_.to_string();
  return n + "/(" + den_.to_string() + ")";
}

Scalar q_integer(int n, const Scalar& base) {
  if (n < 0) throw std::invalid_argument("q_integer: negative n");
  Scalar sum;
  for (int k = 0; k < n; ++k) sum += base.pow(n - 1 - 2 * k);
  return sum;
}

Scalar q_factorial(int n, const Scalar& base) {
  Scalar f(1L);
  for (int k = 2; k <= n; ++k) f *= q_integer(k, base);
  return f;
}

Scalar q_binomial(int n, int r, const Scalar& base) {
  if (r < 0 || r > n) throw std::out_of_range("q_binomial: r must satisfy 0 <= r <= n");
  return q_factorial(n, base) / (q_factorial(r, base) * q_factorial(n - r, base));
}

Rational scalar_eval(const Scalar& s, const Rational& q0) {
  const Rational den = s.denominator().eval(q0);
  if (den == 0) throw MathError("scalar has a pole at q = " + rational_to_string(q0));
  return s.numerator().eval(q0) / den;
}

}  // namespace qbraid
