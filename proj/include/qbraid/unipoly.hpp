#pragma once

#include "qbraid/scalar.hpp"

#include <string>
#include <vector>

namespace qbraid {

/// Univariate polynomial in x over Q(q); coefficient k multiplies x^k.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);

  /// x - r
  static UniPoly linear_root(const Scalar& r) { return UniPoly({-r, Scalar(1L)}); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(int k) const;
  Scalar eval(const Scalar& x) const;

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Expanded form, e.g. "x^2 + (-q + q^-1)*x - 1".
  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Scalar> coeffs_;
};

}  // namespace qbraid
