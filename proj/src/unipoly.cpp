#include "qbraid/unipoly.hpp"

#include <algorithm>

namespace qbraid {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UniPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    bool negative = c.is_single_term() && c.numerator().leading_coefficient() < 0;
    Scalar magnitude = negative ? -c : c;
    std::string mag = magnitude.is_single_term() ? magnitude.to_string() : "(" + magnitude.to_string() + ")";
    std::string power = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string body;
    if (k == 0) body = mag;
    else if (magnitude.is_one()) body = power;
    else body = mag + "*" + power;
    if (first) out += (negative ? "-" : "") + body;
    else out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace qbraid
