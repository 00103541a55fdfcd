#pragma once

// Hand-rolled generators for property tests. Seeds are fixed so failures reproduce.

#include "qbraid/matrix.hpp"
#include "qbraid/ncpoly.hpp"
#include "qbraid/scalar.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace qbraid::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  LaurentPoly laurent(int max_terms = 3, int max_exp = 3) {
    LaurentPoly p;
    const int terms = integer(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      Rational c(integer(-5, 5), integer(1, 3));
      p += LaurentPoly(c, integer(-max_exp, max_exp));
    }
    return p;
  }

  /// Random element of Q(q); about one in three has a nontrivial denominator.
  Scalar scalar() {
    LaurentPoly num = laurent();
    if (integer(0, 2) != 0) return Scalar(num);
    LaurentPoly den = laurent(2, 2);
    if (den.is_zero()) return Scalar(num);
    return Scalar(num, den);
  }

  Scalar nonzero_scalar() {
    for (;;) {
      Scalar s = scalar();
      if (!s.is_zero()) return s;
    }
  }

  SymMatrix matrix(std::size_t rows, std::size_t cols) {
    SymMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (integer(0, 2) != 0) m(i, j) = scalar();
    return m;
  }

  Word word(int alphabet, int length) {
    Word w;
    for (int i = 0; i < length; ++i) w.push_back(integer(0, alphabet - 1));
    return w;
  }

  NCPoly poly(int alphabet, int max_degree, int terms, const MonomialOrder& order = {}) {
    NCPoly p(order);
    for (int t = 0; t < terms; ++t) p.add_term(word(alphabet, integer(0, max_degree)), scalar());
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qbraid::testing

namespace qbraid::testing {

/// A matrix specialized at q = q0, for oracles that must not share code with
/// the Q(q) elimination.
using RatMatrix = std::vector<std::vector<Rational>>;

inline RatMatrix specialize(const SymMatrix& m, const Rational& q0) {
  RatMatrix r(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = scalar_eval(m(i, j), q0);
  return r;
}

inline std::size_t rat_rank(RatMatrix m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Generic value used by the specialization oracles.
inline Rational generic_q() { return Rational(7, 3); }

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace qbraid::testing

#ifdef CATCH_VERSION_MAJOR
template <>
struct Catch::StringMaker<qbraid::Scalar> {
  static std::string convert(const qbraid::Scalar& s) { return s.to_string(); }
};
template <>
struct Catch::StringMaker<qbraid::NCPoly> {
  static std::string convert(const qbraid::NCPoly& p) { return p.to_string(); }
};
#endif
