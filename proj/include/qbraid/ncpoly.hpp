#pragma once

/**
 * @file ncpoly.hpp
 * @brief Words and noncommutative polynomials over Q(q).
 *
 * Words are sequences of letter indices into a declared alphabet. The empty
 * word is the unit. Polynomials keep their terms sorted by a degree-lexicographic
 * monomial order, greatest term first, so the leading term is always begin().
 */

#include "qbraid/scalar.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace qbraid {

using Letter = int;
using Word = std::vector<Letter>;

Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);

/// Index of a word in V^{⊗k} for an alphabet of size n: first letter most significant.
std::size_t word_index(const Word& w, int alphabet);
Word word_from_index(std::size_t index, int length, int alphabet);

/// Degree-lexicographic order driven by a letter precedence.
///
/// precedence[0] is the greatest letter. The default order uses the natural
/// descending precedence 0 > 1 > 2 > ...; i.e. x_1 > x_2 > ... in 1-based names.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(const std::vector<Letter>& precedence);

  /// True when a is strictly greater than b.
  bool greater(const Word& a, const Word& b) const;
  /// Comparator form used by ordered containers: sorts greatest first.
  bool operator()(const Word& a, const Word& b) const { return greater(a, b); }

  /// Letters from greatest to least, for an alphabet of the given size.
  std::vector<Letter> precedence(int alphabet) const;
  bool is_natural() const { return rank_ == nullptr; }

 private:
  int rank(Letter l) const;

  std::shared_ptr<const std::vector<int>> rank_;
};

/// Renders a letter as text, e.g. "x_1" or "t_{12}".
using LetterNamer = std::function<std::string(Letter)>;

LetterNamer x_namer();

class NCPoly {
 public:
  using Terms = std::map<Word, Scalar, MonomialOrder>;

  NCPoly() = default;
  explicit NCPoly(MonomialOrder order) : terms_(std::move(order)) {}
  explicit NCPoly(Terms terms) : terms_(std::move(terms)) {}
  NCPoly(const Word& w, const Scalar& c, MonomialOrder order = {});
  static NCPoly constant(const Scalar& c, MonomialOrder order = {}) { return NCPoly(Word{}, c, std::move(order)); }

  const Terms& terms() const { return terms_; }
  MonomialOrder order() const { return terms_.key_comp(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Greatest word under the order; requires a nonzero polynomial.
  const Word& leading_word() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }
  Scalar coefficient(const Word& w) const;

  /// Maximum word length (0 for zero).
  int degree() const;
  bool is_homogeneous() const;

  void add_term(const Word& w, const Scalar& c);
  /// Removes and returns the leading term; requires a nonzero polynomial.
  std::pair<Word, Scalar> pop_leading();
  NCPoly reordered(MonomialOrder order) const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Scalar& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(NCPoly a, const Scalar& c) { return a *= c; }
  friend NCPoly operator*(const Scalar& c, NCPoly a) { return a *= c; }
  /// Concatenation product.
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);

  friend bool operator==(const NCPoly& a, const NCPoly& b);

  std::string to_string(const LetterNamer& name = x_namer()) const;

 private:
  Terms terms_;
};

/// Formats "c w" for a coefficient and word, used by relation printers.
std::string format_term(const Scalar& c, const Word& w, const LetterNamer& name, bool first);
std::string format_word(const Word& w, const LetterNamer& name);

}  // namespace qbraid
