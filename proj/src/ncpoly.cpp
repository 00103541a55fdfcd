#include "qbraid/ncpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qbraid {

Word concat(const Word& a, const Word& b) {
  Word w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word concat(const Word& a, const Word& b, const Word& c) {
  Word w;
  w.reserve(a.size() + b.size() + c.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  w.insert(w.end(), c.begin(), c.end());
  return w;
}

std::size_t word_index(const Word& w, int alphabet) {
  std::size_t idx = 0;
  for (Letter l : w) idx = idx * static_cast<std::size_t>(alphabet) + static_cast<std::size_t>(l);
  return idx;
}

Word word_from_index(std::size_t index, int length, int alphabet) {
  Word w(static_cast<std::size_t>(length));
  for (int k = length - 1; k >= 0; --k) {
    w[static_cast<std::size_t>(k)] = static_cast<Letter>(index % static_cast<std::size_t>(alphabet));
    index /= static_cast<std::size_t>(alphabet);
  }
  return w;
}

MonomialOrder::MonomialOrder(const std::vector<Letter>& precedence) {
  const int size = precedence.empty() ? 0 : *std::max_element(precedence.begin(), precedence.end()) + 1;
  auto ranks = std::make_shared<std::vector<int>>(static_cast<std::size_t>(size), -1);
  for (std::size_t pos = 0; pos < precedence.size(); ++pos) {
    const Letter l = precedence[pos];
    if (l < 0 || (*ranks)[static_cast<std::size_t>(l)] != -1) throw std::invalid_argument("precedence must be a permutation");
    (*ranks)[static_cast<std::size_t>(l)] = static_cast<int>(pos);
  }
  if (std::count(ranks->begin(), ranks->end(), -1) != 0) throw std::invalid_argument("precedence must be a permutation");
  bool natural = true;
  for (std::size_t i = 0; i < ranks->size(); ++i) natural = natural && (*ranks)[i] == static_cast<int>(i);
  if (!natural) rank_ = std::move(ranks);
}

int MonomialOrder::rank(Letter l) const {
  if (!rank_) return l;
  if (l < 0 || static_cast<std::size_t>(l) >= rank_->size()) throw std::out_of_range("letter outside declared precedence");
  return (*rank_)[static_cast<std::size_t>(l)];
}

bool MonomialOrder::greater(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() > b.size();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] == b[k]) continue;
    return rank(a[k]) < rank(b[k]);
  }
  return false;
}

std::vector<Letter> MonomialOrder::precedence(int alphabet) const {
  std::vector<Letter> letters(static_cast<std::size_t>(alphabet));
  for (int l = 0; l < alphabet; ++l) letters[static_cast<std::size_t>(l)] = l;
  std::sort(letters.begin(), letters.end(), [this](Letter a, Letter b) { return rank(a) < rank(b); });
  return letters;
}

LetterNamer x_namer() {
  return [](Letter l) { return "x_" + std::to_string(l + 1); };
}

NCPoly::NCPoly(const Word& w, const Scalar& c, MonomialOrder order) : terms_(std::move(order)) {
  if (!c.is_zero()) terms_.emplace(w, c);
}

Scalar NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

int NCPoly::degree() const {
  int d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

bool NCPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::size_t d = terms_.begin()->first.size();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.size() == d; });
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::pair<Word, Scalar> NCPoly::pop_leading() {
  auto node = terms_.extract(terms_.begin());
  return {std::move(node.key()), std::move(node.mapped())};
}

NCPoly NCPoly::reordered(MonomialOrder order) const {
  NCPoly r(std::move(order));
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, c);
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r(a.order());
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add_term(concat(wa, wb), ca * cb);
  return r;
}

bool operator==(const NCPoly& a, const NCPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [w, c] : a.terms_) {
    if (b.coefficient(w) != c) return false;
  }
  return true;
}

std::string format_word(const Word& w, const LetterNamer& name) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k > 0) out += " ";
    out += name(w[k]);
  }
  return out;
}

std::string format_term(const Scalar& c, const Word& w, const LetterNamer& name, bool first) {
  std::string sign;
  Scalar magnitude = c;
  if (c.is_single_term() && c.numerator().leading_coefficient() < 0) {
    magnitude = -c;
    sign = "-";
  }
  std::string coef;
  if (w.empty()) {
    coef = magnitude.is_single_term() ? magnitude.to_string() : "(" + magnitude.to_string() + ")";
  } else if (!magnitude.is_one()) {
    coef = (magnitude.is_single_term() ? magnitude.to_string() : "(" + magnitude.to_string() + ")") + " ";
  }
  std::string body = w.empty() ? coef : coef + format_word(w, name);
  if (first) return sign + body;
  return (sign.empty() ? " + " : " - ") + body;
}

std::string NCPoly::to_string(const LetterNamer& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    out += format_term(c, w, name, first);
    first = false;
  }
  return out;
}

}  // namespace qbraid
