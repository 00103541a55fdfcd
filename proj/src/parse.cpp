#include "qbraid/parse.hpp"

#include <cctype>
#include <charconv>

namespace qbraid {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c)) {
      while (i < s.size() && is_digit(s[i])) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (is_alpha(c)) {
      while (i < s.size() && is_alpha(s[i])) ++i;
      if (i < s.size() && s[i] == '_') {
        ++i;
        if (i < s.size() && s[i] == '{') {
          while (i < s.size() && s[i] != '}') ++i;
          if (i == s.size()) throw ParseError("unterminated '{' in symbol", start);
          ++i;
        } else {
          const std::size_t digits = i;
          while (i < s.size() && is_digit(s[i])) ++i;
          if (i == digits) throw ParseError("expected index after '_'", i);
        }
      } else {
        while (i < s.size() && is_digit(s[i])) ++i;
      }
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '=': kind = Tok::Equals; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const SymbolResolver* resolve, MonomialOrder order)
      : tokens_(lex(text)), resolve_(resolve), order_(std::move(order)) {}

  NCPoly parse_expression_to_end() {
    NCPoly v = expression();
    expect_end();
    return v;
  }

  NCPoly parse_relation_to_end() {
    NCPoly lhs = expression();
    if (peek().kind == Tok::Equals) {
      ++at_;
      NCPoly rhs = expression();
      expect_end();
      return lhs - rhs;
    }
    expect_end();
    return lhs;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }

  void expect_end() {
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
  }

  NCPoly expression() {
    NCPoly v = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const bool minus = peek().kind == Tok::Minus;
      ++at_;
      NCPoly rhs = term();
      if (minus) v -= rhs;
      else v += rhs;
    }
    return v;
  }

  bool starts_factor(Tok k) const { return k == Tok::Number || k == Tok::Ident || k == Tok::LParen; }

  NCPoly term() {
    NCPoly v = unary();
    for (;;) {
      const Tok k = peek().kind;
      if (k == Tok::Star) {
        ++at_;
        v = v * unary();
      } else if (k == Tok::Slash) {
        const std::size_t pos = peek().pos;
        ++at_;
        NCPoly d = unary();
        v *= as_scalar(d, pos, "division by a non-scalar").inverse();
      } else if (starts_factor(k)) {
        v = v * unary();
      } else {
        return v;
      }
    }
  }

  NCPoly unary() {
    if (peek().kind == Tok::Minus) {
      ++at_;
      return -unary();
    }
    if (peek().kind == Tok::Plus) {
      ++at_;
      return unary();
    }
    return power();
  }

  NCPoly power() {
    const std::size_t pos = peek().pos;
    NCPoly base = primary();
    if (peek().kind != Tok::Caret) return base;
    ++at_;
    const int e = exponent();
    if (e >= 0) {
      NCPoly r = NCPoly::constant(Scalar(1L), order_);
      for (int k = 0; k < e; ++k) r = r * base;
      return r;
    }
    Scalar s = as_scalar(base, pos, "negative power of a non-scalar");
    if (s.is_zero()) throw ParseError("negative power of zero", pos);
    return NCPoly::constant(s.pow(e), order_);
  }

  int exponent() {
    bool paren = false;
    if (peek().kind == Tok::LParen) {
      paren = true;
      ++at_;
    }
    int sign = 1;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus) {
      if (peek().kind == Tok::Minus) sign = -1;
      ++at_;
    }
    if (peek().kind != Tok::Number) throw ParseError("expected integer exponent", peek().pos);
    int value = 0;
    const std::string& t = peek().text;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc()) throw ParseError("exponent out of range", peek().pos);
    ++at_;
    if (paren) {
      if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
      ++at_;
    }
    return sign * value;
  }

  NCPoly primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        ++at_;
        mpz_class z(t.text, 10);
        return NCPoly::constant(Scalar(Rational(z)), order_);
      }
      case Tok::Ident: {
        ++at_;
        if (t.text == "q") return NCPoly::constant(Scalar::q(), order_);
        std::optional<Letter> l = resolve_ ? (*resolve_)(t.text) : std::nullopt;
        if (!l) throw ParseError("unknown symbol '" + t.text + "'", t.pos);
        return NCPoly(Word{*l}, Scalar(1L), order_);
      }
      case Tok::LParen: {
        ++at_;
        NCPoly v = expression();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
        ++at_;
        return v;
      }
      case Tok::End: throw ParseError("unexpected end of input", t.pos);
      default: throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  static Scalar as_scalar(const NCPoly& p, std::size_t pos, const char* what) {
    if (p.is_zero()) return {};
    if (p.size() != 1 || !p.leading_word().empty()) throw ParseError(what, pos);
    return p.leading_coefficient();
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
  const SymbolResolver* resolve_;
  MonomialOrder order_;
};

std::optional<int> parse_index(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Scalar scalar_parse(std::string_view text) {
  NCPoly p = Parser(text, nullptr, {}).parse_expression_to_end();
  if (p.is_zero()) return {};
  return p.leading_coefficient();
}

UniPoly parse_univariate(std::string_view text, std::string_view var) {
  SymbolResolver r = [var](std::string_view s) -> std::optional<Letter> {
    if (s == var) return 0;
    return std::nullopt;
  };
  NCPoly p = Parser(text, &r, {}).parse_expression_to_end();
  std::vector<Scalar> coeffs(static_cast<std::size_t>(p.degree() + 1));
  for (const auto& [w, c] : p.terms()) coeffs[w.size()] += c;
  return UniPoly(std::move(coeffs));
}

NCPoly parse_nc(std::string_view text, const SymbolResolver& resolve, MonomialOrder order) {
  return Parser(text, &resolve, std::move(order)).parse_expression_to_end();
}

NCPoly parse_relation(std::string_view text, const SymbolResolver& resolve, MonomialOrder order) {
  return Parser(text, &resolve, std::move(order)).parse_relation_to_end();
}

SymbolResolver x_resolver(int n) {
  return [n](std::string_view s) -> std::optional<Letter> {
    if (s.size() < 3 || s.substr(0, 2) != "x_") return std::nullopt;
    std::string_view idx = s.substr(2);
    if (idx.front() == '{' && idx.back() == '}') idx = idx.substr(1, idx.size() - 2);
    auto v = parse_index(idx);
    if (!v || *v < 1 || *v > n) return std::nullopt;
    return *v - 1;
  };
}

SymbolResolver t_resolver(int n) {
  return [n](std::string_view s) -> std::optional<Letter> {
    if (s.size() < 3 || s.substr(0, 2) != "t_") return std::nullopt;
    std::string_view idx = s.substr(2);
    if (idx.front() == '{' && idx.back() == '}') idx = idx.substr(1, idx.size() - 2);
    std::optional<int> i, j;
    if (auto comma = idx.find(','); comma != std::string_view::npos) {
      i = parse_index(idx.substr(0, comma));
      j = parse_index(idx.substr(comma + 1));
    } else if (idx.size() == 2) {
      i = parse_index(idx.substr(0, 1));
      j = parse_index(idx.substr(1, 1));
    }
    if (!i || !j || *i < 1 || *j < 1 || *i > n || *j > n) return std::nullopt;
    return (*i - 1) * n + (*j - 1);
  };
}

}  // namespace qbraid
