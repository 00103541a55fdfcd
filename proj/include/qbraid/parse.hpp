#pragma once

/// @file parse.hpp
/// Text grammar shared by scalars, polynomials in x and noncommutative expressions:
///   integers, `q`, `^` with integer exponents (negative allowed on scalars),
///   `+ - * /`, parentheses, implicit multiplication by juxtaposition, and
///   generator symbols resolved by the caller (`x_1`, `t_{12}`, `E1`, ...).

#include "qbraid/ncpoly.hpp"
#include "qbraid/unipoly.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qbraid {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Maps an identifier (other than `q`) to a letter, or nullopt if unknown.
using SymbolResolver = std::function<std::optional<Letter>(std::string_view)>;

Scalar scalar_parse(std::string_view text);

/// Polynomial in the single variable `var` with Scalar coefficients.
UniPoly parse_univariate(std::string_view text, std::string_view var = "x");

NCPoly parse_nc(std::string_view text, const SymbolResolver& resolve, MonomialOrder order = {});

/// "lhs = rhs" parsed as lhs - rhs; text without '=' is taken as an element set to zero.
NCPoly parse_relation(std::string_view text, const SymbolResolver& resolve, MonomialOrder order = {});

/// Resolver for x_1 .. x_n (1-based in text).
SymbolResolver x_resolver(int n);
/// Resolver for t_{ij} / t_ij / t_{i,j} with n×n indices (1-based in text).
SymbolResolver t_resolver(int n);

}  // namespace qbraid
