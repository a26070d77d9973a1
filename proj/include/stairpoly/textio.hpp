#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stairpoly/poly.hpp"
#include "stairpoly/staircase.hpp"

namespace stairpoly {

struct ParseOptions {
  /// Exponents above this are rejected before any storage is allocated.
  std::size_t max_degree = 1'000'000;
};

/// Parses text such as "x^4+2x^3+3x^2+2x+1" or "1/4x^2 - x + 3x^0".
///
/// Terms may appear in any order and repeated exponents are summed.
/// Coefficients are integers or integer/integer. Whitespace is ignored and
/// runs of signs ("+ -2x") fold together. Throws ParseError carrying the byte
/// offset of the first bad token.
Polynomial parse_polynomial(std::string_view text, const ParseOptions& options = {});

/// Canonical text: descending exponents, no zero terms, unit coefficients and
/// exponent 1 omitted, negative signs folded into the separator. "0" for the
/// zero polynomial.
std::string format_polynomial(const Polynomial& p);

/// "p" or "p/q" in lowest terms.
std::string format_rational(const Rational& r);

/// Argument text of a transformed factor: "x", "-x", "x^2", "2x", "1/2x".
std::string format_argument(const Transform& t);

struct GroupedFactor {
  CyclotomicFactor factor;
  std::uint64_t exponent = 1;
};

/// Collapses repeated factors into exponents, ordered by index.
std::vector<GroupedFactor> group_factors(const FactorList& f);

/// E.g. "Psi_2(-x)*Psi_4(-x)*Psi_5(-x)" or "Psi_3(x)^2"; "1" for an empty
/// list with unit 1.
std::string format_factors(const FactorList& f);

}  // namespace stairpoly
