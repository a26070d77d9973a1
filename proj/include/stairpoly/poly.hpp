#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace stairpoly {

using Rational = mpq_class;
using ComplexPoint = std::complex<double>;

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored in ascending order (index i holds the coefficient
/// of x^i). The highest stored coefficient is always nonzero; the zero
/// polynomial is the empty sequence. Values are immutable once built.
class Polynomial {
 public:
  using Degree = std::ptrdiff_t;

  /// Degree reported for the zero polynomial (stands in for minus infinity).
  static constexpr Degree kZeroDegree = std::numeric_limits<Degree>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t exponent);

  Degree degree() const noexcept {
    return coeffs_.empty() ? kZeroDegree : static_cast<Degree>(coeffs_.size()) - 1;
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  /// Coefficient of x^i; zero past the leading term.
  Rational coeff(std::size_t i) const;
  /// Leading coefficient. Precondition: nonzero polynomial.
  const Rational& leading() const;

  bool operator==(const Polynomial& other) const = default;

 private:
  void canonicalize();

  std::vector<Rational> coeffs_;
};

Polynomial operator+(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p);
Polynomial operator*(const Polynomial& p, const Polynomial& q);
Polynomial operator*(const Rational& c, const Polynomial& p);

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

/// Long division p = quotient*q + remainder with deg(remainder) < deg(q).
/// Throws DivisionByZero for q == 0.
DivisionResult divmod(const Polynomial& p, const Polynomial& q);

/// Exact quotient p / q. Throws NotDivisible if the remainder is nonzero.
Polynomial div_exact(const Polynomial& p, const Polynomial& q);

Rational evaluate(const Polynomial& p, const Rational& v);

/// Horner evaluation in double precision. Throws NonFiniteValue on overflow.
ComplexPoint evaluate(const Polynomial& p, ComplexPoint v);

bool has_integer_coeffs(const Polynomial& p);
bool is_monic(const Polynomial& p);
bool is_palindromic(const Polynomial& p);
bool is_all_one(const Polynomial& p);

/// 1 + x + ... + x^k.
Polynomial all_one(std::size_t k);

/// x^n - 1.
Polynomial binomial_minus_one(std::size_t n);

/// p(-x).
Polynomial substitute_neg(const Polynomial& p);
/// p(x^d), d >= 1.
Polynomial substitute_power(const Polynomial& p, std::size_t d);
/// p(alpha*x), alpha != 0.
Polynomial substitute_scale(const Polynomial& p, const Rational& alpha);

}  // namespace stairpoly
