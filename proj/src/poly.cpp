#include "stairpoly/poly.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "stairpoly/error.hpp"

namespace stairpoly {

namespace {

bool all_integer(std::span<const Rational> cs) {
  return std::all_of(cs.begin(), cs.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  canonicalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  canonicalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t exponent) {
  std::vector<Rational> cs(exponent + 1);
  cs[exponent] = c;
  return Polynomial(std::move(cs));
}

void Polynomial::canonicalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) throw PreconditionViolated("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  const auto a = p.coeffs();
  const auto b = q.coeffs();
  std::vector<Rational> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p) {
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto a = p.coeffs();
  const auto b = q.coeffs();
  const std::size_t n = a.size() + b.size() - 1;

  if (all_integer(a) && all_integer(b)) {
    // Integer convolution on numerators avoids per-term rational normalization.
    std::vector<mpz_class> acc(n);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (sgn(a[i]) == 0) continue;
      mpz_srcptr ai = a[i].get_num_mpz_t();
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (sgn(b[j]) == 0) continue;
        mpz_addmul(acc[i + j].get_mpz_t(), ai, b[j].get_num_mpz_t());
      }
    }
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = Rational(acc[k]);
    return Polynomial(std::move(out));
  }

  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

DivisionResult divmod(const Polynomial& p, const Polynomial& q) {
  if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (p.degree() < q.degree()) return {Polynomial{}, p};

  const auto divisor = q.coeffs();
  const std::size_t dq = divisor.size() - 1;
  const std::size_t dp = p.coeffs().size() - 1;
  const std::size_t quotient_len = dp - dq + 1;

  if (all_integer(p.coeffs()) && all_integer(divisor) && divisor.back() == 1) {
    std::vector<mpz_class> rem(dp + 1);
    for (std::size_t i = 0; i <= dp; ++i) rem[i] = p.coeffs()[i].get_num();
    std::vector<Rational> quot(quotient_len);
    for (std::size_t k = quotient_len; k-- > 0;) {
      const mpz_class lead = rem[k + dq];
      if (sgn(lead) == 0) continue;
      quot[k] = Rational(lead);
      for (std::size_t j = 0; j <= dq; ++j) {
        mpz_submul(rem[k + j].get_mpz_t(), lead.get_mpz_t(), divisor[j].get_num_mpz_t());
      }
    }
    std::vector<Rational> r(dq);
    for (std::size_t i = 0; i < dq; ++i) r[i] = Rational(rem[i]);
    return {Polynomial(std::move(quot)), Polynomial(std::move(r))};
  }

  std::vector<Rational> rem(p.coeffs().begin(), p.coeffs().end());
  std::vector<Rational> quot(quotient_len);
  const Rational& lead_q = divisor.back();
  for (std::size_t k = quotient_len; k-- > 0;) {
    if (sgn(rem[k + dq]) == 0) continue;
    const Rational factor = rem[k + dq] / lead_q;
    quot[k] = factor;
    for (std::size_t j = 0; j <= dq; ++j) rem[k + j] -= factor * divisor[j];
  }
  rem.resize(dq);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial div_exact(const Polynomial& p, const Polynomial& q) {
  auto [quotient, remainder] = divmod(p, q);
  if (!remainder.is_zero()) throw NotDivisible("polynomial division leaves a nonzero remainder");
  return quotient;
}

Rational evaluate(const Polynomial& p, const Rational& v) {
  Rational acc = 0;
  const auto cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) acc = acc * v + cs[i];
  return acc;
}

ComplexPoint evaluate(const Polynomial& p, ComplexPoint v) {
  ComplexPoint acc{0.0, 0.0};
  const auto cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) acc = acc * v + cs[i].get_d();
  if (!std::isfinite(acc.real()) || !std::isfinite(acc.imag())) {
    throw NonFiniteValue("complex evaluation overflowed");
  }
  return acc;
}

bool has_integer_coeffs(const Polynomial& p) { return all_integer(p.coeffs()); }

bool is_monic(const Polynomial& p) { return !p.is_zero() && p.leading() == 1; }

bool is_palindromic(const Polynomial& p) {
  const auto cs = p.coeffs();
  return std::equal(cs.begin(), cs.begin() + cs.size() / 2, cs.rbegin());
}

bool is_all_one(const Polynomial& p) {
  const auto cs = p.coeffs();
  return !cs.empty() && std::all_of(cs.begin(), cs.end(), [](const Rational& c) { return c == 1; });
}

Polynomial all_one(std::size_t k) { return Polynomial(std::vector<Rational>(k + 1, Rational(1))); }

Polynomial binomial_minus_one(std::size_t n) {
  std::vector<Rational> cs(n + 1);
  cs[0] = -1;
  cs[n] += 1;
  return Polynomial(std::move(cs));
}

Polynomial substitute_neg(const Polynomial& p) {
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
  return Polynomial(std::move(out));
}

Polynomial substitute_power(const Polynomial& p, std::size_t d) {
  if (d == 0) throw PreconditionViolated("substitute_power requires d >= 1");
  if (p.is_zero()) return {};
  const auto cs = p.coeffs();
  std::vector<Rational> out((cs.size() - 1) * d + 1);
  for (std::size_t i = 0; i < cs.size(); ++i) out[i * d] = cs[i];
  return Polynomial(std::move(out));
}

Polynomial substitute_scale(const Polynomial& p, const Rational& alpha) {
  if (sgn(alpha) == 0) throw InvalidScale("scale factor must be nonzero");
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  Rational power = 1;
  for (auto& c : out) {
    c *= power;
    power *= alpha;
  }
  return Polynomial(std::move(out));
}

}  // namespace stairpoly
