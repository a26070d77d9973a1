#pragma once

// Test-only reference arithmetic. Nothing here calls into the library's
// polynomial code: cyclotomic polynomials come from the Moebius product, the
// totient from prime factorization, and staircase coefficients straight from
// their defining ramp/plateau description.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "stairpoly/poly.hpp"

namespace oracle {

using IntPoly = std::vector<std::int64_t>;  // ascending coefficients

inline IntPoly trim(IntPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline IntPoly convolve(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return trim(out);
}

// x^d - 1
inline IntPoly binomial(std::uint64_t d) {
  IntPoly p(d + 1, 0);
  p[0] = -1;
  p[d] += 1;
  return p;
}

// Schoolbook division by a monic divisor; throws if a remainder is left.
inline IntPoly divide_monic(IntPoly p, const IntPoly& q) {
  const std::size_t dq = q.size() - 1;
  if (p.size() < q.size()) throw std::logic_error("oracle: degree too small");
  IntPoly quot(p.size() - dq, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::int64_t c = p[k + dq];
    quot[k] = c;
    for (std::size_t j = 0; j <= dq; ++j) p[k + j] -= c * q[j];
  }
  for (auto c : p) {
    if (c != 0) throw std::logic_error("oracle: inexact division");
  }
  return trim(quot);
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline int moebius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

inline std::uint64_t totient(std::uint64_t n) {
  std::uint64_t out = n;
  for (auto p : prime_factors(n)) out = out / p * (p - 1);
  return out;
}

// Psi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
inline IntPoly cyclotomic(std::uint64_t n) {
  IntPoly num{1};
  std::vector<std::uint64_t> den;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = moebius(n / d);
    if (mu == 1) num = convolve(num, binomial(d));
    if (mu == -1) den.push_back(d);
  }
  for (auto d : den) num = divide_monic(num, binomial(d));
  return num;
}

// S(x, n, h): ramp 1..h from both ends, plateau h in between.
inline IntPoly staircase(std::uint64_t n, std::uint64_t h) {
  IntPoly a(n + 1, static_cast<std::int64_t>(h));
  for (std::uint64_t l = 0; l + 1 < h; ++l) {
    a[l] = static_cast<std::int64_t>(l + 1);
    a[n - l] = static_cast<std::int64_t>(l + 1);
  }
  return a;
}

inline IntPoly negate_arg(IntPoly p) {
  for (std::size_t i = 1; i < p.size(); i += 2) p[i] = -p[i];
  return p;
}

inline IntPoly stretch(const IntPoly& p, std::uint64_t d) {
  IntPoly out((p.size() - 1) * d + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) out[i * d] = p[i];
  return out;
}

inline std::int64_t eval(const IntPoly& p, std::int64_t x) {
  std::int64_t acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

inline stairpoly::Polynomial to_poly(const IntPoly& p) {
  std::vector<stairpoly::Rational> cs;
  cs.reserve(p.size());
  for (auto c : p) cs.emplace_back(static_cast<long>(c));
  return stairpoly::Polynomial(std::move(cs));
}

// Random polynomial with integer coefficients in [-bound, bound]; optional
// denominators in [1, max_den].
inline stairpoly::Polynomial random_poly(std::mt19937_64& rng, std::size_t max_degree,
                                         long bound = 1'000'000, long max_den = 1) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, max_den);
  std::vector<stairpoly::Rational> cs(deg(rng) + 1);
  for (auto& c : cs) {
    c = stairpoly::Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return stairpoly::Polynomial(std::move(cs));
}

}  // namespace oracle
