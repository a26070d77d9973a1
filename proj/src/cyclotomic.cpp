#include "stairpoly/cyclotomic.hpp"

#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

#include "stairpoly/error.hpp"

namespace stairpoly {

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw PreconditionViolated("divisors requires n >= 1");
  std::vector<std::uint64_t> low;
  std::vector<std::uint64_t> high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<std::uint64_t> primitive_residues(std::uint64_t n) {
  if (n == 0) throw PreconditionViolated("primitive_residues requires n >= 1");
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (std::gcd(k, n) == 1) out.push_back(k);
  }
  return out;
}

std::uint64_t totient(std::uint64_t n) { return primitive_residues(n).size(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

const Polynomial& CyclotomicCache::get(std::uint64_t n) {
  if (n == 0) throw PreconditionViolated("cyclotomic index must be positive");
  {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(n); it != table_.end()) return it->second;
  }

  Polynomial proper_product = Polynomial::constant(1);
  for (std::uint64_t d : divisors(n)) {
    if (d != n) proper_product = proper_product * get(d);
  }

  Polynomial psi;
  try {
    psi = div_exact(binomial_minus_one(n), proper_product);
  } catch (const NotDivisible&) {
    throw std::logic_error("x^" + std::to_string(n) +
                           "-1 not divisible by its proper cyclotomic factors");
  }
  if (!is_monic(psi) || !has_integer_coeffs(psi) ||
      psi.degree() != static_cast<Polynomial::Degree>(totient(n))) {
    throw std::logic_error("cyclotomic polynomial " + std::to_string(n) +
                           " failed its consistency check");
  }

  std::unique_lock lock(mutex_);
  return table_.try_emplace(n, std::move(psi)).first->second;
}

std::size_t CyclotomicCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

Polynomial cyclotomic(std::uint64_t n, CyclotomicCache& cache) { return cache.get(n); }

bool check_property_1(std::uint64_t m, CyclotomicCache& cache) {
  if (m <= 1 || m % 2 == 0) throw PreconditionViolated("property 1 requires odd m > 1");
  return substitute_neg(cache.get(m)) == cache.get(2 * m);
}

bool check_property_2(std::uint64_t m, std::uint64_t p, CyclotomicCache& cache) {
  if (m == 0 || !is_prime(p) || m % p != 0) {
    throw PreconditionViolated("property 2 requires prime p dividing m");
  }
  return cache.get(m * p) == substitute_power(cache.get(m), p);
}

bool check_property_3(std::uint64_t m, std::uint64_t p, CyclotomicCache& cache) {
  if (m == 0 || !is_prime(p) || m % p == 0) {
    throw PreconditionViolated("property 3 requires prime p not dividing m");
  }
  return substitute_power(cache.get(m), p) == cache.get(p * m) * cache.get(m);
}

}  // namespace stairpoly
