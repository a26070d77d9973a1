#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <vector>

#include "stairpoly/poly.hpp"

namespace stairpoly {

/// All positive divisors of n in ascending order. Requires n >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// All k in [1, n] with gcd(k, n) = 1; [1] for n = 1.
std::vector<std::uint64_t> primitive_residues(std::uint64_t n);

/// Euler's totient, counted from primitive_residues.
std::uint64_t totient(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Memo table of cyclotomic polynomials.
///
/// Psi_n is produced as (x^n - 1) divided by the product of Psi_d over the
/// proper divisors d of n. Entries are checked (monic, integral, degree
/// phi(n)) before insertion and never evicted. Concurrent calls to get() are
/// safe; two threads missing on the same key may both compute it, and the
/// first insertion wins.
class CyclotomicCache {
 public:
  CyclotomicCache() = default;
  CyclotomicCache(const CyclotomicCache&) = delete;
  CyclotomicCache& operator=(const CyclotomicCache&) = delete;

  /// Psi_n. Requires n >= 1. The returned reference stays valid for the
  /// lifetime of the cache.
  const Polynomial& get(std::uint64_t n);

  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::uint64_t, Polynomial> table_;
};

Polynomial cyclotomic(std::uint64_t n, CyclotomicCache& cache);

// Executable forms of three standard identities. Each returns whether the
// identity holds coefficientwise and throws PreconditionViolated when the
// arguments fall outside the identity's hypotheses.

/// Psi_m(-x) == Psi_{2m}(x) for odd m > 1.
bool check_property_1(std::uint64_t m, CyclotomicCache& cache);
/// Psi_{mp}(x) == Psi_m(x^p) for prime p dividing m.
bool check_property_2(std::uint64_t m, std::uint64_t p, CyclotomicCache& cache);
/// Psi_m(x^p) == Psi_{pm}(x) * Psi_m(x) for prime p not dividing m.
bool check_property_3(std::uint64_t m, std::uint64_t p, CyclotomicCache& cache);

}  // namespace stairpoly
