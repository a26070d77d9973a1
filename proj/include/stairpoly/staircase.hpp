#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "stairpoly/cyclotomic.hpp"
#include "stairpoly/poly.hpp"

namespace stairpoly {

/// Identifies S(x, n, h): degree n, plateau height h, 1 <= h <= ceil((n+1)/2).
struct SpDescriptor {
  std::uint64_t n = 1;
  std::uint64_t h = 1;

  auto operator<=>(const SpDescriptor&) const = default;
};

/// Largest admissible height for degree n, i.e. ceil((n+1)/2).
constexpr std::uint64_t max_height(std::uint64_t n) { return (n + 2) / 2; }

/// Throws PreconditionViolated for n == 0 and InvalidHeight for h out of range.
void validate(const SpDescriptor& desc);

// Argument transforms applied to a cyclotomic factor: Psi_d(x), Psi_d(-x),
// Psi_d(x^k), Psi_d(alpha*x).
struct Identity {
  bool operator==(const Identity&) const = default;
};
struct NegateArg {
  bool operator==(const NegateArg&) const = default;
};
struct PowerArg {
  std::uint64_t d = 1;
  bool operator==(const PowerArg&) const = default;
};
struct ScaleArg {
  Rational alpha = 1;
  bool operator==(const ScaleArg& other) const { return alpha == other.alpha; }
};

using Transform = std::variant<Identity, NegateArg, PowerArg, ScaleArg>;

/// Applies the transform to p: p(x), p(-x), p(x^d), p(alpha*x).
Polynomial apply(const Transform& t, const Polynomial& p);

/// Degree growth of the transform (d for PowerArg, 1 otherwise).
std::uint64_t degree_multiplier(const Transform& t);

struct CyclotomicFactor {
  std::uint64_t index = 2;
  Transform transform = Identity{};

  bool operator==(const CyclotomicFactor&) const = default;
};

/// Multiset of transformed cyclotomic factors times a rational unit.
///
/// Repeated factors are stored once per occurrence, so expansion is a plain
/// product. Index 1 is rejected: none of the supported families contain x-1.
class FactorList {
 public:
  FactorList() = default;
  explicit FactorList(Rational unit) : unit_(std::move(unit)) {}

  void add(std::uint64_t index, Transform transform = Identity{});

  std::span<const CyclotomicFactor> factors() const noexcept { return factors_; }
  const Rational& unit() const noexcept { return unit_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }

  bool operator==(const FactorList&) const = default;

 private:
  std::vector<CyclotomicFactor> factors_;
  Rational unit_ = 1;
};

/// Sum of phi(index) * degree_multiplier over all factors.
std::uint64_t expanded_degree(const FactorList& f);

/// Multiplies out the factor list.
Polynomial expand(const FactorList& f, CyclotomicCache& cache);

/// True iff expand(f) equals p coefficient for coefficient.
bool verify(const Polynomial& p, const FactorList& f, CyclotomicCache& cache);

/// Number of staircase polynomials of degree n (one per admissible height).
std::uint64_t sp_count(std::uint64_t n);

Polynomial build_sp(const SpDescriptor& desc);

/// Recognizes S(x, n, h) by its coefficient profile. Returns nullopt for
/// anything that is not exactly a staircase polynomial.
std::optional<SpDescriptor> classify_sp(const Polynomial& p);

/// Degrees of the two all-one polynomials whose product is S(x, n, h).
struct AllOneSplit {
  std::uint64_t ell = 0;
  std::uint64_t m = 0;

  auto operator<=>(const AllOneSplit&) const = default;
};

AllOneSplit all_one_split(const SpDescriptor& desc);

/// Psi_delta over delta | h and Psi_tau over tau | n+2-h, excluding index 1.
/// For h = 1 only the second product contributes (tau | n+1).
FactorList factor_sp(const SpDescriptor& desc);

}  // namespace stairpoly
