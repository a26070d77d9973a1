#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stairpoly/cyclotomic.hpp"
#include "stairpoly/poly.hpp"
#include "stairpoly/staircase.hpp"

namespace stairpoly {

/// A root (1/scale) * exp(2*pi*i*residue/order) with its multiplicity.
/// gcd(residue, order) == 1; the root 1 is labeled (order 1, residue 1).
struct RootEntry {
  std::uint64_t order = 1;
  std::uint64_t residue = 1;
  std::uint64_t multiplicity = 1;
  Rational scale = 1;

  ComplexPoint value() const;
  /// Exact modulus 1/|scale|.
  Rational modulus() const;
  bool is_real() const noexcept { return order <= 2; }

  bool operator==(const RootEntry& o) const {
    return order == o.order && residue == o.residue && multiplicity == o.multiplicity &&
           scale == o.scale;
  }
};

/// Multiset of labeled roots; entries are unique per (order, residue, scale)
/// and kept sorted by (scale, order, residue).
class RootSet {
 public:
  void add(std::uint64_t order, std::uint64_t residue, const Rational& scale,
           std::uint64_t multiplicity = 1);

  std::span<const RootEntry> entries() const noexcept { return entries_; }
  std::uint64_t total_multiplicity() const;
  /// Multiplicity of (order, residue, scale), zero if absent.
  std::uint64_t multiplicity(std::uint64_t order, std::uint64_t residue,
                             const Rational& scale = 1) const;

 private:
  std::vector<RootEntry> entries_;
};

/// Reduces the angle residue/order (mod 1) to lowest terms.
RootEntry reduced_label(std::uint64_t residue, std::uint64_t order, const Rational& scale);

/// Residue of the complex conjugate root.
std::uint64_t conjugate_residue(std::uint64_t order, std::uint64_t residue);

/// Enumerates the roots of a factored polynomial.
///
/// Throws UnverifiedFactorList unless f expands exactly to source. Power
/// transforms are handled by searching all order d*k roots of unity for zeros
/// of the expanded factor, then labeling each hit by its minimal order.
RootSet roots_of(const Polynomial& source, const FactorList& f, CyclotomicCache& cache);

/// |source(root)| evaluated in double precision.
double residual(const Polynomial& source, const RootEntry& root);

struct RealRoot {
  Rational value;
  std::uint64_t multiplicity = 0;

  bool operator==(const RealRoot& o) const {
    return value == o.value && multiplicity == o.multiplicity;
  }
};

/// Real members of the root set (+-1/scale), ascending by value.
std::vector<RealRoot> real_root_report(const RootSet& roots);

enum class Stability { SchurStable, NotSchurStable };

struct SchurReport {
  Rational max_modulus;
  Stability verdict = Stability::NotSchurStable;
  /// Every root lies exactly on the unit circle.
  bool marginal = false;
};

/// Schur stable iff every root lies strictly inside the unit disk.
SchurReport schur_report(const RootSet& roots);

}  // namespace stairpoly
