#include "stairpoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "stairpoly/error.hpp"

namespace stairpoly {

namespace {

// Membership threshold for the power-transform search. Non-roots among the
// candidates evaluate to O(1) values, true roots to rounding noise.
constexpr double kZeroThreshold = 1e-6;

ComplexPoint unit_root(std::uint64_t residue, std::uint64_t order) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(residue % order) /
                       static_cast<double>(order);
  return std::polar(1.0, angle);
}

}  // namespace

ComplexPoint RootEntry::value() const { return unit_root(residue, order) / scale.get_d(); }

Rational RootEntry::modulus() const { return Rational(1 / abs(scale)); }

RootEntry reduced_label(std::uint64_t residue, std::uint64_t order, const Rational& scale) {
  if (order == 0) throw PreconditionViolated("root order must be positive");
  residue %= order;
  if (residue == 0) return {1, 1, 1, scale};
  const std::uint64_t g = std::gcd(residue, order);
  return {order / g, residue / g, 1, scale};
}

std::uint64_t conjugate_residue(std::uint64_t order, std::uint64_t residue) {
  return order == 1 ? 1 : (order - residue % order) % order;
}

void RootSet::add(std::uint64_t order, std::uint64_t residue, const Rational& scale,
                  std::uint64_t multiplicity) {
  if (multiplicity == 0) return;
  auto key = [](const RootEntry& e) { return std::tie(e.scale, e.order, e.residue); };
  const RootEntry probe{order, residue, 0, scale};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), probe,
                             [&](const RootEntry& a, const RootEntry& b) { return key(a) < key(b); });
  if (it != entries_.end() && it->order == order && it->residue == residue && it->scale == scale) {
    it->multiplicity += multiplicity;
    return;
  }
  entries_.insert(it, RootEntry{order, residue, multiplicity, scale});
}

std::uint64_t RootSet::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += e.multiplicity;
  return total;
}

std::uint64_t RootSet::multiplicity(std::uint64_t order, std::uint64_t residue,
                                    const Rational& scale) const {
  for (const auto& e : entries_) {
    if (e.order == order && e.residue == residue && e.scale == scale) return e.multiplicity;
  }
  return 0;
}

RootSet roots_of(const Polynomial& source, const FactorList& f, CyclotomicCache& cache) {
  if (!verify(source, f, cache)) {
    throw UnverifiedFactorList("factor list does not expand to the source polynomial");
  }

  RootSet out;
  for (const auto& factor : f.factors()) {
    const std::uint64_t d = factor.index;
    const auto residues = primitive_residues(d);

    if (std::holds_alternative<Identity>(factor.transform)) {
      for (auto k : residues) out.add(d, k, 1);
    } else if (std::holds_alternative<NegateArg>(factor.transform)) {
      // -exp(2 pi i k/d) = exp(2 pi i (2k + d)/(2d)).
      for (auto k : residues) {
        const auto label = reduced_label(2 * k + d, 2 * d, 1);
        out.add(label.order, label.residue, 1);
      }
    } else if (const auto* scale = std::get_if<ScaleArg>(&factor.transform)) {
      for (auto k : residues) out.add(d, k, scale->alpha);
    } else {
      const std::uint64_t stretch = std::get<PowerArg>(factor.transform).d;
      const Polynomial expanded = substitute_power(cache.get(d), stretch);
      const std::uint64_t candidates = d * stretch;
      std::uint64_t found = 0;
      for (std::uint64_t j = 0; j < candidates; ++j) {
        if (std::abs(evaluate(expanded, unit_root(j, candidates))) >= kZeroThreshold) continue;
        const auto label = reduced_label(j, candidates, 1);
        out.add(label.order, label.residue, 1);
        ++found;
      }
      if (found != residues.size() * stretch) {
        throw std::logic_error("root search for a stretched cyclotomic factor found " +
                               std::to_string(found) + " roots, expected " +
                               std::to_string(residues.size() * stretch));
      }
    }
  }
  return out;
}

double residual(const Polynomial& source, const RootEntry& root) {
  return std::abs(evaluate(source, root.value()));
}

std::vector<RealRoot> real_root_report(const RootSet& roots) {
  std::vector<RealRoot> out;
  for (const auto& e : roots.entries()) {
    if (!e.is_real()) continue;
    const Rational sign = e.order == 1 ? 1 : -1;
    out.push_back({Rational(sign / e.scale), e.multiplicity});
  }
  std::sort(out.begin(), out.end(),
            [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  return out;
}

SchurReport schur_report(const RootSet& roots) {
  SchurReport report;
  report.max_modulus = 0;
  bool all_unit = !roots.entries().empty();
  for (const auto& e : roots.entries()) {
    const Rational m = e.modulus();
    if (m > report.max_modulus) report.max_modulus = m;
    if (m != 1) all_unit = false;
  }
  report.verdict = report.max_modulus < 1 ? Stability::SchurStable : Stability::NotSchurStable;
  report.marginal = all_unit;
  return report;
}

}  // namespace stairpoly
