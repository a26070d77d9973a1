#include "stairpoly/staircase.hpp"

#include <algorithm>
#include <string>

#include "stairpoly/error.hpp"

namespace stairpoly {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Staircase coefficient of x^i in S(x, n, h).
std::uint64_t staircase_coeff(std::uint64_t n, std::uint64_t h, std::uint64_t i) {
  return std::min({i + 1, n - i + 1, h});
}

}  // namespace

void validate(const SpDescriptor& desc) {
  if (desc.n == 0) throw PreconditionViolated("staircase degree must be positive");
  if (desc.h < 1 || desc.h > max_height(desc.n)) {
    throw InvalidHeight("height " + std::to_string(desc.h) + " outside [1, " +
                        std::to_string(max_height(desc.n)) + "] for degree " +
                        std::to_string(desc.n));
  }
}

Polynomial apply(const Transform& t, const Polynomial& p) {
  return std::visit(Overloaded{
                        [&](const Identity&) { return p; },
                        [&](const NegateArg&) { return substitute_neg(p); },
                        [&](const PowerArg& a) { return substitute_power(p, a.d); },
                        [&](const ScaleArg& a) { return substitute_scale(p, a.alpha); },
                    },
                    t);
}

std::uint64_t degree_multiplier(const Transform& t) {
  if (const auto* power = std::get_if<PowerArg>(&t)) return power->d;
  return 1;
}

void FactorList::add(std::uint64_t index, Transform transform) {
  if (index < 2) throw PreconditionViolated("factor index must be at least 2");
  if (const auto* power = std::get_if<PowerArg>(&transform); power && power->d == 0) {
    throw PreconditionViolated("power transform requires d >= 1");
  }
  if (const auto* scale = std::get_if<ScaleArg>(&transform); scale && sgn(scale->alpha) == 0) {
    throw InvalidScale("scale transform requires alpha != 0");
  }
  factors_.push_back({index, std::move(transform)});
}

std::uint64_t expanded_degree(const FactorList& f) {
  std::uint64_t total = 0;
  for (const auto& factor : f.factors()) {
    total += totient(factor.index) * degree_multiplier(factor.transform);
  }
  return total;
}

Polynomial expand(const FactorList& f, CyclotomicCache& cache) {
  Polynomial product = Polynomial::constant(f.unit());
  for (const auto& factor : f.factors()) {
    product = product * apply(factor.transform, cache.get(factor.index));
  }
  return product;
}

bool verify(const Polynomial& p, const FactorList& f, CyclotomicCache& cache) {
  if (p.degree() != static_cast<Polynomial::Degree>(expanded_degree(f))) return false;
  return expand(f, cache) == p;
}

std::uint64_t sp_count(std::uint64_t n) {
  if (n == 0) throw PreconditionViolated("staircase degree must be positive");
  return max_height(n);
}

Polynomial build_sp(const SpDescriptor& desc) {
  validate(desc);
  std::vector<Rational> cs(desc.n + 1);
  for (std::uint64_t i = 0; i <= desc.n; ++i) cs[i] = staircase_coeff(desc.n, desc.h, i);
  return Polynomial(std::move(cs));
}

std::optional<SpDescriptor> classify_sp(const Polynomial& p) {
  if (p.degree() < 1 || !has_integer_coeffs(p)) return std::nullopt;
  const auto n = static_cast<std::uint64_t>(p.degree());
  const Rational& peak = p.coeffs()[n / 2];
  if (peak < 1 || peak > max_height(n)) return std::nullopt;
  const std::uint64_t h = peak.get_num().get_ui();
  for (std::uint64_t i = 0; i <= n; ++i) {
    if (p.coeffs()[i] != staircase_coeff(n, h, i)) return std::nullopt;
  }
  return SpDescriptor{n, h};
}

AllOneSplit all_one_split(const SpDescriptor& desc) {
  validate(desc);
  return {desc.h - 1, desc.n - desc.h + 1};
}

FactorList factor_sp(const SpDescriptor& desc) {
  validate(desc);
  FactorList out;
  if (desc.h > 1) {
    for (auto delta : divisors(desc.h)) {
      if (delta != 1) out.add(delta);
    }
  }
  for (auto tau : divisors(desc.n + 2 - desc.h)) {
    if (tau != 1) out.add(tau);
  }
  return out;
}

}  // namespace stairpoly
