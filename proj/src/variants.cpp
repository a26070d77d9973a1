#include "stairpoly/variants.hpp"

#include <numeric>

#include "stairpoly/error.hpp"

namespace stairpoly {

namespace {

FactorList with_transform(const FactorList& base, const Transform& t) {
  FactorList out(base.unit());
  for (const auto& f : base.factors()) out.add(f.index, t);
  return out;
}

void validate_msp(const MspDescriptor& desc) {
  if (desc.d < 2) throw InvalidStretch("stretch d must be at least 2");
  validate(SpDescriptor{desc.base_n, desc.h});
}

void validate_gsp(const GspDescriptor& desc) {
  if (sgn(desc.alpha) == 0) throw InvalidScale("scale alpha must be nonzero");
  validate(SpDescriptor{desc.n, desc.h});
}

}  // namespace

Polynomial build_asp(const AspDescriptor& desc) {
  return substitute_neg(build_sp({desc.n, desc.h}));
}

Polynomial build_msp(const MspDescriptor& desc) {
  validate_msp(desc);
  return substitute_power(build_sp({desc.base_n, desc.h}), desc.d);
}

Polynomial build_gsp(const GspDescriptor& desc) {
  validate_gsp(desc);
  return substitute_scale(build_sp({desc.n, desc.h}), desc.alpha);
}

FactorList normalize_negations(const FactorList& f) {
  FactorList out(f.unit());
  for (const auto& factor : f.factors()) {
    if (std::holds_alternative<NegateArg>(factor.transform) && factor.index % 2 == 1) {
      out.add(2 * factor.index, Identity{});
    } else {
      out.add(factor.index, factor.transform);
    }
  }
  return out;
}

FactorList factor_asp(const AspDescriptor& desc, AspForm form) {
  auto literal = with_transform(factor_sp({desc.n, desc.h}), NegateArg{});
  return form == AspForm::Normalized ? normalize_negations(literal) : literal;
}

FactorList factor_msp(const MspDescriptor& desc) {
  validate_msp(desc);
  return with_transform(factor_sp({desc.base_n, desc.h}), PowerArg{desc.d});
}

FactorList factor_gsp(const GspDescriptor& desc) {
  validate_gsp(desc);
  return with_transform(factor_sp({desc.n, desc.h}), ScaleArg{desc.alpha});
}

std::optional<AspDescriptor> classify_asp(const Polynomial& p) {
  if (auto sp = classify_sp(substitute_neg(p))) return AspDescriptor{sp->n, sp->h};
  return std::nullopt;
}

std::optional<MspDescriptor> classify_msp(const Polynomial& p) {
  if (p.degree() < 2) return std::nullopt;
  const auto cs = p.coeffs();
  std::uint64_t stretch = 0;
  for (std::uint64_t i = 1; i < cs.size(); ++i) {
    if (sgn(cs[i]) != 0) stretch = std::gcd(stretch, i);
  }
  if (stretch < 2) return std::nullopt;

  std::vector<Rational> compressed((cs.size() - 1) / stretch + 1);
  for (std::uint64_t i = 0; i < compressed.size(); ++i) compressed[i] = cs[i * stretch];
  if (auto sp = classify_sp(Polynomial(std::move(compressed)))) {
    return MspDescriptor{sp->n, stretch, sp->h};
  }
  return std::nullopt;
}

std::optional<GspDescriptor> classify_gsp(const Polynomial& p) {
  if (p.degree() < 1 || p.coeff(0) != 1 || sgn(p.coeff(1)) == 0) return std::nullopt;
  for (int linear : {1, 2}) {
    const Rational alpha = p.coeff(1) / linear;
    if (abs(alpha) == 1) continue;
    auto sp = classify_sp(substitute_scale(p, 1 / alpha));
    if (sp) return GspDescriptor{sp->n, sp->h, alpha};
  }
  return std::nullopt;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::SP: return "SP";
    case Family::ASP: return "ASP";
    case Family::MSP: return "MSP";
    case Family::GSP: return "GSP";
    case Family::NotInFamily: return "NotInFamily";
  }
  return "NotInFamily";
}

Family family_of(const Classification& c) {
  switch (c.index()) {
    case 1: return Family::SP;
    case 2: return Family::ASP;
    case 3: return Family::MSP;
    case 4: return Family::GSP;
    default: return Family::NotInFamily;
  }
}

Classification classify(const Polynomial& p) {
  if (auto sp = classify_sp(p)) return *sp;
  if (auto asp = classify_asp(p)) return *asp;
  if (auto msp = classify_msp(p)) return *msp;
  if (auto gsp = classify_gsp(p)) return *gsp;
  return NotInFamily{};
}

Polynomial build(const Classification& c) {
  switch (family_of(c)) {
    case Family::SP: return build_sp(std::get<SpDescriptor>(c));
    case Family::ASP: return build_asp(std::get<AspDescriptor>(c));
    case Family::MSP: return build_msp(std::get<MspDescriptor>(c));
    case Family::GSP: return build_gsp(std::get<GspDescriptor>(c));
    case Family::NotInFamily: break;
  }
  throw PreconditionViolated("polynomial is not in any staircase family");
}

FactorList factor(const Classification& c, AspForm form) {
  switch (family_of(c)) {
    case Family::SP: return factor_sp(std::get<SpDescriptor>(c));
    case Family::ASP: return factor_asp(std::get<AspDescriptor>(c), form);
    case Family::MSP: return factor_msp(std::get<MspDescriptor>(c));
    case Family::GSP: return factor_gsp(std::get<GspDescriptor>(c));
    case Family::NotInFamily: break;
  }
  throw PreconditionViolated("polynomial is not in any staircase family");
}

}  // namespace stairpoly
