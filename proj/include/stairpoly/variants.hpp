#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>

#include "stairpoly/staircase.hpp"

namespace stairpoly {

/// Alternating-sign staircase polynomial T(x, n, h) = S(-x, n, h).
struct AspDescriptor {
  std::uint64_t n = 1;
  std::uint64_t h = 1;

  auto operator<=>(const AspDescriptor&) const = default;
};

/// Missing-terms staircase polynomial S(x^d, base_n, h) of total degree
/// base_n * d. The stretch d is at least 2; d = 1 is a plain staircase.
struct MspDescriptor {
  std::uint64_t base_n = 1;
  std::uint64_t d = 2;
  std::uint64_t h = 1;

  std::uint64_t total_degree() const { return base_n * d; }
  auto operator<=>(const MspDescriptor&) const = default;
};

/// Geometric staircase polynomial S(alpha*x, n, h) with rational alpha != 0.
struct GspDescriptor {
  std::uint64_t n = 1;
  std::uint64_t h = 1;
  Rational alpha = 2;

  bool operator==(const GspDescriptor& o) const {
    return n == o.n && h == o.h && alpha == o.alpha;
  }
};

Polynomial build_asp(const AspDescriptor& desc);
Polynomial build_msp(const MspDescriptor& desc);
Polynomial build_gsp(const GspDescriptor& desc);

/// Literal factors Psi_k(-x), or with Normalized every odd k > 1 rewritten
/// as Psi_{2k}(x).
enum class AspForm { Literal, Normalized };

FactorList factor_asp(const AspDescriptor& desc, AspForm form = AspForm::Literal);
FactorList factor_msp(const MspDescriptor& desc);
FactorList factor_gsp(const GspDescriptor& desc);

/// Rewrites each (odd k > 1, NegateArg) factor as (2k, Identity); the
/// expansion is unchanged.
FactorList normalize_negations(const FactorList& f);

std::optional<AspDescriptor> classify_asp(const Polynomial& p);

/// Uses the maximal stretch: d is the gcd of the exponents in the support.
std::optional<MspDescriptor> classify_msp(const Polynomial& p);

/// Recovers a rational alpha from the linear coefficient. Scales 1 and -1
/// are reported as not geometric since those inputs are SP or ASP.
std::optional<GspDescriptor> classify_gsp(const Polynomial& p);

enum class Family { SP, ASP, MSP, GSP, NotInFamily };

std::string_view family_name(Family f);

struct NotInFamily {
  bool operator==(const NotInFamily&) const = default;
};

using Classification =
    std::variant<NotInFamily, SpDescriptor, AspDescriptor, MspDescriptor, GspDescriptor>;

Family family_of(const Classification& c);

/// Tries SP, ASP, MSP, GSP in that order and returns the first match.
Classification classify(const Polynomial& p);

/// Throws PreconditionViolated for NotInFamily.
Polynomial build(const Classification& c);
FactorList factor(const Classification& c, AspForm form = AspForm::Literal);

}  // namespace stairpoly
