#include "stairpoly/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "stairpoly/cyclotomic.hpp"
#include "stairpoly/error.hpp"
#include "stairpoly/roots.hpp"
#include "stairpoly/staircase.hpp"
#include "stairpoly/textio.hpp"
#include "stairpoly/variants.hpp"

namespace stairpoly::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Human, Json };

struct GlobalOptions {
  Format format = Format::Human;
  std::size_t max_degree = 1000;
  bool normalize_asp = false;
};

struct FamilyParams {
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> h;
  std::optional<std::uint64_t> base_n;
  std::optional<std::uint64_t> d;
  std::optional<std::string> alpha;
};

// Bad command-line usage; reported like a parse error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotInFamilyError : public Error {
 public:
  NotInFamilyError() : Error("polynomial is not in any staircase family (SP, ASP, MSP, GSP)") {}
};

// A factor list failed to expand back to its source polynomial.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class Emitter {
 public:
  Emitter(Format format, std::ostream& out) : format_(format), out_(out) {}

  void emit(const Json& record) {
    if (format_ == Format::Json) {
      out_ << record.dump() << '\n';
      return;
    }
    if (!first_) out_ << '\n';
    first_ = false;
    for (const auto& [key, value] : record.items()) {
      if (value.is_array()) {
        out_ << key << ':';
        if (value.empty()) out_ << " (none)";
        out_ << '\n';
        for (const auto& item : value) out_ << "  - " << inline_text(item) << '\n';
      } else {
        out_ << key << ": " << inline_text(value) << '\n';
      }
    }
  }

 private:
  static std::string inline_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (!v.is_object()) return v.dump();
    std::string out;
    for (const auto& [key, item] : v.items()) {
      if (!out.empty()) out += ' ';
      out += key + "=" + inline_text(item);
    }
    return out;
  }

  Format format_;
  std::ostream& out_;
  bool first_ = true;
};

std::uint64_t require(const std::optional<std::uint64_t>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing required option ") + flag);
  return *value;
}

Rational parse_alpha(const std::string& text) {
  Rational alpha;
  if (text.empty() || alpha.set_str(text, 10) != 0 || alpha.get_den() == 0) {
    throw UsageError("--alpha must be an integer or a fraction p/q, got '" + text + "'");
  }
  alpha.canonicalize();
  return alpha;
}

Classification descriptor_from(const std::string& family, const FamilyParams& p) {
  if (family == "sp") return SpDescriptor{require(p.n, "--n"), require(p.h, "--h")};
  if (family == "asp") return AspDescriptor{require(p.n, "--n"), require(p.h, "--h")};
  if (family == "msp") {
    return MspDescriptor{require(p.base_n, "--base-n"), require(p.d, "--d"), require(p.h, "--h")};
  }
  if (family == "gsp") {
    if (!p.alpha) throw UsageError("missing required option --alpha");
    return GspDescriptor{require(p.n, "--n"), require(p.h, "--h"), parse_alpha(*p.alpha)};
  }
  throw UsageError("unknown family '" + family + "'");
}

bool is_family_word(const std::string& word) {
  return word == "sp" || word == "asp" || word == "msp" || word == "gsp";
}

std::uint64_t nominal_degree(const Classification& c) {
  switch (family_of(c)) {
    case Family::SP: return std::get<SpDescriptor>(c).n;
    case Family::ASP: return std::get<AspDescriptor>(c).n;
    case Family::MSP: return std::get<MspDescriptor>(c).total_degree();
    case Family::GSP: return std::get<GspDescriptor>(c).n;
    case Family::NotInFamily: break;
  }
  return 0;
}

void guard_degree(std::uint64_t degree, const GlobalOptions& options) {
  if (degree > options.max_degree) {
    throw PreconditionViolated("degree " + std::to_string(degree) + " exceeds --max-degree " +
                               std::to_string(options.max_degree));
  }
}

Json params_json(const Classification& c) {
  Json params = Json::object();
  switch (family_of(c)) {
    case Family::SP: {
      const auto& d = std::get<SpDescriptor>(c);
      params["n"] = d.n;
      params["h"] = d.h;
      break;
    }
    case Family::ASP: {
      const auto& d = std::get<AspDescriptor>(c);
      params["n"] = d.n;
      params["h"] = d.h;
      break;
    }
    case Family::MSP: {
      const auto& d = std::get<MspDescriptor>(c);
      params["base_n"] = d.base_n;
      params["d"] = d.d;
      params["h"] = d.h;
      break;
    }
    case Family::GSP: {
      const auto& d = std::get<GspDescriptor>(c);
      params["n"] = d.n;
      params["h"] = d.h;
      params["alpha"] = format_rational(d.alpha);
      break;
    }
    case Family::NotInFamily: break;
  }
  return params;
}

Json factors_json(const FactorList& f) {
  Json out = Json::array();
  for (const auto& g : group_factors(f)) {
    out.push_back({{"index", g.factor.index},
                   {"transform", format_argument(g.factor.transform)},
                   {"exponent", g.exponent}});
  }
  return out;
}

Json roots_json(const Polynomial& source, const RootSet& roots) {
  Json out = Json::array();
  for (const auto& e : roots.entries()) {
    const auto v = e.value();
    out.push_back({{"order", e.order},
                   {"residue", e.residue},
                   {"multiplicity", e.multiplicity},
                   {"scale", format_rational(e.scale)},
                   {"re", v.real()},
                   {"im", v.imag()},
                   {"residual", residual(source, e)}});
  }
  return out;
}

Json real_roots_json(const RootSet& roots) {
  Json out = Json::array();
  for (const auto& r : real_root_report(roots)) {
    out.push_back({{"value", format_rational(r.value)}, {"multiplicity", r.multiplicity}});
  }
  return out;
}

Json stability_json(const SchurReport& report) {
  return {{"verdict", report.verdict == Stability::SchurStable ? "SchurStable" : "NotSchurStable"},
          {"marginal", report.marginal},
          {"max_modulus", format_rational(report.max_modulus)},
          {"note", report.marginal ? "marginal: all roots on unit circle"
                   : report.verdict == Stability::SchurStable ? "all roots inside the unit disk"
                                                              : "some root outside the unit disk"}};
}

Json family_record(const Classification& c) {
  Json record;
  record["family"] = std::string(family_name(family_of(c)));
  record["params"] = params_json(c);
  return record;
}

// Shared state for one invocation.
class Session {
 public:
  Session(GlobalOptions options, std::istream& in, std::ostream& out)
      : options_(options), in_(in), emitter_(options.format, out) {}

  void build(const std::string& family, const FamilyParams& params) {
    const auto c = descriptor_from(family, params);
    guard_degree(nominal_degree(c), options_);
    Json record = family_record(c);
    record["polynomial"] = format_polynomial(stairpoly::build(c));
    emitter_.emit(record);
  }

  void classify(const std::string& arg) {
    const std::string input = resolve(arg);
    const auto p = parse(input);
    const auto c = stairpoly::classify(p);
    Json record;
    record["input"] = input;
    record.update(family_record(c));
    record["polynomial"] = format_polynomial(p);
    emitter_.emit(record);
  }

  void factor(const std::vector<std::string>& words, const FamilyParams& params, bool with_roots) {
    std::optional<std::string> input;
    Classification c;
    Polynomial p;
    if (words.size() == 1 && is_family_word(words[0])) {
      c = descriptor_from(words[0], params);
      guard_degree(nominal_degree(c), options_);
      p = stairpoly::build(c);
    } else if (words.size() == 1) {
      input = resolve(words[0]);
      p = parse(*input);
      c = stairpoly::classify(p);
    } else {
      throw UsageError("expected a single polynomial or a family name (sp|asp|msp|gsp)");
    }
    if (family_of(c) == Family::NotInFamily) throw NotInFamilyError();

    const auto form = options_.normalize_asp ? AspForm::Normalized : AspForm::Literal;
    const FactorList factors = stairpoly::factor(c, form);
    const bool verified = verify(p, factors, cache_);

    Json record;
    if (input) record["input"] = *input;
    record.update(family_record(c));
    record["polynomial"] = format_polynomial(p);
    record["factorization"] = format_factors(factors);
    record["factors"] = factors_json(factors);
    if (with_roots && verified) {
      const RootSet roots = roots_of(p, factors, cache_);
      record["roots"] = roots_json(p, roots);
      record["real_roots"] = real_roots_json(roots);
      record["stability"] = stability_json(schur_report(roots));
    }
    record["verified"] = verified;
    emitter_.emit(record);
    if (!verified) throw VerificationFailure("factorization did not expand back to the input");
  }

  void enumerate(std::uint64_t n) {
    if (n == 0) throw PreconditionViolated("--n must be positive");
    guard_degree(n, options_);
    bool all_verified = true;
    for (std::uint64_t h = 1; h <= sp_count(n); ++h) {
      const SpDescriptor desc{n, h};
      const auto p = build_sp(desc);
      const auto factors = factor_sp(desc);
      const bool verified = verify(p, factors, cache_);
      all_verified = all_verified && verified;
      Json record = family_record(desc);
      record["polynomial"] = format_polynomial(p);
      record["factorization"] = format_factors(factors);
      record["factors"] = factors_json(factors);
      record["verified"] = verified;
      emitter_.emit(record);
    }
    if (!all_verified) throw VerificationFailure("an enumerated factorization failed to verify");
  }

  void cyclotomic_poly(std::uint64_t n) {
    if (n == 0) throw PreconditionViolated("cyclotomic index must be positive");
    guard_degree(n, options_);
    Json record;
    record["params"] = {{"index", n}};
    record["degree"] = totient(n);
    record["polynomial"] = format_polynomial(cache_.get(n));
    emitter_.emit(record);
  }

  void verify_sweeps(std::uint64_t n_max);

 private:
  // "-" reads the whole of stdin; surrounding whitespace is dropped.
  std::string resolve(const std::string& arg) {
    if (arg != "-") return arg;
    std::string text(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>{});
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    return text.substr(first, text.find_last_not_of(" \t\r\n") - first + 1);
  }

  Polynomial parse(const std::string& text) {
    return parse_polynomial(text, ParseOptions{options_.max_degree});
  }

  struct Tally {
    std::uint64_t cases = 0;
    std::uint64_t failed = 0;

    void check(bool ok) {
      ++cases;
      if (!ok) ++failed;
    }
  };

  void emit_tally(const std::string& name, const Tally& t) {
    emitter_.emit(Json{{"sweep", name},
                       {"cases", t.cases},
                       {"passed", t.cases - t.failed},
                       {"failed", t.failed}});
    total_failed_ += t.failed;
  }

  GlobalOptions options_;
  std::istream& in_;
  Emitter emitter_;
  CyclotomicCache cache_;
  std::uint64_t total_failed_ = 0;
};

void Session::verify_sweeps(std::uint64_t n_max) {
  if (n_max == 0) throw PreconditionViolated("--n-max must be positive");
  guard_degree(n_max, options_);

  Tally products;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    Polynomial product = Polynomial::constant(1);
    for (auto d : divisors(n)) product = product * cache_.get(d);
    products.check(product == binomial_minus_one(n));
  }
  emit_tally("cyclotomic-product", products);

  Tally properties;
  for (std::uint64_t m = 3; m <= n_max; m += 2) properties.check(check_property_1(m, cache_));
  for (std::uint64_t prime : {2, 3, 5, 7}) {
    for (std::uint64_t m = 1; m * prime <= n_max; ++m) {
      properties.check(m % prime == 0 ? check_property_2(m, prime, cache_)
                                      : check_property_3(m, prime, cache_));
    }
  }
  emit_tally("cyclotomic-properties", properties);

  Tally split;
  Tally sp;
  Tally asp;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (std::uint64_t h = 1; h <= sp_count(n); ++h) {
      const SpDescriptor desc{n, h};
      const auto p = build_sp(desc);
      const auto [ell, m] = all_one_split(desc);
      split.check(all_one(ell) * all_one(m) == p);
      sp.check(verify(p, factor_sp(desc), cache_) && classify_sp(p) == desc);

      const AspDescriptor adesc{n, h};
      const auto t = build_asp(adesc);
      asp.check(verify(t, factor_asp(adesc), cache_) &&
                verify(t, factor_asp(adesc, AspForm::Normalized), cache_) &&
                classify_asp(t) == adesc);
    }
  }
  emit_tally("all-one-split", split);
  emit_tally("sp-factor", sp);
  emit_tally("asp-factor", asp);

  Tally msp;
  for (std::uint64_t d : {2, 3, 5}) {
    for (std::uint64_t base_n = 1; base_n * d <= n_max; ++base_n) {
      for (std::uint64_t h = 1; h <= sp_count(base_n); ++h) {
        const MspDescriptor desc{base_n, d, h};
        const auto p = build_msp(desc);
        msp.check(verify(p, factor_msp(desc), cache_) && classify_msp(p) == desc);
      }
    }
  }
  emit_tally("msp-factor", msp);

  Tally gsp;
  for (const char* alpha_text : {"2", "-3", "1/2", "5/7"}) {
    const Rational alpha(alpha_text);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      for (std::uint64_t h = 1; h <= sp_count(n); ++h) {
        const GspDescriptor desc{n, h, alpha};
        const auto p = build_gsp(desc);
        gsp.check(verify(p, factor_gsp(desc), cache_) && classify_gsp(p) == desc);
      }
    }
  }
  emit_tally("gsp-factor", gsp);

  if (total_failed_ > 0) {
    throw VerificationFailure(std::to_string(total_failed_) + " sweep case(s) failed");
  }
}

void add_family_options(CLI::App* cmd, FamilyParams& params) {
  cmd->add_option("--n", params.n, "Degree n");
  cmd->add_option("--h", params.h, "Height h");
  cmd->add_option("--base-n", params.base_n, "Degree of the underlying SP (msp)");
  cmd->add_option("--d", params.d, "Stretch d >= 2 (msp)");
  cmd->add_option("--alpha", params.alpha, "Rational scale alpha (gsp)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Staircase palindromic polynomials: build, classify, factor, roots", "stairpoly"};
  // --h is the height option, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions options;
  std::string format_name = "human";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  app.add_option("--max-degree", options.max_degree, "Reject inputs above this degree")
      ->capture_default_str();
  app.add_flag("--normalize-asp", options.normalize_asp,
               "Rewrite Psi_k(-x) as Psi_2k(x) for odd k > 1");

  FamilyParams params;
  std::string family;
  std::string input;
  std::vector<std::string> words;
  std::uint64_t enumerate_n = 0;
  std::uint64_t cyclotomic_n = 0;
  std::uint64_t n_max = 60;

  auto* build_cmd = app.add_subcommand("build", "Print a family member");
  build_cmd->add_option("family", family, "sp|asp|msp|gsp")
      ->required()
      ->check(CLI::IsMember({"sp", "asp", "msp", "gsp"}));
  add_family_options(build_cmd, params);

  auto* classify_cmd = app.add_subcommand("classify", "Identify the family of a polynomial");
  classify_cmd->add_option("polynomial", input, "Polynomial text, or - for stdin")->required();

  auto* factor_cmd = app.add_subcommand("factor", "Factor into cyclotomic polynomials");
  factor_cmd->add_option("input", words, "Polynomial text, - for stdin, or a family name")
      ->required();
  add_family_options(factor_cmd, params);

  auto* roots_cmd = app.add_subcommand("roots", "Enumerate roots and report stability");
  roots_cmd->add_option("input", words, "Polynomial text, - for stdin, or a family name")
      ->required();
  add_family_options(roots_cmd, params);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every SP polynomial of degree n");
  enumerate_cmd->add_option("--n", enumerate_n, "Degree n")->required();

  auto* cyclotomic_cmd = app.add_subcommand("cyclotomic", "Print the n-th cyclotomic polynomial");
  cyclotomic_cmd->add_option("n", cyclotomic_n, "Index n >= 1")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the exact verification sweeps");
  verify_cmd->add_option("--n-max", n_max, "Largest degree swept")->capture_default_str();

  for (auto* sub : app.get_subcommands({})) {
    sub->set_help_flag("--help", "Print this help message and exit");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }
  options.format = format_name == "json" ? Format::Json : Format::Human;

  Session session(options, in, out);
  try {
    if (*build_cmd) {
      session.build(family, params);
    } else if (*classify_cmd) {
      session.classify(input);
    } else if (*factor_cmd) {
      session.factor(words, params, false);
    } else if (*roots_cmd) {
      session.factor(words, params, true);
    } else if (*enumerate_cmd) {
      session.enumerate(enumerate_n);
    } else if (*cyclotomic_cmd) {
      session.cyclotomic_poly(cyclotomic_n);
    } else if (*verify_cmd) {
      session.verify_sweeps(n_max);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace stairpoly::cli
