#include "stairpoly/textio.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "stairpoly/error.hpp"

namespace stairpoly {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

  Polynomial run() {
    std::map<std::size_t, Rational> terms;
    skip_space();
    bool negative = sign_run();
    for (;;) {
      auto [coeff, exponent] = term();
      if (negative) coeff = -coeff;
      terms[exponent] += coeff;
      skip_space();
      if (at_end()) break;
      if (!is_sign(peek())) throw ParseError(pos_, "'+' or '-'");
      negative = sign_run();
    }

    std::vector<Rational> cs(terms.empty() ? 0 : terms.rbegin()->first + 1);
    for (auto& [exponent, coeff] : terms) cs[exponent] = std::move(coeff);
    return Polynomial(std::move(cs));
  }

 private:
  static bool is_sign(char c) { return c == '+' || c == '-'; }
  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  // Consumes any run of '+'/'-' and returns whether the net sign is negative.
  bool sign_run() {
    bool negative = false;
    while (is_sign(peek())) {
      if (peek() == '-') negative = !negative;
      ++pos_;
      skip_space();
    }
    return negative;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (is_digit(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<Rational, std::size_t> term() {
    Rational coeff = 1;
    bool has_coeff = false;
    if (is_digit(peek())) {
      has_coeff = true;
      mpz_class num(digits());
      skip_space();
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::size_t den_pos = pos_;
        if (!is_digit(peek())) throw ParseError(pos_, "denominator digits");
        den = mpz_class(digits());
        if (den == 0) throw ParseError(den_pos, "nonzero denominator");
        skip_space();
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
    }

    if (peek() != 'x') {
      if (!has_coeff) throw ParseError(pos_, "coefficient or 'x'");
      return {coeff, 0};
    }
    ++pos_;
    skip_space();
    if (peek() != '^') return {coeff, 1};
    ++pos_;
    skip_space();
    const std::size_t exp_pos = pos_;
    if (!is_digit(peek())) throw ParseError(pos_, "exponent digits");
    std::size_t exponent = 0;
    while (is_digit(peek())) {
      exponent = exponent * 10 + static_cast<std::size_t>(peek() - '0');
      if (exponent > options_.max_degree) {
        throw ParseError(exp_pos, "exponent at most " + std::to_string(options_.max_degree));
      }
      ++pos_;
    }
    return {coeff, exponent};
  }

  std::string_view text_;
  const ParseOptions& options_;
  std::size_t pos_ = 0;
};

std::string power_of_x(std::size_t exponent) {
  if (exponent == 0) return "";
  if (exponent == 1) return "x";
  return "x^" + std::to_string(exponent);
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).run();
}

std::string format_rational(const Rational& r) { return r.get_str(); }

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto cs = p.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    const Rational& c = cs[i];
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Rational magnitude = abs(c);
    if (magnitude != 1 || i == 0) out += format_rational(magnitude);
    out += power_of_x(i);
  }
  return out;
}

std::string format_argument(const Transform& t) {
  if (std::holds_alternative<Identity>(t)) return "x";
  if (std::holds_alternative<NegateArg>(t)) return "-x";
  if (const auto* power = std::get_if<PowerArg>(&t)) return power_of_x(power->d);
  const Rational& alpha = std::get<ScaleArg>(t).alpha;
  if (alpha == 1) return "x";
  if (alpha == -1) return "-x";
  return format_rational(alpha) + "x";
}

std::vector<GroupedFactor> group_factors(const FactorList& f) {
  std::vector<GroupedFactor> out;
  for (const auto& factor : f.factors()) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const GroupedFactor& g) { return g.factor == factor; });
    if (it != out.end()) {
      ++it->exponent;
    } else {
      out.push_back({factor, 1});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const GroupedFactor& a, const GroupedFactor& b) {
    return a.factor.index < b.factor.index;
  });
  return out;
}

std::string format_factors(const FactorList& f) {
  if (f.empty()) return format_rational(f.unit());
  std::string out;
  if (f.unit() != 1) out = "(" + format_rational(f.unit()) + ")";
  for (const auto& g : group_factors(f)) {
    if (!out.empty()) out += '*';
    out += "Psi_" + std::to_string(g.factor.index) + "(" + format_argument(g.factor.transform) + ")";
    if (g.exponent > 1) out += "^" + std::to_string(g.exponent);
  }
  return out;
}

}  // namespace stairpoly
