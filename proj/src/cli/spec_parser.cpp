#include "cartan235/cli/spec_parser.hpp"

#include <cctype>

#include "cartan235/error.hpp"

namespace cartan235::cli {

using dist235::PowerSum;
using dist235::PowerTerm;
using symcore::Rational;

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ParsedSpec run() {
    ParsedSpec out;
    skip();
    if (at_end()) fail("empty specification");
    const std::size_t start = pos_;
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      std::string word = identifier();
      skip();
      if ((word == "jet" || word == "jet4") && at_end()) {
        out.kind = word == "jet" ? ParsedSpec::Kind::Jet : ParsedSpec::Kind::Jet4;
        return out;
      }
      if (word == "jet" || word == "jet4") fail_at(start, "reserved word '" + word + "' must stand alone");
      pos_ = start;
    }

    std::vector<PowerTerm> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip();
    }
    terms.push_back(term(negative, out.variable));
    while (!at_end()) {
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip();
      terms.push_back(term(c == '-', out.variable));
    }
    out.sum = PowerSum(std::move(terms));
    return out;
  }

 private:
  PowerTerm term(bool negative, std::string& variable) {
    Rational c(1);
    bool have_coefficient = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = rational();
      have_coefficient = true;
      if (peek() != '*') return {negative ? Rational(-c) : c, Rational(0)};
      ++pos_;
      skip();
    }
    if (!std::isalpha(static_cast<unsigned char>(peek()))) {
      fail(have_coefficient ? "expected a variable after '*'" : "expected a number or a variable");
    }
    const std::size_t at = pos_;
    std::string v = identifier();
    if (v == "x") v = "x5";
    if (v != "q" && v != "x5") fail_at(at, "unknown variable '" + v + "'");
    if (!variable.empty() && variable != v) fail_at(at, "mixed variables '" + variable + "' and '" + v + "'");
    variable = v;
    skip();
    Rational e(1);
    if (peek() == '^') {
      ++pos_;
      skip();
      e = exponent();
    }
    return {negative ? Rational(-c) : c, e};
  }

  Rational exponent() {
    if (peek() == '(') {
      ++pos_;
      skip();
      bool neg = false;
      if (peek() == '-' || peek() == '+') {
        neg = peek() == '-';
        ++pos_;
        skip();
      }
      Rational e = rational();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      skip();
      return neg ? Rational(-e) : e;
    }
    if (peek() == '-') fail("negative exponents must be parenthesized");
    return rational();
  }

  Rational rational() {
    mpz_class num = integer();
    if (peek() != '/') return Rational(num);
    ++pos_;
    skip();
    const std::size_t at = pos_;
    mpz_class den = integer();
    if (den == 0) fail_at(at, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  mpz_class integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
    skip();
    return mpz_class(digits);
  }

  std::string identifier() {
    std::string w;
    while (std::isalnum(static_cast<unsigned char>(peek()))) w += s_[pos_++];
    return w;
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    std::string msg = "column " + std::to_string(at + 1) + ": " + what + "\n  " + std::string(s_) + "\n  " +
                      std::string(at, ' ') + "^";
    throw Error(ErrorCode::ParseError, msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedSpec parse_spec(std::string_view input) { return Parser(input).run(); }

std::string canonical(const ParsedSpec& spec, std::string_view fallback_variable) {
  switch (spec.kind) {
    case ParsedSpec::Kind::Jet:
      return "jet";
    case ParsedSpec::Kind::Jet4:
      return "jet4";
    case ParsedSpec::Kind::Sum:
      break;
  }
  return spec.sum.str(spec.variable.empty() ? fallback_variable : std::string_view(spec.variable));
}

dist235::MongeSpec to_monge(const ParsedSpec& spec) {
  if (spec.kind == ParsedSpec::Kind::Jet) return dist235::MongeSpec::jet();
  if (spec.kind == ParsedSpec::Kind::Jet4) throw Error(ErrorCode::InvalidArgument, "jet4 is a Theta specification");
  if (!spec.variable.empty() && spec.variable != "q") {
    throw Error(ErrorCode::InvalidArgument, "an f specification is written in q, not " + spec.variable);
  }
  return dist235::MongeSpec::explicit_f(spec.sum);
}

twistor::HeavenlySpec to_heavenly(const ParsedSpec& spec) {
  if (spec.kind == ParsedSpec::Kind::Jet) return twistor::HeavenlySpec::jet();
  if (spec.kind == ParsedSpec::Kind::Jet4) return twistor::HeavenlySpec::jet4();
  if (!spec.variable.empty() && spec.variable != "x5") {
    throw Error(ErrorCode::InvalidArgument, "a Theta specification is written in x5 (or x), not " + spec.variable);
  }
  return twistor::HeavenlySpec::explicit_theta(spec.sum);
}

}  // namespace cartan235::cli
