#include "cartan235/dist235/power_sum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cartan235/error.hpp"

namespace cartan235::dist235 {

using symcore::Polynomial;

PowerSum::PowerSum(std::vector<PowerTerm> terms) {
  std::map<Rational, Rational> merged;
  for (auto& t : terms) {
    t.coefficient.canonicalize();
    t.exponent.canonicalize();
    merged[t.exponent] += t.coefficient;
  }
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    if (it->second != 0) terms_.push_back({it->second, it->first});
  }
}

long PowerSum::root_degree() const {
  long d = 1;
  for (const auto& t : terms_) d = std::lcm(d, t.exponent.get_den().get_si());
  return d;
}

RationalFunction PowerSum::variable(Symbol v) const { return power(v, Rational(1)); }

RationalFunction PowerSum::power(Symbol v, const Rational& e) const {
  const long d = root_degree();
  Rational scaled = e * d;
  scaled.canonicalize();
  if (scaled.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "exponent outside the root ring");
  const long k = scaled.get_num().get_si();
  Symbol base = d == 1 ? v : Symbol::root(v.display(), static_cast<int>(d));
  Polynomial m = Polynomial::variable(base, static_cast<unsigned>(k < 0 ? -k : k));
  return k < 0 ? RationalFunction::fraction(Polynomial(1), m) : RationalFunction(m);
}

RationalFunction PowerSum::derivative(Symbol v, int k) const {
  RationalFunction out;
  for (const auto& t : terms_) {
    Rational c = t.coefficient * falling_factorial(t.exponent, k);
    if (c == 0) continue;
    out += RationalFunction(c) * power(v, t.exponent - k);
  }
  return out;
}

namespace {
std::string exponent_text(const Rational& e) {
  if (e < 0) return "(" + e.get_str() + ")";
  return e.get_str();
}
}  // namespace

std::string PowerSum::str(std::string_view variable_name) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.exponent == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) out += c.get_str() + "*";
    out += std::string(variable_name) + "^" + exponent_text(t.exponent);
  }
  return out;
}

Rational falling_factorial(const Rational& e, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= e - i;
  return r;
}

}  // namespace cartan235::dist235
