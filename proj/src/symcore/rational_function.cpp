#include "cartan235/symcore/rational_function.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "cartan235/error.hpp"

namespace cartan235::symcore {
namespace {

// Scales num and den by the same rational so both have integer coefficients
// with no common integer factor and den has a positive leading coefficient.
void fix_content(Polynomial& num, Polynomial& den) {
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  auto scan = [&](const Polynomial& p) {
    for (const auto& t : p.terms()) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
    }
  };
  scan(num);
  scan(den);
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (den.leading_term().coefficient < 0) factor = -factor;
  if (factor != 1) {
    num = num.scaled(factor);
    den = den.scaled(factor);
  }
}

}  // namespace

RationalFunction::RationalFunction(const Rational& value) : num_(value), den_(1) {
  if (!num_.is_zero()) fix_content(num_, den_);
}

RationalFunction::RationalFunction(const Polynomial& p) : num_(p), den_(1) {
  if (!num_.is_zero()) fix_content(num_, den_);
}

RationalFunction RationalFunction::fraction(const Polynomial& num, const Polynomial& den) {
  RationalFunction r(num, den, 0);
  r.canonicalize();
  return r;
}

void RationalFunction::canonicalize() {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  fix_content(num_, den_);
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "rational function is not constant");
  if (num_.is_zero()) return 0;
  return num_.constant_value() / den_.constant_value();
}

std::vector<Symbol> RationalFunction::variables() const {
  auto a = num_.variables();
  auto b = den_.variables();
  std::vector<Symbol> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, 0); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (den_.is_monomial() && o.den_.is_monomial()) {
    const Term& a = den_.leading_term();
    const Term& b = o.den_.leading_term();
    Monomial l = Monomial::lcm(a.monomial, b.monomial);
    num_ = num_.times_monomial(l / a.monomial, 1 / a.coefficient) +
           o.num_.times_monomial(l / b.monomial, 1 / b.coefficient);
    den_ = Polynomial::monomial(l);
  } else {
    Polynomial g = gcd(den_, o.den_);
    if (g.is_constant()) {
      num_ = num_ * o.den_ + o.num_ * den_;
      den_ = den_ * o.den_;
    } else {
      Polynomial d1 = den_.divide_exact(g);
      Polynomial d2 = o.den_.divide_exact(g);
      num_ = num_ * d2 + o.num_ * d1;
      den_ = den_ * d2;
    }
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RationalFunction();
  // Cross-cancel so the products are already coprime.
  Polynomial a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant()) {
    Polynomial g = gcd(a, d);
    if (!g.is_constant()) {
      a = a.divide_exact(g);
      d = d.divide_exact(g);
    }
  }
  if (!b.is_constant()) {
    Polynomial g = gcd(c, b);
    if (!g.is_constant()) {
      c = c.divide_exact(g);
      b = b.divide_exact(g);
    }
  }
  num_ = a * c;
  den_ = b * d;
  fix_content(num_, den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
  RationalFunction inverse(o.den_, o.num_, 0);
  fix_content(inverse.num_, inverse.den_);
  return *this *= inverse;
}

RationalFunction RationalFunction::pow(int n) const {
  if (n == 0) return RationalFunction(1);
  if (n < 0) {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    RationalFunction inverse(den_, num_, 0);
    fix_content(inverse.num_, inverse.den_);
    return inverse.pow(-n);
  }
  RationalFunction r(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)), 0);
  if (!r.num_.is_zero()) fix_content(r.num_, r.den_);
  return r;
}

std::string RationalFunction::str() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
  std::string n = num_.size() > 1 ? "(" + num_.str() + ")" : num_.str();
  bool bare = den_.is_monomial() && den_.leading_term().coefficient == 1 &&
              den_.leading_term().monomial.factors().size() == 1;
  bare = bare || den_.is_constant();
  return n + "/" + (bare ? den_.str() : "(" + den_.str() + ")");
}

// ---------------------------------------------------------------------------
// Calculus and substitution
// ---------------------------------------------------------------------------

namespace {

// d s / d c as a rational function, or nullopt when it vanishes.
std::optional<RationalFunction> symbol_derivative(Symbol s, Symbol c) {
  const SymbolInfo& info = s.info();
  const std::string& cname = c.info().name;
  switch (info.kind) {
    case SymbolKind::Coordinate:
      if (s == c) return RationalFunction(1);
      return std::nullopt;
    case SymbolKind::Jet: {
      auto slots = function_slots(info.name);
      std::optional<RationalFunction> total;
      for (std::size_t k = 0; k < slots.size() && k < info.orders.size(); ++k) {
        if (std::find(slots[k].begin(), slots[k].end(), cname) == slots[k].end()) continue;
        std::vector<int> raised = info.orders;
        raised[k] += 1;
        RationalFunction term(Symbol::jet(info.name, raised));
        total = total ? *total + term : term;
      }
      return total;
    }
    case SymbolKind::Root: {
      if (info.name != cname) return std::nullopt;
      // u = c^(1/d)  =>  du/dc = 1 / (d u^(d-1))
      int d = info.root_degree;
      return RationalFunction::fraction(Polynomial(1),
                                        Polynomial::variable(s, static_cast<unsigned>(d - 1)).scaled(d));
    }
  }
  return std::nullopt;
}

}  // namespace

RationalFunction partial_derivative(const RationalFunction& r, Symbol coordinate) {
  if (coordinate.kind() != SymbolKind::Coordinate) {
    throw Error(ErrorCode::InvalidArgument, "differentiation variable must be a coordinate");
  }
  if (r.is_constant()) return RationalFunction();

  std::vector<std::pair<Symbol, RationalFunction>> chain;
  bool polynomial_chain = true;
  for (Symbol s : r.variables()) {
    auto ds = symbol_derivative(s, coordinate);
    if (!ds) continue;
    polynomial_chain = polynomial_chain && ds->is_polynomial();
    chain.emplace_back(s, std::move(*ds));
  }
  if (chain.empty()) return RationalFunction();

  const Polynomial& n = r.numerator();
  const Polynomial& d = r.denominator();
  if (polynomial_chain) {
    auto total = [&](const Polynomial& p) {
      Polynomial out;
      for (const auto& [s, ds] : chain) {
        if (!p.contains(s)) continue;
        out += p.formal_derivative(s) * ds.numerator().scaled(1 / ds.denominator().constant_value());
      }
      return out;
    };
    Polynomial dn = total(n);
    if (d.is_constant()) return RationalFunction::fraction(dn, d);
    Polynomial dd = total(d);
    return RationalFunction::fraction(dn * d - n * dd, d * d);
  }
  auto total = [&](const Polynomial& p) {
    RationalFunction out;
    for (const auto& [s, ds] : chain) {
      if (!p.contains(s)) continue;
      out += RationalFunction(p.formal_derivative(s)) * ds;
    }
    return out;
  };
  RationalFunction dn = total(n);
  if (d.is_constant()) return dn / RationalFunction(d);
  RationalFunction dd = total(d);
  RationalFunction D(d);
  return (dn * D - RationalFunction(n) * dd) / (D * D);
}

namespace {

Rational rational_pow(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned k = 0; k < e; ++k) r *= base;
  return r;
}

// Evaluates p under the bindings as numerator / denominator over the common
// denominator prod_s den(s)^maxdeg(s), without intermediate gcds.
std::pair<Polynomial, Polynomial> evaluate_polynomial(const Polynomial& p, const Bindings& bindings) {
  std::map<std::uint16_t, unsigned> max_exponent;
  for (const auto& t : p.terms()) {
    for (const auto& f : t.monomial.factors()) {
      auto& e = max_exponent[f.id];
      e = std::max<unsigned>(e, f.exponent);
    }
  }
  struct Value {
    Polynomial num;
    Polynomial den;
    std::map<unsigned, Polynomial> num_pow;
    std::map<unsigned, Polynomial> den_pow;
  };
  std::map<std::uint16_t, Value> values;
  Polynomial common(1);
  for (const auto& [id, e] : max_exponent) {
    Symbol s = Symbol::from_id(id);
    auto it = bindings.find(s);
    if (it == bindings.end()) continue;
    Value v{it->second.numerator(), it->second.denominator(), {}, {}};
    if (!v.den.is_constant()) common = common * v.den.pow(e);
    values.emplace(id, std::move(v));
  }
  auto power = [](std::map<unsigned, Polynomial>& cache, const Polynomial& base, unsigned k) -> const Polynomial& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    return cache.emplace(k, base.pow(k)).first->second;
  };
  std::vector<Term> untouched;
  Polynomial sum;
  for (const auto& t : p.terms()) {
    Monomial rest;
    Polynomial prod = Polynomial(t.coefficient);
    for (const auto& f : t.monomial.factors()) {
      if (!values.count(f.id)) rest = rest * Monomial::variable(Symbol::from_id(f.id), f.exponent);
    }
    // Every bound symbol contributes, including those absent from this term,
    // whose share of the common denominator must still be restored.
    for (auto& [id, v] : values) {
      const unsigned e = t.monomial.exponent(id);
      if (e > 0) prod = prod * power(v.num_pow, v.num, e);
      if (v.den.is_constant()) {
        if (e > 0) prod = prod.scaled(1 / rational_pow(v.den.constant_value(), e));
      } else if (max_exponent[id] > e) {
        prod = prod * power(v.den_pow, v.den, max_exponent[id] - e);
      }
    }
    sum += prod.times_monomial(rest);
  }
  return {sum, common};
}

}  // namespace

RationalFunction substitute(const RationalFunction& r, const Bindings& bindings) {
  if (bindings.empty()) return r;
  for (const auto& [s, v] : bindings) {
    if (v.contains(s)) {
      throw Error(ErrorCode::InvalidSubstitution, "binding for " + s.display() + " refers to itself");
    }
  }
  auto [nn, nd] = evaluate_polynomial(r.numerator(), bindings);
  auto [dn, dd] = evaluate_polynomial(r.denominator(), bindings);
  if (dn.is_zero()) throw Error(ErrorCode::DivisionByZero, "substitution makes the denominator vanish");
  return RationalFunction::fraction(nn * dd, nd * dn);
}

double evaluate_numeric(const RationalFunction& r, const NumericPoint& point, double floor) {
  std::map<std::uint16_t, double> ids;
  for (const auto& [s, v] : point) ids.emplace(s.id(), v);
  double den = r.denominator().evaluate(ids);
  if (!(std::abs(den) >= floor)) {
    throw Error(ErrorCode::NearSingularEvaluation, "denominator " + std::to_string(den) + " below floor");
  }
  return r.numerator().evaluate(ids) / den;
}

}  // namespace cartan235::symcore
