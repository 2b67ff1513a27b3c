#pragma once

#include <map>
#include <string>

#include "cartan235/symcore/polynomial.hpp"

namespace cartan235::symcore {

/// Quotient of polynomials in canonical form: numerator and denominator
/// coprime, both with integer coefficients sharing no common integer factor,
/// and the denominator's leading coefficient positive. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& value);                // NOLINT(google-explicit-constructor)
  RationalFunction(const Polynomial& p);                  // NOLINT(google-explicit-constructor)
  RationalFunction(Symbol s) : RationalFunction(Polynomial::variable(s)) {}  // NOLINT

  /// Canonical representative of num/den; throws DivisionByZero when den is zero.
  static RationalFunction fraction(const Polynomial& num, const Polynomial& den);

  const Polynomial& numerator() const noexcept { return num_; }
  const Polynomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  Rational constant_value() const;
  std::size_t term_count() const noexcept { return num_.size() + den_.size(); }
  bool contains(Symbol s) const noexcept { return num_.contains(s) || den_.contains(s); }
  std::vector<Symbol> variables() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction pow(int n) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  RationalFunction(Polynomial num, Polynomial den, int) : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

/// Values are kept canonical, so normalizing a RationalFunction is the identity;
/// the two-argument form canonicalizes an arbitrary quotient.
inline RationalFunction normalize(const RationalFunction& r) { return r; }
inline RationalFunction normalize(const Polynomial& num, const Polynomial& den) {
  return RationalFunction::fraction(num, den);
}

using Bindings = std::map<Symbol, RationalFunction>;
using NumericPoint = std::map<Symbol, double>;

/// d r / d c for a coordinate c, with the chain rule through jet symbols
/// (raising the slot bound to c) and root symbols (du/dc = u / (d c)).
RationalFunction partial_derivative(const RationalFunction& r, Symbol coordinate);

/// Simultaneous substitution of the bound symbols.
RationalFunction substitute(const RationalFunction& r, const Bindings& bindings);

/// IEEE evaluation of numerator and denominator; throws MissingBinding for
/// unbound symbols and NearSingularEvaluation if |denominator| < floor.
double evaluate_numeric(const RationalFunction& r, const NumericPoint& point, double floor = 1e-300);

}  // namespace cartan235::symcore
