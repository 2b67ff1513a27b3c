#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cartan235/symcore/rational_function.hpp"

namespace cartan235::dist235 {

using symcore::Rational;
using symcore::RationalFunction;
using symcore::Symbol;

struct PowerTerm {
  Rational coefficient;
  Rational exponent;
  friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

/// Finite sum c_1 v^e_1 + c_2 v^e_2 + ... in one variable with rational
/// coefficients and exponents. Terms are merged by exponent, zero terms
/// dropped, and kept in decreasing exponent order.
class PowerSum {
 public:
  PowerSum() = default;
  explicit PowerSum(std::vector<PowerTerm> terms);

  const std::vector<PowerTerm>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// lcm of the exponent denominators; exponents are realized through v = u^d.
  long root_degree() const;

  /// v itself inside the realization: the coordinate v, or u^d.
  RationalFunction variable(Symbol v) const;
  /// v^e in the realization of this sum.
  RationalFunction power(Symbol v, const Rational& e) const;
  /// The k-th derivative, realized; the exponents stay in the same root ring.
  RationalFunction derivative(Symbol v, int k) const;
  RationalFunction value(Symbol v) const { return derivative(v, 0); }

  /// Canonical text, e.g. "-3/2*q^(-1) + q^1/3 + 2".
  std::string str(std::string_view variable_name) const;

  friend bool operator==(const PowerSum&, const PowerSum&) = default;

 private:
  std::vector<PowerTerm> terms_;
};

/// Falling factorial e (e-1) ... (e-k+1).
Rational falling_factorial(const Rational& e, int k);

}  // namespace cartan235::dist235
