#pragma once

#include <gmpxx.h>

#include <boost/container/small_vector.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cartan235/symcore/symbol.hpp"

namespace cartan235::symcore {

using Rational = mpq_class;
using Integer = mpz_class;

/// Power product of symbols, stored sparsely as (id, exponent) pairs sorted by id.
class Monomial {
 public:
  struct Factor {
    std::uint16_t id;
    std::uint16_t exponent;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  static Monomial variable(Symbol s, unsigned exponent = 1);

  unsigned degree() const noexcept { return degree_; }
  unsigned exponent(Symbol s) const noexcept { return exponent(s.id()); }
  unsigned exponent(std::uint16_t id) const noexcept;
  bool is_one() const noexcept { return factors_.empty(); }
  std::span<const Factor> factors() const noexcept { return {factors_.data(), factors_.size()}; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const noexcept;
  /// Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial without(std::uint16_t id) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  /// Graded lexicographic; lower ids are the more significant variables.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;
  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.factors_ == b.factors_;
  }

  std::string str() const;

 private:
  boost::container::small_vector<Factor, 6> factors_;
  unsigned degree_ = 0;
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Sparse multivariate polynomial over Q. Terms are kept strictly decreasing
/// in the graded lexicographic order with no zero coefficients, so equality
/// is structural.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long value);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& value);  // NOLINT(google-explicit-constructor)
  static Polynomial variable(Symbol s, unsigned exponent = 1);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  /// Sorts and merges arbitrary terms.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  Rational constant_value() const;
  std::size_t size() const noexcept { return terms_.size(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  unsigned total_degree() const noexcept;
  unsigned degree_in(Symbol s) const noexcept;
  std::vector<Symbol> variables() const;
  bool contains(Symbol s) const noexcept { return degree_in(s) > 0; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c = 1) const;
  Polynomial pow(unsigned n) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept;

  /// Quotient when `divisor` divides this exactly; throws NotExactlyDivisible otherwise.
  Polynomial divide_exact(const Polynomial& divisor) const;
  bool try_divide(const Polynomial& divisor, Polynomial& quotient) const;

  /// Formal partial derivative with respect to a symbol (no chain rule).
  Polynomial formal_derivative(Symbol s) const;

  /// Coefficients c_k with this = sum_k c_k s^k.
  std::vector<Polynomial> coefficients_in(Symbol s) const;
  static Polynomial from_coefficients(Symbol s, std::span<const Polynomial> coefficients);

  /// Largest monomial dividing every term.
  Monomial monomial_content() const;
  /// Positive rational c such that this / c has coprime integer coefficients
  /// (sign chosen so the leading coefficient of this / c is positive).
  Rational rational_content() const;
  /// this / rational_content().
  Polynomial primitive() const;

  double evaluate(const std::map<std::uint16_t, double>& point) const;

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

/// Greatest common divisor, primitive with positive leading coefficient.
/// gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace cartan235::symcore
