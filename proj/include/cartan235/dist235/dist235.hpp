#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cartan235/curvature/curvature.hpp"
#include "cartan235/dist235/power_sum.hpp"
#include "cartan235/exterior/coframe.hpp"

namespace cartan235::dist235 {

using curvature::CartanQuartic;
using exterior::Coframe;
using exterior::DifferentialForm;
using symcore::Polynomial;

/// The function f(q) of the Monge distribution dz = f(q) dx: either a formal
/// jet (symbols f0, f1, ...) or an explicit power sum in q.
struct MongeSpec {
  enum class Mode { SymbolicJet, Explicit };
  Mode mode = Mode::SymbolicJet;
  PowerSum f;

  static MongeSpec jet() { return {}; }
  static MongeSpec explicit_f(PowerSum f) { return {Mode::Explicit, std::move(f)}; }

  /// q in the realization (the coordinate, or u^d when exponents are fractional).
  RationalFunction q() const;
  /// f^(k) as a rational function.
  RationalFunction derivative(int k) const;
  std::string str() const;
};

using MongeForms = std::array<DifferentialForm, 5>;

/// omega1 = dy - p dx, omega2 = dp - q dx, omega3 = dz - f dx, omega4 = dq, omega5 = dx.
MongeForms monge_coframe(const MongeSpec& spec);

class VectorField {
 public:
  VectorField(exterior::ChartPtr chart, std::vector<RationalFunction> coefficients);
  const exterior::ChartPtr& chart() const noexcept { return chart_; }
  const std::vector<RationalFunction>& coefficients() const noexcept { return c_; }
  const RationalFunction& operator[](std::size_t k) const { return c_.at(k); }
  RationalFunction apply(const RationalFunction& f) const;
  bool is_zero() const;
  std::string str() const;
  friend bool operator==(const VectorField&, const VectorField&) = default;

 private:
  exterior::ChartPtr chart_;
  std::vector<RationalFunction> c_;
};

VectorField lie_bracket(const VectorField& a, const VectorField& b);

struct BracketFrame {
  std::array<VectorField, 5> fields;  // [X5,[X4,X5]], [X4,[X4,X5]], [X4,X5], X4, X5
  RationalFunction determinant;
  bool generic() const { return !determinant.is_zero(); }
};

BracketFrame bracket_frame(const MongeSpec& spec);

/// The adapted coframe theta^1..theta^5 built from f and its first four derivatives.
Coframe adapted_coframe_fq(const MongeSpec& spec);

struct StructureForms {
  std::array<DifferentialForm, 7> omega;
  std::size_t solution_space_dim = 0;
  std::size_t rank = 0;
  /// d theta^i minus the right-hand side, recomputed with coordinate forms.
  std::vector<DifferentialForm> residual;
  bool residual_zero() const;
};

/// Solves the five structure equations
///   d theta1 = theta1^(2 O1 + O4) + theta2^O2 + theta3^theta4
///   d theta2 = theta1^O3 + theta2^(O1 + 2 O4) + theta3^theta5
///   d theta3 = theta1^O5 + theta2^O6 + theta3^(O1 + O4) + theta4^theta5
///   d theta4 = theta1^O7 + 4/3 theta3^O6 + theta4^O1 + theta5^O2
///   d theta5 = theta2^O7 - 4/3 theta3^O5 + theta4^O3 + theta5^O4
/// for O1..O7. Throws NotAdapted when no solution exists.
StructureForms solve_structure_forms(const Coframe& c);

curvature::CurvatureResult pipeline_fq(const MongeSpec& spec);
CartanQuartic quartic_fq(const MongeSpec& spec);

/// 10 f6 f2^3 - 80 f2^2 f3 f5 - 51 f2^2 f4^2 + 336 f2 f3^2 f4 - 224 f3^4 in the jets of spec.
RationalFunction a5_residual(const MongeSpec& spec);
/// The same expression in the formal jet symbols.
Polynomial a5_polynomial();

/// a5 of f = q^m equals P(m) q^(4m - 12); this returns P(m).
Rational a5_monomial_coefficient(const Rational& m);
/// P as a polynomial in the coordinate symbol "m".
Polynomial a5_monomial_polynomial();

}  // namespace cartan235::dist235
