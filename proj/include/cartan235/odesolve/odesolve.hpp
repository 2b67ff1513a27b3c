#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cartan235/symcore/polynomial.hpp"

namespace cartan235::odesolve {

using symcore::Rational;

inline constexpr double kDefaultGuard = 1e-9;

/// Point x with the derivative vector (y, y', ..., y^(n-1)) of an order-n problem.
struct ODEState {
  double x = 0;
  std::vector<double> derivs;
};

/// y^(7) of 10 y3^3 y7 - 70 y3^2 y4 y6 - 49 y3^2 y5^2 + 280 y3 y4^2 y5 - 175 y4^4 = 0.
/// Needs derivs y..y6 and |y3| >= guard (SingularThirdDerivative otherwise).
double rhs7(const ODEState& s, double guard = kDefaultGuard);
/// The same equation one order up: Theta^(8) from Theta..Theta^(7), guarded on Theta^(4).
double rhs8(const ODEState& s, double guard = kDefaultGuard);

/// Left-hand side of the 7th-order equation for y3..y7 (no guard).
double residual7(double y3, double y4, double y5, double y6, double y7);

using Rhs = std::function<double(const ODEState&)>;

struct Trajectory {
  std::vector<ODEState> states;  // uniform grid
  std::vector<double> top;       // y^(n) at each state
  double h = 0;
  int method_order = 4;
  /// max over the grid of |y_h - y_{h/2}| / 15 in the first component
  double error_estimate = 0;
  bool singular = false;  // stopped early at a guard violation
  std::string message;

  std::size_t size() const noexcept { return states.size(); }
  const ODEState& back() const { return states.back(); }
};

/// Classical fourth-order Runge-Kutta on the first-order system, fixed step
/// (adjusted to divide the interval evenly), plus a half-step pass for the
/// Richardson estimate. A guard violation at the initial state throws; later
/// ones stop the run and return the partial trajectory flagged singular.
Trajectory integrate(const Rhs& rhs, const ODEState& init, double x_end, double h);

/// Derivatives of x^a at x: ((a)_0 x^a, (a)_1 x^(a-1), ...), count entries.
ODEState monomial_state(const Rational& a, double x, int count);

/// Closed-form samples of x^a on the grid of integrate(): count derivatives in
/// states and the exact next derivative in top.
Trajectory sample_monomial(const Rational& a, double x0, double x_end, double h, int count);

struct ConvergenceStudy {
  double error_h = 0;       // |numeric - exact| at x_end with step h
  double error_half = 0;    // same with h / 2
  double ratio = 0;         // error_h / error_half
};

ConvergenceStudy convergence_study(const Rhs& rhs, const ODEState& init, double x_end, double h, double exact_end);

struct LegendreCheck {
  double df_dq_residual = 0;  // max |df/dq - x| over the parametric grid
  double a5_residual = 0;     // max |a5| of the reconstructed f-jets
  double a5_quartic = 0;      // max |a5 / (100 f''^4)|, the quartic coefficient
  double a5_relative = 0;     // max |a5| / (sum of the absolute values of its five terms)
  double max_residual() const { return df_dq_residual > a5_residual ? df_dq_residual : a5_residual; }
};

/// For a Theta trajectory (order 8): q = -Theta''', f = Theta'' - x Theta'''.
/// Checks df/dq = x by finite differences on the parametric graph and
/// evaluates a5 on the f-jets given by the Theta-to-f jet transform. Throws
/// NotATransform unless Theta'''' keeps one sign with |Theta''''| >= guard.
LegendreCheck parametric_legendre_check(const Trajectory& theta, double guard = kDefaultGuard);

struct ReducedOrderCheck {
  double max_difference = 0;  // max |y - Theta'| on the common grid
  double bound = 0;           // 10 x (error estimates of both runs)
  bool ok() const { return max_difference <= bound; }
};

/// Integrates the 7th-order equation from y = Theta' data at half the step and
/// compares with the Theta' column on the common grid.
ReducedOrderCheck reduced_order_residual(const Trajectory& theta);

/// Exact 7th-order residual of y = x^a divided by x^(4a - 16).
Rational monomial_residual7(const Rational& a);
/// Exact 8th-order residual of Theta = x^a divided by x^(4a - 20).
Rational monomial_residual8(const Rational& a);
/// Exact 7th-order residual from exact derivative values y3..y7.
Rational residual7_exact(const Rational& y3, const Rational& y4, const Rational& y5, const Rational& y6,
                         const Rational& y7);

/// x, y, y', ..., top per line with a header row.
void write_csv(const Trajectory& t, std::ostream& out);

}  // namespace cartan235::odesolve
