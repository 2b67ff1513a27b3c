#include "cartan235/odesolve/odesolve.hpp"

#include <array>
#include <cmath>
#include <ostream>
#include <sstream>

#include "cartan235/dist235/dist235.hpp"
#include "cartan235/error.hpp"
#include "cartan235/twistor/twistor.hpp"

namespace cartan235::odesolve {

namespace {

template <class T>
T residual_expression(const T& a3, const T& a4, const T& a5, const T& a6, const T& a7) {
  return T(10) * a3 * a3 * a3 * a7 - T(70) * a3 * a3 * a4 * a6 - T(49) * a3 * a3 * a5 * a5 +
         T(280) * a3 * a4 * a4 * a5 - T(175) * a4 * a4 * a4 * a4;
}

std::string num(double v) {
  std::ostringstream o;
  o << v;
  return o.str();
}

// Top derivative of the equation whose leading coefficient derivative sits at index `lead`.
double solve_top(const ODEState& s, std::size_t lead, double guard) {
  if (s.derivs.size() < lead + 4) throw Error(ErrorCode::InvalidArgument, "state has too few derivatives");
  const double a3 = s.derivs[lead], a4 = s.derivs[lead + 1], a5 = s.derivs[lead + 2], a6 = s.derivs[lead + 3];
  if (!(std::abs(a3) >= guard)) {
    throw Error(ErrorCode::SingularThirdDerivative,
                "leading derivative " + num(a3) + " below guard at x = " + num(s.x));
  }
  return (70 * a3 * a3 * a4 * a6 + 49 * a3 * a3 * a5 * a5 - 280 * a3 * a4 * a4 * a5 + 175 * a4 * a4 * a4 * a4) /
         (10 * a3 * a3 * a3);
}

struct Run {
  std::vector<ODEState> states;
  std::vector<double> top;
  bool singular = false;
  std::string message;
};

Run run_rk4(const Rhs& rhs, const ODEState& init, double x_end, long steps) {
  const std::size_t n = init.derivs.size();
  const double h = (x_end - init.x) / static_cast<double>(steps);
  Run out;
  out.states.push_back(init);
  out.top.push_back(rhs(init));  // throws at a bad initial state
  auto f = [&](double x, const std::vector<double>& y) {
    std::vector<double> dy(n);
    for (std::size_t k = 0; k + 1 < n; ++k) dy[k] = y[k + 1];
    dy[n - 1] = rhs(ODEState{x, y});
    return dy;
  };
  auto axpy = [n](const std::vector<double>& y, double c, const std::vector<double>& d) {
    std::vector<double> r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = y[k] + c * d[k];
    return r;
  };
  std::vector<double> y = init.derivs;
  for (long i = 0; i < steps; ++i) {
    const double x = init.x + static_cast<double>(i) * h;
    try {
      auto k1 = f(x, y);
      auto k2 = f(x + h / 2, axpy(y, h / 2, k1));
      auto k3 = f(x + h / 2, axpy(y, h / 2, k2));
      auto k4 = f(x + h, axpy(y, h, k3));
      for (std::size_t k = 0; k < n; ++k) y[k] += h / 6 * (k1[k] + 2 * k2[k] + 2 * k3[k] + k4[k]);
      ODEState next{init.x + static_cast<double>(i + 1) * h, y};
      const double top = rhs(next);
      out.states.push_back(std::move(next));
      out.top.push_back(top);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularThirdDerivative) throw;
      out.singular = true;
      out.message = e.what();
      break;
    }
  }
  return out;
}

long step_count(double x0, double x_end, double h) {
  if (!(h > 0) || !std::isfinite(h)) throw Error(ErrorCode::InvalidArgument, "step size must be positive");
  if (!(x_end > x0)) throw Error(ErrorCode::InvalidArgument, "integration interval must be increasing");
  return std::max(1L, std::lround((x_end - x0) / h));
}

}  // namespace

double rhs7(const ODEState& s, double guard) { return solve_top(s, 3, guard); }
double rhs8(const ODEState& s, double guard) { return solve_top(s, 4, guard); }

double residual7(double y3, double y4, double y5, double y6, double y7) {
  return residual_expression(y3, y4, y5, y6, y7);
}

Trajectory integrate(const Rhs& rhs, const ODEState& init, double x_end, double h) {
  const long steps = step_count(init.x, x_end, h);
  Run coarse = run_rk4(rhs, init, x_end, steps);
  Run fine = run_rk4(rhs, init, x_end, 2 * steps);
  Trajectory t;
  t.h = (x_end - init.x) / static_cast<double>(steps);
  t.states = std::move(coarse.states);
  t.top = std::move(coarse.top);
  t.singular = coarse.singular || fine.singular;
  t.message = coarse.singular ? coarse.message : fine.message;
  for (std::size_t i = 0; i < t.states.size() && 2 * i < fine.states.size(); ++i) {
    const double d = std::abs(t.states[i].derivs[0] - fine.states[2 * i].derivs[0]) / 15;
    t.error_estimate = std::max(t.error_estimate, d);
  }
  return t;
}

ODEState monomial_state(const Rational& a, double x, int count) {
  ODEState s{x, {}};
  const double ad = a.get_d();
  for (int k = 0; k < count; ++k) s.derivs.push_back(dist235::falling_factorial(a, k).get_d() * std::pow(x, ad - k));
  return s;
}

Trajectory sample_monomial(const Rational& a, double x0, double x_end, double h, int count) {
  const long steps = step_count(x0, x_end, h);
  Trajectory t;
  t.h = (x_end - x0) / static_cast<double>(steps);
  const double top_coeff = dist235::falling_factorial(a, count).get_d();
  for (long i = 0; i <= steps; ++i) {
    const double x = x0 + static_cast<double>(i) * t.h;
    t.states.push_back(monomial_state(a, x, count));
    t.top.push_back(top_coeff * std::pow(x, a.get_d() - count));
  }
  return t;
}

ConvergenceStudy convergence_study(const Rhs& rhs, const ODEState& init, double x_end, double h, double exact_end) {
  const long steps = step_count(init.x, x_end, h);
  Run coarse = run_rk4(rhs, init, x_end, steps);
  Run fine = run_rk4(rhs, init, x_end, 2 * steps);
  if (coarse.singular || fine.singular) {
    throw Error(ErrorCode::SingularThirdDerivative, "convergence run hit the guard: " + coarse.message + fine.message);
  }
  ConvergenceStudy c;
  c.error_h = std::abs(coarse.states.back().derivs[0] - exact_end);
  c.error_half = std::abs(fine.states.back().derivs[0] - exact_end);
  c.ratio = c.error_half > 0 ? c.error_h / c.error_half : INFINITY;
  return c;
}

namespace {

// Derivative at t[i] of the quadratic through three neighbouring points.
double three_point_derivative(const std::vector<double>& t, const std::vector<double>& v, std::size_t i) {
  const std::size_t n = t.size();
  std::size_t a = i == 0 ? 0 : (i + 1 == n ? n - 3 : i - 1);
  const double t0 = t[a], t1 = t[a + 1], t2 = t[a + 2];
  const double x = t[i];
  const double l0 = (2 * x - t1 - t2) / ((t0 - t1) * (t0 - t2));
  const double l1 = (2 * x - t0 - t2) / ((t1 - t0) * (t1 - t2));
  const double l2 = (2 * x - t0 - t1) / ((t2 - t0) * (t2 - t1));
  return l0 * v[a] + l1 * v[a + 1] + l2 * v[a + 2];
}

const twistor::JetTransformTable& numeric_table() {
  static const twistor::JetTransformTable table = twistor::jet_transform(6);
  return table;
}

}  // namespace

LegendreCheck parametric_legendre_check(const Trajectory& theta, double guard) {
  if (theta.states.size() < 3) throw Error(ErrorCode::InvalidArgument, "trajectory too short");
  if (theta.states.front().derivs.size() < 8 || theta.top.size() != theta.states.size()) {
    throw Error(ErrorCode::InvalidArgument, "parametric check needs a Theta trajectory of order 8");
  }
  const std::size_t n = theta.states.size();
  std::vector<double> xs(n), q(n), f(n);
  double sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& d = theta.states[i].derivs;
    const double t4 = d[4];
    if (!(std::abs(t4) >= guard) || (sign != 0 && t4 * sign < 0)) {
      throw Error(ErrorCode::NotATransform, "Theta'''' changes sign or vanishes at x = " + num(theta.states[i].x));
    }
    sign = t4 > 0 ? 1 : -1;
    xs[i] = theta.states[i].x;
    q[i] = -d[3];
    f[i] = d[2] - xs[i] * d[3];
  }
  for (std::size_t i = 1; i < n; ++i) {
    if ((q[i] - q[i - 1]) * (q[1] - q[0]) <= 0) throw Error(ErrorCode::NotATransform, "q is not strictly monotone");
  }

  LegendreCheck out;
  for (std::size_t i = 0; i < n; ++i) {
    out.df_dq_residual = std::max(out.df_dq_residual, std::abs(three_point_derivative(q, f, i) - xs[i]));
  }

  const auto& table = numeric_table();
  const auto x5 = symcore::Symbol::coordinate("x5");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& d = theta.states[i].derivs;
    symcore::NumericPoint theta_point{{x5, xs[i]}};
    for (int k = 4; k <= 7; ++k) theta_point[symcore::Symbol::jet("Theta", k)] = d[static_cast<std::size_t>(k)];
    theta_point[symcore::Symbol::jet("Theta", 8)] = theta.top[i];
    std::array<double, 7> fj{};
    for (int k = 2; k <= 6; ++k) {
      fj[static_cast<std::size_t>(k)] = symcore::evaluate_numeric(table.derivative(k), theta_point);
    }
    const std::array<double, 5> terms{10 * fj[6] * std::pow(fj[2], 3), -80 * fj[2] * fj[2] * fj[3] * fj[5],
                                      -51 * fj[2] * fj[2] * fj[4] * fj[4], 336 * fj[2] * fj[3] * fj[3] * fj[4],
                                      -224 * std::pow(fj[3], 4)};
    double v = 0, scale = 0;
    for (double t : terms) {
      v += t;
      scale += std::abs(t);
    }
    out.a5_residual = std::max(out.a5_residual, std::abs(v));
    out.a5_quartic = std::max(out.a5_quartic, std::abs(v / (100 * std::pow(fj[2], 4))));
    if (scale > 0) out.a5_relative = std::max(out.a5_relative, std::abs(v) / scale);
  }
  return out;
}

ReducedOrderCheck reduced_order_residual(const Trajectory& theta) {
  if (theta.states.size() < 2 || theta.states.front().derivs.size() < 8) {
    throw Error(ErrorCode::InvalidArgument, "reduced-order check needs a Theta trajectory of order 8");
  }
  const auto& first = theta.states.front();
  ODEState init{first.x, std::vector<double>(first.derivs.begin() + 1, first.derivs.end())};
  // at the same step the two runs are the same arithmetic, so the y run uses h / 2
  Trajectory y = integrate([](const ODEState& s) { return rhs7(s); }, init, theta.back().x, theta.h / 2);
  ReducedOrderCheck out;
  for (std::size_t i = 0; i < theta.size() && 2 * i < y.size(); ++i) {
    out.max_difference =
        std::max(out.max_difference, std::abs(y.states[2 * i].derivs[0] - theta.states[i].derivs[1]));
  }
  out.bound = 10 * (y.error_estimate + theta.error_estimate);
  return out;
}

Rational monomial_residual7(const Rational& a) {
  auto ff = [&](int k) { return dist235::falling_factorial(a, k); };
  return residual_expression(ff(3), ff(4), ff(5), ff(6), ff(7));
}

Rational monomial_residual8(const Rational& a) {
  auto ff = [&](int k) { return dist235::falling_factorial(a, k); };
  return residual_expression(ff(4), ff(5), ff(6), ff(7), ff(8));
}

Rational residual7_exact(const Rational& y3, const Rational& y4, const Rational& y5, const Rational& y6,
                         const Rational& y7) {
  return residual_expression(y3, y4, y5, y6, y7);
}

void write_csv(const Trajectory& t, std::ostream& out) {
  const std::size_t n = t.states.empty() ? 0 : t.states.front().derivs.size();
  out << "x";
  for (std::size_t k = 0; k <= n; ++k) out << ",d" << k;
  out << "\n";
  out.precision(17);
  for (std::size_t i = 0; i < t.states.size(); ++i) {
    out << t.states[i].x;
    for (double v : t.states[i].derivs) out << "," << v;
    out << "," << t.top[i] << "\n";
  }
}

}  // namespace cartan235::odesolve
