#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cartan235/error.hpp"
#include "cartan235/odesolve/odesolve.hpp"

using namespace cartan235;
using namespace cartan235::odesolve;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no cartan235::Error thrown");
  return ErrorCode::InvalidArgument;
}

// e (e-1) ... (e-k+1)
double falling(double e, int k) {
  double r = 1;
  for (int i = 0; i < k; ++i) r *= e - i;
  return r;
}

ODEState power_state(double a, double x, int count) {
  ODEState s{x, {}};
  for (int k = 0; k < count; ++k) s.derivs.push_back(falling(a, k) * std::pow(x, a - k));
  return s;
}

Rational rfall(const Rational& e, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= e - Rational(i);
  return r;
}

const Rhs r7 = [](const ODEState& s) { return rhs7(s); };
const Rhs r8 = [](const ODEState& s) { return rhs8(s); };

}  // namespace

TEST_CASE("top derivative of the 7th-order equation") {
  // y = x^3: y3 = 6, y4.. = 0
  CHECK(rhs7(power_state(3, 2.0, 7)) == 0);
  // y3 = y4 = 1, y5 = y6 = 0: 10 y7 = 175
  CHECK(rhs7(ODEState{0, {0, 0, 0, 1, 1, 0, 0}}) == doctest::Approx(17.5));
  CHECK(rhs8(ODEState{0, {0, 0, 0, 0, 1, 1, 0, 0}}) == doctest::Approx(17.5));
  CHECK(rhs8(power_state(4, 1.5, 8)) == 0);

  // y = x^(3/2) at x = 1 solves the equation
  const auto s = power_state(1.5, 1.0, 7);
  CHECK(rhs7(s) == doctest::Approx(falling(1.5, 7)).epsilon(1e-12));
  const auto t = power_state(2.5, 1.0, 8);
  CHECK(rhs8(t) == doctest::Approx(falling(2.5, 8)).epsilon(1e-12));

  CHECK(code_of([] { return rhs7(ODEState{1, {0, 0, 0, 0, 1, 0, 0}}); }) == ErrorCode::SingularThirdDerivative);
  CHECK(code_of([] { return rhs8(ODEState{1, {0, 0, 0, 0, 1e-12, 1, 0, 0}}); }) == ErrorCode::SingularThirdDerivative);
  CHECK(code_of([] { return rhs7(ODEState{1, {0, 0, 1}}); }) == ErrorCode::InvalidArgument);
  CHECK(residual7(1, 1, 0, 0, 17.5) == 0);
}

TEST_CASE("exact residual at a = 3/2 by hand") {
  // derivatives of x^(3/2) at x = 1: -3/8, 9/16, -45/32, 315/64, -2835/128
  const Rational y3(-3, 8), y4(9, 16), y5(-45, 32), y6(315, 64), y7(-2835, 128);
  CHECK(y3 == rfall(Rational(3, 2), 3));
  CHECK(y7 == rfall(Rational(3, 2), 7));
  const Rational unit(1, 65536);
  CHECK(10 * y3 * y3 * y3 * y7 == 765450 * unit);
  CHECK(-70 * y3 * y3 * y4 * y6 == -1786050 * unit);
  CHECK(-49 * y3 * y3 * y5 * y5 == -893025 * unit);
  CHECK(280 * y3 * y4 * y4 * y5 == 3061800 * unit);
  CHECK(-175 * y4 * y4 * y4 * y4 == -1148175 * unit);
  CHECK(residual7_exact(y3, y4, y5, y6, y7) == 0);
  CHECK(monomial_residual7(Rational(3, 2)) == 0);
}

TEST_CASE("exact monomial certificates") {
  for (long a = 0; a <= 3; ++a) CHECK(monomial_residual7(Rational(a)) == 0);
  CHECK(monomial_residual7(Rational(5, 2)) != 0);
  CHECK(monomial_residual7(Rational(4)) != 0);
  CHECK(monomial_residual8(Rational(5, 2)) == 0);
  CHECK(monomial_residual8(Rational(5)) != 0);
  // Theta = x^a gives y = a x^(a-1) and the residual is homogeneous of degree 4
  for (const Rational& a : {Rational(5, 2), Rational(7, 3), Rational(5), Rational(-2, 5)}) {
    CHECK(monomial_residual8(a) == a * a * a * a * monomial_residual7(a - 1));
  }
  // any cubic, exactly
  for (const Rational& c : {Rational(1), Rational(-7, 3), Rational(2, 9)}) {
    CHECK(residual7_exact(6 * c, 0, 0, 0, 0) == 0);
  }
}

TEST_CASE("integrating exact solutions") {
  // y = x^3, the right-hand side vanishes identically
  const auto cubic = integrate(r7, power_state(3, 0.5, 7), 1.5, 1e-2);
  CHECK(!cubic.singular);
  CHECK(cubic.back().x == doctest::Approx(1.5));
  CHECK(std::abs(cubic.back().derivs[0] - 3.375) <= 1e-12);

  // Theta = x^(5/2) from x = 1 to 2
  const auto t = integrate(r8, power_state(2.5, 1.0, 8), 2.0, 1e-3);
  CHECK(!t.singular);
  CHECK(t.size() == 1001);
  CHECK(std::abs(t.back().derivs[0] - std::pow(2.0, 2.5)) <= 1e-8);
  CHECK(t.error_estimate <= 1e-8);
  CHECK(t.top.size() == t.size());

  // y = x^(3/2) at the y-level
  const auto y = integrate(r7, power_state(1.5, 1.0, 7), 2.0, 1e-3);
  CHECK(std::abs(y.back().derivs[0] - std::pow(2.0, 1.5)) <= 1e-8);

  CHECK(monomial_state(Rational(5, 2), 1.0, 8).derivs == power_state(2.5, 1.0, 8).derivs);
}

TEST_CASE("guard semantics") {
  CHECK(code_of([] { return integrate(r7, ODEState{1, {0, 0, 0, 0, 1, 0, 0}}, 2, 1e-3); }) ==
        ErrorCode::SingularThirdDerivative);
  // y3 = 1 in the fourth slot: the run proceeds
  const auto ok = integrate(r7, ODEState{1, {0, 0, 0, 1, 0, 0, 0}}, 1.5, 1e-3);
  CHECK(!ok.singular);
  CHECK(ok.back().derivs[3] == doctest::Approx(1));

  // y3 = 0.01 falling at unit rate reaches the guard near x = 0.6
  const auto part = integrate(r7, ODEState{0, {0, 0, 0, 0.01, -1, 0, 0}}, 2, 1e-3);
  CHECK(part.singular);
  CHECK(part.size() > 10);
  CHECK(part.back().x < 2);
  CHECK(part.message.find("SingularThirdDerivative") != std::string::npos);

  CHECK(code_of([] { return integrate(r7, power_state(3, 1, 7), 0.5, 1e-3); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { return integrate(r7, power_state(3, 1, 7), 2, -1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("order-4 convergence on the x^(5/2) benchmark") {
  const auto c = convergence_study(r8, power_state(2.5, 1.0, 8), 2.0, 0.02, std::pow(2.0, 2.5));
  CHECK(c.error_h > c.error_half);
  CHECK(c.ratio >= 12);
  CHECK(c.ratio <= 20);
}

TEST_CASE("parametric Legendre check") {
  // Theta = x^4 gives f = -q^2 / 48
  const auto quad = sample_monomial(Rational(4), 1, 2, 1e-2, 8);
  const auto lq = parametric_legendre_check(quad);
  CHECK(lq.df_dq_residual <= 1e-8);
  CHECK(lq.a5_residual <= 1e-12);

  const auto t = integrate(r8, power_state(2.5, 1.0, 8), 2.0, 1e-3);
  const auto l = parametric_legendre_check(t);
  CHECK(l.df_dq_residual <= 1e-4);
  CHECK(l.a5_residual <= 1e-6);
  CHECK(l.a5_relative <= 1e-9);

  // Theta = x^5 is not a solution: A5 = 175 * 120^4 / (100 * (120 x)^8), largest at x = 1
  const auto bad = sample_monomial(Rational(5), 1, 2, 1e-2, 8);
  const auto lb = parametric_legendre_check(bad);
  CHECK(lb.a5_relative >= 0.01);
  CHECK(lb.a5_quartic == doctest::Approx(7.0 / 829440000).epsilon(1e-9));

  CHECK(code_of([] { return parametric_legendre_check(sample_monomial(Rational(5), -1, 1, 1e-2, 8)); }) ==
        ErrorCode::NotATransform);
  CHECK(code_of([] { return parametric_legendre_check(sample_monomial(Rational(3), 1, 2, 1e-2, 7)); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("reduced order: y = Theta' solves the 7th-order equation") {
  const auto t = integrate(r8, power_state(2.5, 1.0, 8), 2.0, 1e-3);
  const auto r = reduced_order_residual(t);
  CHECK(r.max_difference <= r.bound);
  CHECK(r.ok());
}

TEST_CASE("csv output") {
  const auto t = sample_monomial(Rational(2), 0, 1, 0.5, 7);
  std::ostringstream out;
  write_csv(t, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,d0,d1,d2,d3,d4,d5,d6,d7");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);
  CHECK(out.str().find("\n1,1,2,2,0,0,0,0,0\n") != std::string::npos);
}
