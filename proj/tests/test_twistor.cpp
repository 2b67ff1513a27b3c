#include <doctest.h>

#include <cmath>

#include "cartan235/error.hpp"
#include "cartan235/twistor/twistor.hpp"

using namespace cartan235;
using namespace cartan235::twistor;
using dist235::PowerTerm;

namespace {

RationalFunction rf(long v) { return RationalFunction(Rational(v)); }
RationalFunction var(const char* n) { return RationalFunction(Symbol::coordinate(n)); }
RationalFunction tj(int k) { return RationalFunction(Symbol::jet("Theta", k)); }
RationalFunction t4(int a, int b, int c, int d) { return RationalFunction(Symbol::jet("Theta4", {a, b, c, d})); }

HeavenlySpec power(const Rational& c, const Rational& e) { return HeavenlySpec::explicit_theta(PowerSum({{c, e}})); }
HeavenlySpec power(long e) { return power(Rational(1), Rational(e)); }
HeavenlySpec zero_theta() { return HeavenlySpec::explicit_theta(PowerSum()); }

DifferentialForm tw(std::size_t k) { return DifferentialForm::basis(exterior::charts::twistor(), k); }
DifferentialForm gx(std::size_t k) { return DifferentialForm::basis(exterior::charts::goursat(), k); }
DifferentialForm pl(std::size_t k) { return DifferentialForm::basis(exterior::charts::plebanski(), k); }

// alpha5 written out from its definition
RationalFunction alpha5_oracle(const std::array<RationalFunction, 9>& t) {
  return rf(10) * t[4].pow(3) * t[8] - rf(70) * t[4].pow(2) * t[5] * t[7] - rf(49) * t[4].pow(2) * t[6].pow(2) +
         rf(280) * t[4] * t[5].pow(2) * t[6] - rf(175) * t[5].pow(4);
}

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

}  // namespace

TEST_CASE("Plebanski metric") {
  // chart order x y z w
  const auto flat = plebanski_metric(zero_theta());
  SymmetricTensor2 expect(exterior::charts::plebanski());
  expect.add_quadratic(3, 0, rf(1));
  expect.add_quadratic(2, 1, rf(1));
  CHECK(flat.direct == expect);
  CHECK(flat.pairing_matches());

  const auto jet = plebanski_metric(HeavenlySpec::jet4());
  CHECK(jet.pairing_matches());
  SymmetricTensor2 full = expect;
  full.add_quadratic(2, 2, -t4(2, 0, 0, 0));
  full.add_quadratic(3, 3, -t4(0, 2, 0, 0));
  full.add_quadratic(3, 2, rf(2) * t4(1, 1, 0, 0));
  CHECK(jet.direct == full);
  CHECK(jet.tau[0] == pl(0) - t4(0, 2, 0, 0) * pl(3) + t4(1, 1, 0, 0) * pl(2));

  const auto half = plebanski_metric(power(Rational(1, 2), Rational(2)));
  SymmetricTensor2 h = expect;
  h.add_quadratic(2, 2, rf(-1));
  CHECK(half.direct == h);
  CHECK(half.pairing_matches());

  const auto one = plebanski_metric(HeavenlySpec::jet());
  SymmetricTensor2 o = expect;
  o.add_quadratic(2, 2, -tj(2));
  CHECK(one.direct == o);
}

TEST_CASE("twistor forms") {
  // chart order x y z w xi
  const auto xi = var("xi");
  const auto flat = twistor_forms(zero_theta());
  CHECK(flat[0] == tw(4));
  CHECK(flat[1] == tw(3) + xi * tw(2));
  CHECK(flat[2] == tw(1) - xi * tw(0));

  CHECK(directional_power(HeavenlySpec::jet4(), 2) ==
        t4(2, 0, 0, 0) + rf(2) * xi * t4(1, 1, 0, 0) + xi.pow(2) * t4(0, 2, 0, 0));
  CHECK(directional_power(HeavenlySpec::jet4(), 3) ==
        t4(3, 0, 0, 0) + rf(3) * xi * t4(2, 1, 0, 0) + rf(3) * xi.pow(2) * t4(1, 2, 0, 0) + xi.pow(3) * t4(0, 3, 0, 0));

  const auto one = twistor_forms(HeavenlySpec::jet());
  CHECK(one[0] == tw(4) - tj(3) * tw(2));
}

TEST_CASE("Goursat change") {
  const auto flat = goursat_change(zero_theta());
  CHECK(flat.pulled[1] == flat.omega[0]);
  CHECK(flat.omega[0] == gx(1) - var("x3") * gx(0));
  CHECK(!flat.df_dq.has_value());

  const auto g = goursat_change(HeavenlySpec::jet());
  CHECK(!g.determinant.is_zero());
  CHECK(g.q == -tj(3));
  CHECK(g.f == tj(2) - var("x5") * tj(3));
  REQUIRE(g.df_dq.has_value());
  CHECK(*g.df_dq == var("x5"));
  CHECK(g.omega[1] == gx(2) + tj(3) * gx(0));
  CHECK(g.omega[2] == gx(3) - (tj(2) - var("x5") * tj(3)) * gx(0));
  // each pulled form is the stated combination of omega1..omega3
  for (std::size_t i = 0; i < 3; ++i) {
    DifferentialForm combo(exterior::charts::goursat(), 1);
    for (std::size_t j = 0; j < 3; ++j) combo += g.transition(i, j) * g.omega[j];
    CHECK(combo == g.pulled[i]);
  }
  CHECK(code_of([] { return goursat_change(HeavenlySpec::jet4()); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("the Theta coframe") {
  // Theta = x5^4: Theta'''' = 24, higher 0
  const auto c = adapted_coframe_theta(power(4));
  const auto g = goursat_change(power(4));
  const auto x5 = var("x5");
  CHECK(c.form(4) == rf(24) * gx(4));
  CHECK(c.form(1) == rf(24) * (x5 * g.omega[1] - g.omega[2]));

  const auto j = adapted_coframe_theta(HeavenlySpec::jet());
  const auto gj = goursat_change(HeavenlySpec::jet());
  CHECK(j.form(0) + j.form(1) == gj.omega[0]);
  CHECK(j.determinant().numerator().contains(Symbol::jet("Theta", 4)));
  CHECK(code_of([] { return adapted_coframe_theta(power(3)); }) == ErrorCode::DegenerateDistribution);
}

TEST_CASE("Theta quartic for monomials") {
  CHECK(quartic_theta(power(4)).is_zero());
  CHECK(quartic_theta(power(Rational(1), Rational(5, 2))).is_zero());

  // x5^5: Theta'''' = 120 x5, Theta^(5) = 120; only -175 Theta5^4 survives
  const auto a = alpha5(power(5));
  CHECK(a == rf(-175) * rf(120).pow(4));
  // via the f-side formula: a5 = -alpha5 / Theta4^12 and f'' = -1/Theta4
  const auto th4 = rf(120) * var("x5");
  const auto a5 = -a / th4.pow(12);
  const auto f2 = rf(-1) / th4;
  const auto c = quartic_theta(power(5));
  for (int k = 1; k <= 4; ++k) CHECK(c.A(k).is_zero());
  CHECK(c.A(5) == a5 / (rf(100) * f2.pow(4)));
  CHECK(!c.is_zero());
}

TEST_CASE("alpha5") {
  std::array<RationalFunction, 9> t;
  for (int k = 0; k <= 8; ++k) t[static_cast<std::size_t>(k)] = tj(k);
  CHECK(alpha5(HeavenlySpec::jet()) == alpha5_oracle(t));
  CHECK(alpha5_monomial_coefficient(Rational(5, 2)) == 0);
  CHECK(alpha5_monomial_coefficient(Rational(5)) == Rational(-175) * 120 * 120 * 120 * 120);
  CHECK(alpha5(power(4)).is_zero());
}

TEST_CASE("jet transform table") {
  const auto t = jet_transform(6);
  CHECK(t.derivative(1) == var("x5"));
  CHECK(t.derivative(2) == rf(-1) / tj(4));
  CHECK(t.derivative(3) == -tj(5) / tj(4).pow(3));
  CHECK(t.derivative(4) == tj(6) / tj(4).pow(4) - rf(3) * tj(5).pow(2) / tj(4).pow(5));
  for (int p = 3; p <= 6; ++p) {
    CHECK(t.derivative(p) ==
          rf(-1) / tj(4) * symcore::partial_derivative(t.derivative(p - 1), Symbol::coordinate("x5")));
  }
  CHECK(jet_transform(1).derivative(1) == var("x5"));
  CHECK(code_of([] { return jet_transform(7); }) == ErrorCode::JetOrderOverflow);
  CHECK(code_of([&] { return jet_transform(5).derivative(6); }) == ErrorCode::MissingBinding);
}

TEST_CASE("proposition certificate") {
  const auto cert = verify_proposition(jet_transform(6));
  CHECK(cert.difference.is_zero());
  std::array<RationalFunction, 9> t;
  for (int k = 0; k <= 8; ++k) t[static_cast<std::size_t>(k)] = tj(k);
  CHECK(cert.expected == -alpha5_oracle(t) / tj(4).pow(12));
  CHECK(code_of([] { return verify_proposition(jet_transform(5)); }) == ErrorCode::MissingBinding);
}

TEST_CASE("proposition spot check at the jets of x5^(7/2)") {
  const double x = 1.3, a = 3.5;
  symcore::NumericPoint pt;
  for (int k = 4; k <= 8; ++k) {
    double c = 1;
    for (int i = 0; i < k; ++i) c *= a - i;
    pt[Symbol::jet("Theta", k)] = c * std::pow(x, a - k);
  }
  pt[Symbol::coordinate("x5")] = x;
  const auto cert = verify_proposition(jet_transform(6));
  const double lhs = symcore::evaluate_numeric(cert.substituted, pt);
  std::array<RationalFunction, 9> t;
  for (int k = 0; k <= 8; ++k) t[static_cast<std::size_t>(k)] = tj(k);
  const double rhs = symcore::evaluate_numeric(-alpha5_oracle(t) / tj(4).pow(12), pt);
  CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
  CHECK(rhs != 0);
}
