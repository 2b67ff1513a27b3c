#include <doctest.h>

#include <cmath>

#include "cartan235/error.hpp"
#include "cartan235/symcore/linalg.hpp"
#include "cartan235/symcore/rational_function.hpp"

using namespace cartan235;
using namespace cartan235::symcore;

namespace {

RationalFunction var(const char* name) { return RationalFunction(Symbol::coordinate(name)); }
RationalFunction fj(int k) { return RationalFunction(Symbol::jet("f", k)); }
RationalFunction tj(int k) { return RationalFunction(Symbol::jet("Theta", k)); }
RationalFunction rf(long v) { return RationalFunction(Rational(v)); }

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

TEST_CASE("normalization cancels the gcd and fixes the sign") {
  const auto q = var("q");
  const auto r = (rf(2) * q * q + rf(2) * q) / (rf(2) * q);
  CHECK(r == q + rf(1));
  CHECK(r.denominator() == Polynomial(1));

  const auto x = var("x");
  const auto s = (-x) / rf(-1);
  CHECK(s == x);
  CHECK(s.denominator() == Polynomial(1));

  const auto z = (fj(2) * q - fj(2) * q) / fj(2);
  CHECK(z.is_zero());
  CHECK(z.denominator() == Polynomial(1));

  // positive leading denominator coefficient
  const auto t = rf(1) / (rf(-2) * x + rf(1));
  CHECK(t.denominator().leading_term().coefficient > 0);
  CHECK(t == rf(-1) / (rf(2) * x - rf(1)));
}

TEST_CASE("fraction with a zero denominator") {
  CHECK(code_of([] { return rf(1) / rf(0); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([] { return RationalFunction::fraction(Polynomial(1), Polynomial()); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("polynomial gcd") {
  const Polynomial x = Polynomial::variable(Symbol::coordinate("x"));
  const Polynomial y = Polynomial::variable(Symbol::coordinate("y"));
  const Polynomial a = (x - Polynomial(1)) * (x + y);
  const Polynomial b = (x - Polynomial(1)) * (x - y) * Polynomial(6);
  CHECK(gcd(a, b) == x - Polynomial(1));
  CHECK(gcd(Polynomial(), Polynomial()).is_zero());
}

TEST_CASE("partial derivative with the jet chain rule") {
  const Symbol q = Symbol::coordinate("q");
  const Symbol x = Symbol::coordinate("x");
  const Symbol x5 = Symbol::coordinate("x5");
  CHECK(partial_derivative(var("q") * fj(1), q) == fj(1) + var("q") * fj(2));
  CHECK(partial_derivative(fj(2), x).is_zero());
  CHECK(partial_derivative(rf(1) / tj(4), x5) == -tj(5) / tj(4).pow(2));
  CHECK(partial_derivative(RationalFunction(Symbol::jet("Theta4", {1, 0, 2, 0})), Symbol::coordinate("w")) ==
        RationalFunction(Symbol::jet("Theta4", {1, 0, 2, 1})));
}

TEST_CASE("jet order cap") {
  const int cap = jet_order_cap();
  CHECK(cap >= 12);
  const RationalFunction top = RationalFunction(Symbol::jet("f", cap));
  CHECK(code_of([&] { return partial_derivative(top, Symbol::coordinate("q")); }) == ErrorCode::JetOrderOverflow);
}

TEST_CASE("root symbols differentiate as fractional powers") {
  const Symbol q = Symbol::coordinate("q");
  const RationalFunction u(Symbol::root("q", 3));
  // u^3 = q
  CHECK(partial_derivative(u.pow(3), q) == rf(1));
  CHECK(partial_derivative(u, q) == rf(1) / (rf(3) * u.pow(2)));
}

TEST_CASE("substitution") {
  Bindings b{{Symbol::jet("f", 2), rf(-1) / tj(4)}};
  CHECK(substitute(fj(2).pow(2), b) == rf(1) / tj(4).pow(2));
  CHECK(substitute(fj(3), {}) == fj(3));
  // terms without the bound symbol still pick up the denominator
  Bindings c{{Symbol::coordinate("x"), rf(1) / var("y")}};
  CHECK(substitute(var("x") * var("x") + rf(1), c) == (rf(1) + var("y").pow(2)) / var("y").pow(2));
  CHECK(code_of([] {
          return substitute(rf(1) / var("x"), Bindings{{Symbol::coordinate("x"), rf(0)}});
        }) == ErrorCode::DivisionByZero);
}

TEST_CASE("numeric evaluation") {
  const Symbol q = Symbol::coordinate("q");
  CHECK(evaluate_numeric(var("q") + rf(1), {{q, 2.0}}) == doctest::Approx(3.0));
  CHECK(evaluate_numeric(rf(1) / fj(2), {{Symbol::jet("f", 2), 4.0}}) == doctest::Approx(0.25));

  // a5 on the jets of q^3 (f'' = 6q, f''' = 6, higher 0): only -224 f'''^4 survives
  const auto a5 = rf(10) * fj(6) * fj(2).pow(3) - rf(80) * fj(2).pow(2) * fj(3) * fj(5) -
                  rf(51) * fj(2).pow(2) * fj(4).pow(2) + rf(336) * fj(2) * fj(3).pow(2) * fj(4) -
                  rf(224) * fj(3).pow(4);
  NumericPoint pt{{Symbol::jet("f", 2), 6 * 0.7}, {Symbol::jet("f", 3), 6.0}, {Symbol::jet("f", 4), 0.0},
                  {Symbol::jet("f", 5), 0.0}, {Symbol::jet("f", 6), 0.0}};
  CHECK(evaluate_numeric(a5, pt) == doctest::Approx(-224.0 * 6 * 6 * 6 * 6));

  CHECK(code_of([&] { return evaluate_numeric(var("q") + var("p"), {{q, 1.0}}); }) == ErrorCode::MissingBinding);
  CHECK(code_of([&] { return evaluate_numeric(rf(1) / var("q"), {{q, 0.0}}); }) == ErrorCode::NearSingularEvaluation);
}

TEST_CASE("canonical printing") {
  CHECK((rf(-56) / (rf(25) * var("q").pow(4))).str() == "-56/(25*q^4)");
  CHECK((var("q") + rf(1)).str() == "q + 1");
  CHECK(RationalFunction().str() == "0");
}

TEST_CASE("determinant, inverse and solve") {
  Matrix a(3, 3);
  const long e[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = rf(e[i][j]);
  }
  // cofactor expansion along the first row: 2*(12-1) - 1*(4-0)
  CHECK(determinant(a) == rf(18));
  const auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK((a * *inv).is_identity());

  Matrix s(2, 2);
  s(0, 0) = var("x");
  s(0, 1) = rf(1);
  s(1, 0) = rf(1);
  s(1, 1) = var("x");
  CHECK(determinant(s) == var("x").pow(2) - rf(1));

  Matrix sing(2, 2);
  sing(0, 0) = rf(1);
  sing(0, 1) = var("q");
  sing(1, 0) = rf(2);
  sing(1, 1) = rf(2) * var("q");
  CHECK(!inverse(sing).has_value());
  const auto sol = solve(sing, {rf(1), rf(2)});
  CHECK(sol.consistent);
  CHECK(sol.rank == 1);
  CHECK(sol.nullity == 1);
  CHECK(sol.particular[0] + var("q") * sol.particular[1] == rf(1));
  CHECK(!solve(sing, {rf(1), rf(3)}).consistent);
}
