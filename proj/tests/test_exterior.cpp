#include <doctest.h>

#include "cartan235/dist235/dist235.hpp"
#include "cartan235/error.hpp"
#include "cartan235/exterior/coframe.hpp"
#include "cartan235/exterior/tensor.hpp"

using namespace cartan235;
using namespace cartan235::exterior;
using symcore::Rational;
using symcore::RationalFunction;
using symcore::Symbol;

namespace {

RationalFunction rf(long v) { return RationalFunction(Rational(v)); }
RationalFunction var(const char* n) { return RationalFunction(Symbol::coordinate(n)); }

// monge chart order: x y p q z
DifferentialForm d(std::size_t k) { return DifferentialForm::basis(charts::monge(), k); }
constexpr std::size_t X = 0, Y = 1, P = 2, Q = 3, Z = 4;

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

TEST_CASE("wedge signs") {
  CHECK(wedge(d(X), d(X)).is_zero());
  CHECK(wedge(d(X) + d(Y), d(X)) == -wedge(d(X), d(Y)));
  const auto w = wedge(d(Q), d(X));  // omega4 ^ omega5
  CHECK(w.component({X, Q}) == rf(-1));
  CHECK(merge_sign(DifferentialForm::mask_of({3}), DifferentialForm::mask_of({0})) == -1);
  const auto two = wedge(d(X), d(P));
  CHECK(wedge(two, d(Y)) == wedge(d(Y), two));  // even degree commutes
}

TEST_CASE("wedge on different charts") {
  const auto a = DifferentialForm::basis(charts::goursat(), 0);
  CHECK(code_of([&] { return wedge(a, d(X)); }) == ErrorCode::ChartMismatch);
}

TEST_CASE("exterior derivative of the Monge forms") {
  const auto p = var("p");
  const auto w1 = d(Y) - p * d(X);
  const auto dw1 = exterior_derivative(w1);
  CHECK(dw1 == wedge(d(X), d(P)));

  const auto f = RationalFunction(Symbol::jet("f", 0));
  const auto w3 = d(Z) - f * d(X);
  const auto dw3 = exterior_derivative(w3);
  CHECK(dw3.component({X, Q}) == RationalFunction(Symbol::jet("f", 1)));
  CHECK(dw3.components().size() == 1);
  CHECK(exterior_derivative(dw3).is_zero());
}

TEST_CASE("expansion in a coframe") {
  const auto spec = dist235::MongeSpec::jet();
  const Coframe c = dist235::adapted_coframe_fq(spec);
  const auto e = express_in_coframe(c.form(0), c);
  CHECK(e.components().size() == 1);
  CHECK(e.component({0}) == rf(1));

  std::vector<DifferentialForm> dx;
  for (std::size_t k = 0; k < 5; ++k) dx.push_back(d(k));
  const Coframe coord(dx);
  const auto t = express_in_coframe(wedge(d(X), d(Q)), coord);
  CHECK(t.components().size() == 1);
  CHECK(t.component({0, 3}) == rf(1));
}

TEST_CASE("d theta3 for f = q^2 against a hand expansion") {
  // f = q^2: theta3 = omega2 = dp - q dx, theta4 = omega4 - omega5 = dq - dx, theta5 = -dq.
  // d theta3 = -dq ^ dx = dx ^ dq, and theta4 ^ theta5 = (dq - dx) ^ (-dq) = dx ^ dq.
  const auto q = var("q");
  const auto theta3 = d(P) - q * d(X);
  const auto theta4 = d(Q) - d(X);
  const auto theta5 = -d(Q);
  const auto hand = wedge(theta4, theta5);
  CHECK(exterior_derivative(theta3) == hand);

  const Coframe c = dist235::adapted_coframe_fq(
      dist235::MongeSpec::explicit_f(dist235::PowerSum({{Rational(1), Rational(2)}})));
  CHECK(c.form(2) == theta3);
  const auto s = c.structure()[2];
  CHECK(s.component({3, 4}) == rf(1));
  CHECK(s.components().size() == 1);
}

TEST_CASE("coframe validation") {
  std::vector<DifferentialForm> bad{d(X), d(Y), d(P), d(Q), d(X) + d(Y)};
  CHECK(code_of([&] { return Coframe(bad); }) == ErrorCode::SingularCoframe);

  std::vector<DifferentialForm> dx;
  for (std::size_t k = 0; k < 5; ++k) dx.push_back(d(k));
  symcore::Matrix degenerate(5, 5);
  degenerate(0, 0) = rf(1);
  CHECK(code_of([&] { return Coframe(dx, degenerate); }) == ErrorCode::SingularMetric);
  symcore::Matrix varying = symcore::Matrix::identity(5);
  varying(1, 1) = var("x");
  CHECK(code_of([&] { return Coframe(dx, varying); }) == ErrorCode::SingularMetric);

  std::vector<DifferentialForm> two{wedge(d(X), d(Y)), d(Y), d(P), d(Q), d(Z)};
  CHECK(code_of([&] { return Coframe(two); }) == ErrorCode::DegreeMismatch);

  const Coframe c(dx);
  CHECK(c.metric() == conformal_metric());
  CHECK(c.determinant() == rf(1));
}

TEST_CASE("reconstruct inverts the coframe expansion") {
  const Coframe c = dist235::adapted_coframe_fq(dist235::MongeSpec::jet());
  CHECK((c.matrix() * c.inverse_matrix()).is_identity());
  const auto a = var("q") * wedge(d(X), d(Z)) + RationalFunction(Symbol::jet("f", 3)) * wedge(d(P), d(Q));
  CHECK(reconstruct(express_in_coframe(a, c), c) == a);
  const auto g = frame_gradient(var("q"), c);
  // dq = -theta5
  CHECK(g[4] == rf(-1));
  CHECK(g[0].is_zero());
}

TEST_CASE("metric from a null pairing") {
  const auto ch = charts::plebanski();  // x y z w
  auto e = [&](std::size_t k) { return DifferentialForm::basis(ch, k); };
  const auto g = symmetrized_product(e(0), e(3)) + symmetrized_product(e(1), e(2));
  CHECK(g(0, 3) == rf(1));
  CHECK(g(3, 0) == rf(1));
  CHECK(g(1, 2) == rf(1));
  CHECK(g(0, 0).is_zero());

  SymmetricTensor2 direct(ch);
  direct.add_quadratic(3, 0, rf(1));
  direct.add_quadratic(2, 1, rf(1));
  CHECK(metric_from_null_pairing(e(0), e(3), e(1), e(2)) == direct);
  CHECK(code_of([&] { return symmetrized_product(wedge(e(0), e(1)), e(2)); }) == ErrorCode::DegreeMismatch);

  SymmetricTensor2 sq(ch);
  sq.add_quadratic(2, 2, rf(-1));
  CHECK(sq(2, 2) == rf(-2));
}
