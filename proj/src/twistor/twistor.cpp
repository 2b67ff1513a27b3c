#include "cartan235/twistor/twistor.hpp"

#include <bit>

#include "cartan235/error.hpp"

namespace cartan235::twistor {

using exterior::wedge;
using Mask = DifferentialForm::Mask;

namespace {

Symbol coord(const char* name) { return Symbol::coordinate(name); }

void require_one_variable(const HeavenlySpec& spec, const char* what) {
  if (!spec.one_variable()) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs a potential of one variable");
  }
}

}  // namespace

RationalFunction HeavenlySpec::variable(Symbol v) const {
  if (mode == Mode::Explicit) return theta.variable(v);
  return RationalFunction(v);
}

RationalFunction HeavenlySpec::derivative(int k, Symbol v) const {
  switch (mode) {
    case Mode::SymbolicJet:
      return RationalFunction(Symbol::jet("Theta", k));
    case Mode::Explicit:
      return theta.derivative(v, k);
    case Mode::SymbolicJet4:
      break;
  }
  throw Error(ErrorCode::InvalidArgument, "one-variable derivative of a four-variable potential");
}

RationalFunction HeavenlySpec::partial(int a, int b, int c, int d) const {
  if (mode == Mode::SymbolicJet4) return RationalFunction(Symbol::jet("Theta4", {a, b, c, d}));
  if (b != 0 || c != 0 || d != 0) return RationalFunction();
  return derivative(a, coord("x"));
}

std::string HeavenlySpec::str() const {
  switch (mode) {
    case Mode::SymbolicJet:
      return "jet";
    case Mode::SymbolicJet4:
      return "jet4";
    case Mode::Explicit:
      break;
  }
  return theta.str("x5");
}

// ---------------------------------------------------------------------------

PlebanskiMetric plebanski_metric(const HeavenlySpec& spec) {
  auto chart = exterior::charts::plebanski();
  enum { X, Y, Z, W };
  const RationalFunction txx = spec.partial(2, 0, 0, 0);
  const RationalFunction tyy = spec.partial(0, 2, 0, 0);
  const RationalFunction txy = spec.partial(1, 1, 0, 0);

  SymmetricTensor2 direct(chart);
  direct.add_quadratic(W, X, 1);
  direct.add_quadratic(Z, Y, 1);
  direct.add_quadratic(Z, Z, -txx);
  direct.add_quadratic(W, W, -tyy);
  direct.add_quadratic(W, Z, RationalFunction(2) * txy);

  auto d = [&](std::size_t k) { return DifferentialForm::basis(chart, k); };
  std::array<DifferentialForm, 4> tau{d(X) - tyy * d(W) + txy * d(Z), d(W), d(Y) - txx * d(Z) + txy * d(W), d(Z)};
  SymmetricTensor2 pairing = exterior::metric_from_null_pairing(tau[0], tau[1], tau[2], tau[3]);
  return PlebanskiMetric{std::move(direct), std::move(tau), std::move(pairing)};
}

RationalFunction directional_power(const HeavenlySpec& spec, int n) {
  const RationalFunction xi(coord("xi"));
  RationalFunction out;
  RationalFunction xi_power(1);
  long binomial = 1;
  for (int k = 0; k <= n; ++k) {
    RationalFunction d = spec.partial(n - k, k, 0, 0);
    if (!d.is_zero()) out += RationalFunction(binomial) * xi_power * d;
    xi_power *= xi;
    binomial = binomial * (n - k) / (k + 1);
  }
  return out;
}

std::array<DifferentialForm, 3> twistor_forms(const HeavenlySpec& spec) {
  auto chart = exterior::charts::twistor();  // x, y, z, w, xi
  auto d = [&](std::size_t k) { return DifferentialForm::basis(chart, k); };
  const RationalFunction xi(coord("xi"));
  return {d(4) - directional_power(spec, 3) * d(2), d(3) + xi * d(2), d(1) - xi * d(0) - directional_power(spec, 2) * d(2)};
}

DifferentialForm pullback(const DifferentialForm& a, const ChartPtr& target, const std::vector<RationalFunction>& map,
                          const symcore::Bindings& extra) {
  const auto& source = a.chart();
  if (source->is_frame() || map.size() != source->dimension()) {
    throw Error(ErrorCode::ChartMismatch, "pullback map does not match the source chart");
  }
  symcore::Bindings bindings = extra;
  std::vector<DifferentialForm> images;
  for (std::size_t k = 0; k < map.size(); ++k) {
    bindings[source->coordinate(k)] = map[k];
    DifferentialForm img = exterior::exterior_derivative(DifferentialForm::scalar(target, map[k]));
    images.push_back(std::move(img));
  }
  DifferentialForm out(target, a.degree());
  for (const auto& [m, c] : a.components()) {
    DifferentialForm basis = DifferentialForm::scalar(target, symcore::substitute(c, bindings));
    for (Mask rest = m; rest; rest &= rest - 1) {
      basis = wedge(basis, images[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    out += basis;
  }
  return out;
}

namespace {

// omega1..omega5 on (x1..x5) for a one-variable potential.
dist235::MongeForms goursat_monge_forms(const HeavenlySpec& spec) {
  auto chart = exterior::charts::goursat();
  auto d = [&](std::size_t k) { return DifferentialForm::basis(chart, k); };
  const Symbol x5 = coord("x5");
  const RationalFunction x3(coord("x3"));
  const RationalFunction v5 = spec.variable(x5);
  const RationalFunction t2 = spec.derivative(2, x5);
  const RationalFunction t3 = spec.derivative(3, x5);
  return {d(1) - x3 * d(0), d(2) + t3 * d(0), d(3) - (t2 - v5 * t3) * d(0), d(0), d(4)};
}

}  // namespace

GoursatChange goursat_change(const HeavenlySpec& spec) {
  require_one_variable(spec, "goursat_change");
  auto target = exterior::charts::goursat();
  const Symbol x5 = coord("x5");
  const RationalFunction v5 = spec.variable(x5);
  const RationalFunction x1(coord("x1")), x2(coord("x2")), x3(coord("x3")), x4(coord("x4"));
  // (x, y, z, w, xi) in terms of (x1..x5)
  const std::vector<RationalFunction> map{v5, x4 - x3 * v5, x1, x2, -x3};
  symcore::Bindings extra;
  if (spec.mode == HeavenlySpec::Mode::Explicit && spec.theta.root_degree() > 1) {
    const int d = static_cast<int>(spec.theta.root_degree());
    extra[Symbol::root("x", d)] = RationalFunction(Symbol::root("x5", d));
  }

  auto tw = twistor_forms(spec);
  GoursatChange out{goursat_monge_forms(spec),
                    {pullback(tw[0], target, map, extra), pullback(tw[1], target, map, extra),
                     pullback(tw[2], target, map, extra)},
                    symcore::Matrix(3, 3),
                    {},
                    {},
                    {},
                    {}};
  Coframe basis(std::vector<DifferentialForm>(out.omega.begin(), out.omega.end()), symcore::Matrix::identity(5));
  for (std::size_t i = 0; i < 3; ++i) {
    auto c = exterior::express_in_coframe(out.pulled[i], basis).coefficients();
    if (!c[3].is_zero() || !c[4].is_zero()) {
      throw Error(ErrorCode::ChangeOfChartFailure, "pulled-back form leaves the span of omega1..omega3");
    }
    for (std::size_t j = 0; j < 3; ++j) out.transition(i, j) = c[j];
  }
  out.determinant = symcore::determinant(out.transition);
  if (out.determinant.is_zero()) throw Error(ErrorCode::ChangeOfChartFailure, "transition matrix is singular");

  out.q = -out.omega[1].component({0});
  out.f = -out.omega[2].component({0});
  const RationalFunction dq = symcore::partial_derivative(out.q, x5);
  if (!dq.is_zero()) out.df_dq = symcore::partial_derivative(out.f, x5) / dq;
  return out;
}

Coframe adapted_coframe_theta(const HeavenlySpec& spec) {
  require_one_variable(spec, "adapted_coframe_theta");
  const Symbol x5 = coord("x5");
  const RationalFunction t4 = spec.derivative(4, x5);
  if (t4.is_zero()) throw Error(ErrorCode::DegenerateDistribution, "Theta'''' vanishes identically");
  const RationalFunction t5 = spec.derivative(5, x5);
  const RationalFunction t6 = spec.derivative(6, x5);
  const RationalFunction v5 = spec.variable(x5);
  auto [w1, w2, w3, w4, w5] = goursat_monge_forms(spec);

  const DifferentialForm v = v5 * w2 - w3;
  const RationalFunction four_t4 = RationalFunction(4) * t4;
  const RationalFunction c3a = -(four_t4 + v5 * t5) / four_t4;
  const RationalFunction c3b = t5 / four_t4;
  const RationalFunction c4 =
      -(RationalFunction(5) * t5 * t5 - RationalFunction(4) * t4 * t6) / (RationalFunction(40) * t4.pow(3));
  std::vector<DifferentialForm> theta{w1 - t4 * v, t4 * v, c3a * w2 + c3b * w3, c4 * v + w4 - t4 * w5, t4 * w5};
  return Coframe(std::move(theta), exterior::conformal_metric());
}

curvature::CurvatureResult pipeline_theta(const HeavenlySpec& spec) {
  return curvature::run_curvature(adapted_coframe_theta(spec));
}

curvature::CartanQuartic quartic_theta(const HeavenlySpec& spec) { return pipeline_theta(spec).quartic; }

namespace {

template <class T>
T alpha5_expression(const std::array<T, 9>& t) {
  return T(10) * t[4] * t[4] * t[4] * t[8] - T(70) * t[4] * t[4] * t[5] * t[7] - T(49) * t[4] * t[4] * t[6] * t[6] +
         T(280) * t[4] * t[5] * t[5] * t[6] - T(175) * t[5] * t[5] * t[5] * t[5];
}

}  // namespace

RationalFunction alpha5(const HeavenlySpec& spec) {
  require_one_variable(spec, "alpha5");
  std::array<RationalFunction, 9> t;
  for (int k = 4; k <= 8; ++k) t[static_cast<std::size_t>(k)] = spec.derivative(k, coord("x5"));
  return alpha5_expression(t);
}

Polynomial alpha5_polynomial() {
  std::array<Polynomial, 9> t;
  for (int k = 4; k <= 8; ++k) t[static_cast<std::size_t>(k)] = Polynomial::variable(Symbol::jet("Theta", k));
  return alpha5_expression(t);
}

Rational alpha5_monomial_coefficient(const Rational& a) {
  std::array<Rational, 9> t;
  for (int k = 4; k <= 8; ++k) t[static_cast<std::size_t>(k)] = dist235::falling_factorial(a, k);
  return alpha5_expression(t);
}

// ---------------------------------------------------------------------------

const RationalFunction& JetTransformTable::derivative(int p) const {
  if (p < 1 || p > order) {
    throw Error(ErrorCode::MissingBinding, "f^(" + std::to_string(p) + ") is not in a table of order " +
                                               std::to_string(order));
  }
  return f[static_cast<std::size_t>(p)];
}

JetTransformTable jet_transform(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "jet transform order must be at least 1");
  if (order > 6) throw Error(ErrorCode::JetOrderOverflow, "jet transform tables stop at f^(6)");
  const Symbol x5 = coord("x5");
  const RationalFunction minus_inv_t4 = RationalFunction(-1) / RationalFunction(Symbol::jet("Theta", 4));
  JetTransformTable table;
  table.order = order;
  table.f.resize(static_cast<std::size_t>(order) + 1);
  table.f[1] = RationalFunction(x5);
  for (int p = 2; p <= order; ++p) {
    table.f[static_cast<std::size_t>(p)] =
        minus_inv_t4 * symcore::partial_derivative(table.f[static_cast<std::size_t>(p - 1)], x5);
  }
  return table;
}

PropositionCertificate verify_proposition(const JetTransformTable& table) {
  symcore::Bindings bindings;
  for (int k = 2; k <= 6; ++k) bindings[Symbol::jet("f", k)] = table.derivative(k);
  PropositionCertificate cert;
  cert.substituted = symcore::substitute(RationalFunction(dist235::a5_polynomial()), bindings);
  cert.expected = -RationalFunction(alpha5_polynomial()) / RationalFunction(Symbol::jet("Theta", 4)).pow(12);
  cert.difference = cert.substituted - cert.expected;
  if (!cert.difference.is_zero()) {
    throw Error(ErrorCode::PropositionMismatch, "a5 under the jet transform differs by " + cert.difference.str());
  }
  return cert;
}

}  // namespace cartan235::twistor
