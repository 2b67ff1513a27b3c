#include "cartan235/dist235/dist235.hpp"

#include "cartan235/error.hpp"

namespace cartan235::dist235 {

using exterior::wedge;
using Mask = DifferentialForm::Mask;

namespace {

Symbol q_symbol() { return Symbol::coordinate("q"); }

}  // namespace

RationalFunction MongeSpec::q() const {
  if (mode == Mode::SymbolicJet) return RationalFunction(q_symbol());
  return f.variable(q_symbol());
}

RationalFunction MongeSpec::derivative(int k) const {
  if (mode == Mode::SymbolicJet) return RationalFunction(Symbol::jet("f", k));
  return f.derivative(q_symbol(), k);
}

std::string MongeSpec::str() const { return mode == Mode::SymbolicJet ? "jet" : f.str("q"); }

MongeForms monge_coframe(const MongeSpec& spec) {
  auto c = exterior::charts::monge();
  auto d = [&](std::size_t k) { return DifferentialForm::basis(c, k); };
  const RationalFunction p(Symbol::coordinate("p"));
  return MongeForms{d(1) - p * d(0), d(2) - spec.q() * d(0), d(4) - spec.derivative(0) * d(0), d(3), d(0)};
}

// ---------------------------------------------------------------------------

VectorField::VectorField(exterior::ChartPtr chart, std::vector<RationalFunction> coefficients)
    : chart_(std::move(chart)), c_(std::move(coefficients)) {
  if (c_.size() != chart_->dimension()) throw Error(ErrorCode::InvalidArgument, "vector field size mismatch");
}

RationalFunction VectorField::apply(const RationalFunction& f) const {
  RationalFunction out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    RationalFunction d = symcore::partial_derivative(f, chart_->coordinate(k));
    if (!d.is_zero()) out += c_[k] * d;
  }
  return out;
}

bool VectorField::is_zero() const {
  for (const auto& v : c_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::string VectorField::str() const {
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[k].str() + ")*d/d" + chart_->coordinate(k).display();
  }
  return out.empty() ? "0" : out;
}

VectorField lie_bracket(const VectorField& a, const VectorField& b) {
  if (!(*a.chart() == *b.chart())) throw Error(ErrorCode::ChartMismatch, "bracket of fields on different charts");
  std::vector<RationalFunction> c(a.coefficients().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.apply(b[k]) - b.apply(a[k]);
  return VectorField(a.chart(), std::move(c));
}

BracketFrame bracket_frame(const MongeSpec& spec) {
  auto chart = exterior::charts::monge();
  const RationalFunction p(Symbol::coordinate("p"));
  VectorField x4(chart, {0, 0, 0, 1, 0});
  VectorField x5(chart, {1, p, spec.q(), 0, spec.derivative(0)});
  VectorField x3 = lie_bracket(x4, x5);
  VectorField x2 = lie_bracket(x4, x3);
  VectorField x1 = lie_bracket(x5, x3);
  symcore::Matrix m(5, 5);
  std::array<VectorField, 5> fields{x1, x2, x3, x4, x5};
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t a = 0; a < 5; ++a) m(i, a) = fields[i][a];
  }
  return BracketFrame{std::move(fields), symcore::determinant(m)};
}

// ---------------------------------------------------------------------------

Coframe adapted_coframe_fq(const MongeSpec& spec) {
  const RationalFunction f1 = spec.derivative(1);
  const RationalFunction f2 = spec.derivative(2);
  if (f2.is_zero()) throw Error(ErrorCode::DegenerateDistribution, "f'' vanishes identically");
  const RationalFunction f3 = spec.derivative(3);
  const RationalFunction f4 = spec.derivative(4);
  auto [w1, w2, w3, w4, w5] = monge_coframe(spec);

  const DifferentialForm v = f1 * w2 - w3;
  const RationalFunction inv_f2 = RationalFunction(1) / f2;
  const RationalFunction f2sq4 = RationalFunction(4) * f2 * f2;
  const RationalFunction c3a = (f2sq4 - f1 * f3) / f2sq4;
  const RationalFunction c3b = f3 / f2sq4;
  const RationalFunction c4 = (RationalFunction(7) * f3 * f3 - RationalFunction(4) * f2 * f4) /
                              (RationalFunction(40) * f2.pow(3));
  std::vector<DifferentialForm> theta{
      w1 - inv_f2 * v,
      inv_f2 * v,
      c3a * w2 + c3b * w3,
      c4 * v + w4 - w5,
      -w4,
  };
  return Coframe(std::move(theta), exterior::conformal_metric());
}

// ---------------------------------------------------------------------------

namespace {

struct OmegaTerm {
  std::size_t theta;  // zero-based theta index
  std::size_t omega;  // zero-based Omega index
  long num, den;
};

struct StructureEquation {
  std::vector<OmegaTerm> terms;
  std::size_t inhom_a, inhom_b;  // theta^a ^ theta^b, or a == b for none
};

const std::array<StructureEquation, 5>& structure_equations() {
  static const std::array<StructureEquation, 5> eqs{{
      {{{0, 0, 2, 1}, {0, 3, 1, 1}, {1, 1, 1, 1}}, 2, 3},
      {{{0, 2, 1, 1}, {1, 0, 1, 1}, {1, 3, 2, 1}}, 2, 4},
      {{{0, 4, 1, 1}, {1, 5, 1, 1}, {2, 0, 1, 1}, {2, 3, 1, 1}}, 3, 4},
      {{{0, 6, 1, 1}, {2, 5, 4, 3}, {3, 0, 1, 1}, {4, 1, 1, 1}}, 0, 0},
      {{{1, 6, 1, 1}, {2, 4, -4, 3}, {3, 2, 1, 1}, {4, 3, 1, 1}}, 0, 0},
  }};
  return eqs;
}

}  // namespace

bool StructureForms::residual_zero() const {
  for (const auto& r : residual) {
    if (!r.is_zero()) return false;
  }
  return true;
}

StructureForms solve_structure_forms(const Coframe& c) {
  if (c.dimension() != 5) throw Error(ErrorCode::InvalidArgument, "structure equations need a 5-coframe");
  const auto& eqs = structure_equations();
  const auto& s = c.structure();
  constexpr std::size_t n = 5, unknowns = 35;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) pairs.emplace_back(j, k);
  }
  symcore::Matrix a(n * pairs.size(), unknowns);
  std::vector<RationalFunction> b(n * pairs.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& eq = eqs[i];
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [j, k] = pairs[p];
      const std::size_t row = i * pairs.size() + p;
      for (const auto& t : eq.terms) {
        // theta^a ^ (sum_m w_m theta^m) hits theta^j ^ theta^k through m = the other index
        std::size_t m;
        int sign;
        if (t.theta == j) {
          m = k;
          sign = 1;
        } else if (t.theta == k) {
          m = j;
          sign = -1;
        } else {
          continue;
        }
        a(row, t.omega * n + m) += RationalFunction(symcore::Rational(sign * t.num, t.den));
      }
      RationalFunction rhs = s[i].component((Mask{1} << j) | (Mask{1} << k));
      if (eq.inhom_a != eq.inhom_b && eq.inhom_a == j && eq.inhom_b == k) rhs -= RationalFunction(1);
      b[row] = rhs;
    }
  }
  auto sol = symcore::solve(a, b);
  if (!sol.consistent) throw Error(ErrorCode::NotAdapted, "structure equations have no solution for this coframe");

  StructureForms out{{DifferentialForm(c.frame_chart(), 1), DifferentialForm(c.frame_chart(), 1),
                      DifferentialForm(c.frame_chart(), 1), DifferentialForm(c.frame_chart(), 1),
                      DifferentialForm(c.frame_chart(), 1), DifferentialForm(c.frame_chart(), 1),
                      DifferentialForm(c.frame_chart(), 1)},
                     sol.nullity,
                     sol.rank,
                     {}};
  for (std::size_t mu = 0; mu < 7; ++mu) {
    for (std::size_t m = 0; m < n; ++m) out.omega[mu].set_component(Mask{1} << m, sol.particular[mu * n + m]);
  }

  // Residual in coordinates: d theta^i minus the right-hand side built from
  // the coordinate 1-forms theta^a and the reconstructed Omega.
  std::vector<DifferentialForm> omega_coord;
  for (const auto& o : out.omega) omega_coord.push_back(exterior::reconstruct(o, c));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& eq = eqs[i];
    DifferentialForm r = exterior::exterior_derivative(c.form(i));
    for (const auto& t : eq.terms) {
      r -= RationalFunction(symcore::Rational(t.num, t.den)) * wedge(c.form(t.theta), omega_coord[t.omega]);
    }
    if (eq.inhom_a != eq.inhom_b) r -= wedge(c.form(eq.inhom_a), c.form(eq.inhom_b));
    out.residual.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------

curvature::CurvatureResult pipeline_fq(const MongeSpec& spec) {
  return curvature::run_curvature(adapted_coframe_fq(spec));
}

CartanQuartic quartic_fq(const MongeSpec& spec) { return pipeline_fq(spec).quartic; }

namespace {

template <class T>
T a5_expression(const std::array<T, 7>& f) {
  return T(10) * f[6] * f[2] * f[2] * f[2] - T(80) * f[2] * f[2] * f[3] * f[5] - T(51) * f[2] * f[2] * f[4] * f[4] +
         T(336) * f[2] * f[3] * f[3] * f[4] - T(224) * f[3] * f[3] * f[3] * f[3];
}

}  // namespace

RationalFunction a5_residual(const MongeSpec& spec) {
  std::array<RationalFunction, 7> f;
  for (int k = 2; k <= 6; ++k) f[static_cast<std::size_t>(k)] = spec.derivative(k);
  return a5_expression(f);
}

Polynomial a5_polynomial() {
  std::array<Polynomial, 7> f;
  for (int k = 2; k <= 6; ++k) f[static_cast<std::size_t>(k)] = Polynomial::variable(Symbol::jet("f", k));
  return a5_expression(f);
}

Rational a5_monomial_coefficient(const Rational& m) {
  std::array<Rational, 7> f;
  for (int k = 2; k <= 6; ++k) f[static_cast<std::size_t>(k)] = falling_factorial(m, k);
  return a5_expression(f);
}

Polynomial a5_monomial_polynomial() {
  const Polynomial m = Polynomial::variable(Symbol::coordinate("m"));
  std::array<Polynomial, 7> f;
  Polynomial fall(1);
  for (int k = 0; k <= 6; ++k) {
    f[static_cast<std::size_t>(k)] = fall;
    fall = fall * (m - Polynomial(static_cast<long>(k)));
  }
  return a5_expression(f);
}

}  // namespace cartan235::dist235
