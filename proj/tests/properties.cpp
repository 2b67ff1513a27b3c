#include "properties.hpp"

#include "cartan235/curvature/curvature.hpp"
#include "support.hpp"

namespace testsupport {

using cartan235::symcore::partial_derivative;
namespace exterior = cartan235::exterior;
namespace curvature = cartan235::curvature;

Tally ring_axioms(int cases, std::uint64_t seed) {
  Rng rng(seed);
  const auto vars = monge_symbols();
  Tally t;
  for (int c = 0; c < cases; ++c) {
    const auto a = random_rational_function(rng, vars);
    const auto b = random_rational_function(rng, vars);
    const auto d = random_rational_function(rng, vars);
    bool ok = (a + b) + d == a + (b + d) && (a * b) * d == a * (b * d) && a * (b + d) == a * b + a * d &&
              a + b == b + a && a * b == b * a && (a - a).is_zero() && a + RationalFunction(0) == a &&
              a * RationalFunction(1) == a;
    if (!b.is_zero()) ok = ok && (a / b) * b == a;
    t.record(ok, "a = " + a.str() + ", b = " + b.str() + ", c = " + d.str());
  }
  return t;
}

Tally leibniz_partial(int cases, std::uint64_t seed) {
  Rng rng(seed);
  const auto vars = monge_symbols();
  const std::vector<Symbol> coords{Symbol::coordinate("x"), Symbol::coordinate("q"), Symbol::coordinate("p")};
  Tally t;
  for (int c = 0; c < cases; ++c) {
    const auto a = random_rational_function(rng, vars);
    const auto b = random_rational_function(rng, vars);
    const Symbol s = coords[static_cast<std::size_t>(uniform(rng, 0, 2))];
    const bool ok = partial_derivative(a * b, s) == partial_derivative(a, s) * b + a * partial_derivative(b, s);
    t.record(ok, "a = " + a.str() + ", b = " + b.str() + ", d/d" + s.display());
  }
  return t;
}

Tally commuting_partials(int cases, std::uint64_t seed) {
  Rng rng(seed);
  const std::vector<Symbol> coords{Symbol::coordinate("x"), Symbol::coordinate("y"), Symbol::coordinate("z"),
                                   Symbol::coordinate("w")};
  std::vector<Symbol> vars = coords;
  for (const auto& idx : {std::vector<int>{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 1}, {1, 0, 1, 0}}) {
    vars.push_back(Symbol::jet("Theta4", idx));
  }
  Tally t;
  for (int c = 0; c < cases; ++c) {
    const auto a = random_rational_function(rng, vars);
    const Symbol u = coords[static_cast<std::size_t>(uniform(rng, 0, 3))];
    const Symbol v = coords[static_cast<std::size_t>(uniform(rng, 0, 3))];
    const bool ok = partial_derivative(partial_derivative(a, u), v) == partial_derivative(partial_derivative(a, v), u);
    t.record(ok, "a = " + a.str());
  }
  return t;
}

Tally d_squared(int cases, std::uint64_t seed) {
  Rng rng(seed);
  const auto vars = monge_symbols();
  const auto chart = exterior::charts::monge();
  Tally t;
  for (int c = 0; c < cases; ++c) {
    const int degree = static_cast<int>(uniform(rng, 0, 3));
    const auto a = random_form(rng, chart, degree, vars);
    t.record(exterior::exterior_derivative(exterior::exterior_derivative(a)).is_zero(), "a = " + a.str());
  }
  return t;
}

Tally leibniz_wedge(int cases, std::uint64_t seed) {
  Rng rng(seed);
  const auto vars = monge_symbols();
  const auto chart = exterior::charts::monge();
  Tally t;
  for (int c = 0; c < cases; ++c) {
    const int p = static_cast<int>(uniform(rng, 0, 2));
    const int q = static_cast<int>(uniform(rng, 0, 2));
    const auto a = random_form(rng, chart, p, vars);
    const auto b = random_form(rng, chart, q, vars);
    using exterior::exterior_derivative;
    const auto lhs = exterior_derivative(wedge(a, b));
    auto rhs = wedge(exterior_derivative(a), b);
    const auto second = wedge(a, exterior_derivative(b));
    rhs = p % 2 == 0 ? rhs + second : rhs - second;
    t.record(lhs == rhs, "a = " + a.str() + ", b = " + b.str());
  }
  return t;
}

Tally coframe_roundtrip(int cases, std::uint64_t seed) {
  Rng rng(seed);
  const auto chart = exterior::charts::goursat();
  const auto& coords = chart->coordinates();
  Tally t;
  for (int c = 0; c < cases; ++c) {
    const Coframe cf = random_unipotent_coframe(rng, chart);
    const int degree = static_cast<int>(uniform(rng, 1, 2));
    const auto a = random_form(rng, chart, degree, coords);
    t.record(exterior::reconstruct(exterior::express_in_coframe(a, cf), cf) == a, "a = " + a.str());
  }
  return t;
}

CurvatureTallies curvature_properties(int cases, std::uint64_t seed) {
  Rng rng(seed);
  const auto chart = exterior::charts::goursat();
  CurvatureTallies out;
  for (int c = 0; c < cases; ++c) {
    const Coframe cf = random_unipotent_coframe(rng, chart);
    std::string label;
    for (const auto& f : cf.forms()) label += f.str() + "; ";
    const auto gamma = curvature::connection_forms(cf);
    bool ok = true;
    for (const auto& r : curvature::torsion_residual(gamma, cf)) ok = ok && r.is_zero();
    for (const auto& r : curvature::metricity_residual(gamma, cf)) ok = ok && r.is_zero();
    out.connection.record(ok, label);

    const auto r = curvature::riemann(gamma, cf);
    const std::size_t n = r.dimension();
    ok = curvature::first_bianchi_residual(r).empty();
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        for (std::size_t k = 0; k < n && ok; ++k) {
          for (std::size_t l = 0; l < n && ok; ++l) {
            const auto v = r.down(i, j, k, l);
            ok = v == -r.down(j, i, k, l) && v == -r.down(i, j, l, k) && v == r.down(k, l, i, j);
          }
        }
      }
    }
    out.riemann.record(ok, label);

    const auto w = curvature::weyl(r, cf.metric(), cf.metric_inverse());
    ok = true;
    for (const auto& tr : w.traces()) ok = ok && tr.is_zero();
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        for (std::size_t k = 0; k < n && ok; ++k) {
          for (std::size_t l = 0; l < n && ok; ++l) {
            const auto v = w(i, j, k, l);
            ok = v == w(k, l, i, j) && (v + w(i, k, l, j) + w(i, l, j, k)).is_zero();
          }
        }
      }
    }
    out.weyl.record(ok, label);
    if (!w.is_zero()) ++out.nonflat;
  }
  return out;
}

}  // namespace testsupport
