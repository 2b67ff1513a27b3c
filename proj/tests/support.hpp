#pragma once

#include <random>
#include <vector>

#include "cartan235/exterior/coframe.hpp"
#include "cartan235/exterior/forms.hpp"
#include "cartan235/symcore/rational_function.hpp"

namespace testsupport {

using cartan235::exterior::ChartPtr;
using cartan235::exterior::Coframe;
using cartan235::exterior::DifferentialForm;
using cartan235::symcore::Polynomial;
using cartan235::symcore::Rational;
using cartan235::symcore::RationalFunction;
using cartan235::symcore::Symbol;

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational small_rational(Rng& rng) {
  long n = 0;
  while (n == 0) n = uniform(rng, -9, 9);
  Rational r(n, uniform(rng, 1, 5));
  r.canonicalize();
  return r;
}

/// Up to max_terms monomials of total degree <= max_degree in the given symbols.
inline Polynomial random_polynomial(Rng& rng, const std::vector<Symbol>& vars, int max_terms, int max_degree) {
  Polynomial p;
  const long terms = uniform(rng, 1, max_terms);
  for (long t = 0; t < terms; ++t) {
    Polynomial m(small_rational(rng));
    const long deg = uniform(rng, 0, max_degree);
    for (long d = 0; d < deg; ++d) {
      m = m * Polynomial::variable(vars[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(vars.size()) - 1))]);
    }
    p += m;
  }
  return p;
}

inline Polynomial random_nonzero_polynomial(Rng& rng, const std::vector<Symbol>& vars, int max_terms, int max_degree) {
  for (;;) {
    Polynomial p = random_polynomial(rng, vars, max_terms, max_degree);
    if (!p.is_zero()) return p;
  }
}

inline RationalFunction random_rational_function(Rng& rng, const std::vector<Symbol>& vars) {
  return RationalFunction::fraction(random_polynomial(rng, vars, 3, 2), random_nonzero_polynomial(rng, vars, 2, 1));
}

inline std::vector<Symbol> monge_symbols() {
  std::vector<Symbol> v;
  for (const char* n : {"x", "y", "p", "q", "z"}) v.push_back(Symbol::coordinate(n));
  v.push_back(Symbol::jet("f", 1));
  v.push_back(Symbol::jet("f", 2));
  return v;
}

inline DifferentialForm random_form(Rng& rng, const ChartPtr& chart, int degree, const std::vector<Symbol>& vars) {
  DifferentialForm a(chart, degree);
  const std::size_t n = chart->dimension();
  const long terms = uniform(rng, 1, 3);
  for (long t = 0; t < terms; ++t) {
    std::vector<std::size_t> idx;
    while (idx.size() < static_cast<std::size_t>(degree)) {
      const auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
      bool seen = false;
      for (auto j : idx) seen = seen || j == k;
      if (!seen) idx.push_back(k);
    }
    DifferentialForm piece = DifferentialForm::scalar(chart, RationalFunction(random_polynomial(rng, vars, 2, 2)));
    for (auto k : idx) piece = wedge(piece, DifferentialForm::basis(chart, k));
    a += piece;
  }
  return a;
}

/// theta^i = dx^i + sum_{j>i} N_ij dx^j with sparse polynomial N: det B = 1.
inline Coframe random_unipotent_coframe(Rng& rng, const ChartPtr& chart) {
  const std::size_t n = chart->dimension();
  const auto& coords = chart->coordinates();
  std::vector<DifferentialForm> forms;
  for (std::size_t i = 0; i < n; ++i) forms.push_back(DifferentialForm::basis(chart, i));
  const long entries = uniform(rng, 1, 3);
  for (long e = 0; e < entries; ++e) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
    const auto j = static_cast<std::size_t>(uniform(rng, static_cast<long>(i) + 1, static_cast<long>(n) - 1));
    const Polynomial c = random_nonzero_polynomial(rng, coords, 2, 2);
    forms[i] += RationalFunction(c) * DifferentialForm::basis(chart, j);
  }
  return Coframe(std::move(forms));
}

}  // namespace testsupport
