#pragma once

#include <cstdint>
#include <string>

namespace testsupport {

struct Tally {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures++ == 0) first_failure = what;
  }
  bool ok(int min_cases) const { return failures == 0 && cases >= min_cases; }
};

/// Associativity, commutativity and distributivity of RationalFunction, plus (a/b)*b = a.
Tally ring_axioms(int cases, std::uint64_t seed);
/// d(ab)/dc = a' b + a b' through coordinates and jet symbols.
Tally leibniz_partial(int cases, std::uint64_t seed);
/// Mixed partials of expressions in four-variable Theta jets commute.
Tally commuting_partials(int cases, std::uint64_t seed);
/// d(d a) = 0 for random forms of degree <= 3.
Tally d_squared(int cases, std::uint64_t seed);
/// d(a ^ b) = da ^ b + (-1)^deg(a) a ^ db.
Tally leibniz_wedge(int cases, std::uint64_t seed);
/// reconstruct(express_in_coframe(a)) = a on random 1- and 2-forms.
Tally coframe_roundtrip(int cases, std::uint64_t seed);

struct CurvatureTallies {
  Tally connection;  // torsion and metricity residuals
  Tally riemann;     // antisymmetries, pair symmetry, first Bianchi
  Tally weyl;        // trace-freeness, pair symmetry, cyclic identity
  int nonflat = 0;   // cases with a nonzero Weyl tensor
};
CurvatureTallies curvature_properties(int cases, std::uint64_t seed);

}  // namespace testsupport
