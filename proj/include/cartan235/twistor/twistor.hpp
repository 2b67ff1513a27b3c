#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cartan235/curvature/curvature.hpp"
#include "cartan235/dist235/dist235.hpp"
#include "cartan235/exterior/tensor.hpp"

namespace cartan235::twistor {

using dist235::PowerSum;
using exterior::ChartPtr;
using exterior::Coframe;
using exterior::DifferentialForm;
using exterior::SymmetricTensor2;
using symcore::Polynomial;
using symcore::Rational;
using symcore::RationalFunction;
using symcore::Symbol;

/// The heavenly potential Theta. One-variable modes depend on x (identified
/// with x5 after the Goursat change); Jet4 is a free function of (x, y, z, w).
struct HeavenlySpec {
  enum class Mode { SymbolicJet, Explicit, SymbolicJet4 };
  Mode mode = Mode::SymbolicJet;
  PowerSum theta;

  static HeavenlySpec jet() { return {}; }
  static HeavenlySpec jet4() { return {Mode::SymbolicJet4, {}}; }
  static HeavenlySpec explicit_theta(PowerSum t) { return {Mode::Explicit, std::move(t)}; }

  bool one_variable() const { return mode != Mode::SymbolicJet4; }
  /// The coordinate v (x or x5) in the realization: v itself, or u^d.
  RationalFunction variable(Symbol v) const;
  /// Theta^(k) of a one-variable potential as a function of v.
  RationalFunction derivative(int k, Symbol v) const;
  /// d^a/dx d^b/dy d^c/dz d^d/dw Theta on the Plebanski/twistor charts.
  RationalFunction partial(int a, int b, int c, int d) const;
  std::string str() const;
};

struct PlebanskiMetric {
  SymmetricTensor2 direct;              // dw dx + dz dy - Txx dz^2 - Tyy dw^2 + 2 Txy dw dz
  std::array<DifferentialForm, 4> tau;  // null coframe
  SymmetricTensor2 pairing;             // tau1 (.) tau2 + tau3 (.) tau4
  bool pairing_matches() const { return direct == pairing; }
};

PlebanskiMetric plebanski_metric(const HeavenlySpec& spec);

/// (d/dx + xi d/dy)^n Theta expanded into partial derivatives.
RationalFunction directional_power(const HeavenlySpec& spec, int n);

/// omega~1 = dxi - D^3 Theta dz, omega~2 = dw + xi dz, omega~3 = dy - xi dx - D^2 Theta dz
/// on the chart (x, y, z, w, xi), with D = d/dx + xi d/dy.
std::array<DifferentialForm, 3> twistor_forms(const HeavenlySpec& spec);

/// Pullback of a form along a map given by the source coordinates as
/// functions on the target chart. Extra bindings are applied to coefficients.
DifferentialForm pullback(const DifferentialForm& a, const ChartPtr& target, const std::vector<RationalFunction>& map,
                          const symcore::Bindings& extra = {});

struct GoursatChange {
  dist235::MongeForms omega;                  // on (x1..x5)
  std::array<DifferentialForm, 3> pulled;     // twistor forms in (x1..x5)
  symcore::Matrix transition;                 // pulled_i = sum_j T_ij omega_j
  RationalFunction determinant;
  RationalFunction q;                         // -Theta'''
  RationalFunction f;                         // Theta'' - x5 Theta'''
  std::optional<RationalFunction> df_dq;      // (df/dx5) / (dq/dx5); empty when q is constant
};

/// (x1, x2, x3, x4, x5) = (z, w, -xi, y - xi x, x). One-variable potentials only.
/// Throws InvalidArgument for a four-variable potential and ChangeOfChartFailure
/// unless the pulled-back forms span the same annihilator as omega1..omega3.
GoursatChange goursat_change(const HeavenlySpec& spec);

/// Adapted coframe on (x1..x5) built from Theta'' .. Theta^(6).
Coframe adapted_coframe_theta(const HeavenlySpec& spec);

curvature::CurvatureResult pipeline_theta(const HeavenlySpec& spec);
curvature::CartanQuartic quartic_theta(const HeavenlySpec& spec);

/// 10 T4^3 T8 - 70 T4^2 T5 T7 - 49 T4^2 T6^2 + 280 T4 T5^2 T6 - 175 T5^4.
RationalFunction alpha5(const HeavenlySpec& spec);
Polynomial alpha5_polynomial();
/// alpha5 of Theta = x^a is R(a) x^(4a - 20); returns R(a).
Rational alpha5_monomial_coefficient(const Rational& a);

struct JetTransformTable {
  int order = 0;
  std::vector<RationalFunction> f;  // f[p] = f^(p) in Theta jets, p = 1..order; f[0] unused
  const RationalFunction& derivative(int p) const;
};

/// f' = x5 and f^(p) = -(1/Theta4) d/dx5 f^(p-1), p <= order <= 6.
JetTransformTable jet_transform(int order);

struct PropositionCertificate {
  RationalFunction substituted;  // a5 with the table inserted
  RationalFunction expected;     // -alpha5 / Theta4^12
  RationalFunction difference;
};

/// Needs order >= 6 (MissingBinding otherwise); throws PropositionMismatch if the difference is nonzero.
PropositionCertificate verify_proposition(const JetTransformTable& table);

}  // namespace cartan235::twistor
