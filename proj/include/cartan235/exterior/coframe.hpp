#pragma once

#include <mutex>
#include <vector>

#include "cartan235/exterior/forms.hpp"
#include "cartan235/symcore/linalg.hpp"

namespace cartan235::exterior {

using symcore::Matrix;

/// The constant metric 2 theta1 theta5 - 2 theta2 theta4 + (4/3) theta3^2 used
/// for the conformal class of a (2,3,5) distribution, as a 5x5 matrix g_ij.
Matrix conformal_metric();

/// Ordered coframe theta^1..theta^n on a coordinate chart together with the
/// constant frame metric g_ij. Construction fails with SingularCoframe unless
/// the coefficient matrix B (theta^i = B_ia dx^a) has a nonzero determinant.
class Coframe {
 public:
  Coframe(std::vector<DifferentialForm> forms, Matrix metric);
  explicit Coframe(std::vector<DifferentialForm> forms);  // uses conformal_metric() in dimension 5, else identity

  const ChartPtr& chart() const noexcept { return chart_; }
  /// Abstract basis theta^1..theta^n for frame components.
  const ChartPtr& frame_chart() const noexcept { return frame_; }
  std::size_t dimension() const noexcept { return forms_.size(); }
  const std::vector<DifferentialForm>& forms() const noexcept { return forms_; }
  const DifferentialForm& form(std::size_t i) const { return forms_.at(i); }
  const Matrix& matrix() const noexcept { return b_; }
  /// B^{-1}: dx^a = sum_i inverse(a, i) theta^i.
  const Matrix& inverse_matrix() const noexcept { return b_inverse_; }
  const RationalFunction& determinant() const noexcept { return det_; }
  const Matrix& metric() const noexcept { return metric_; }
  const Matrix& metric_inverse() const noexcept { return metric_inverse_; }

  /// d theta^i written in the theta basis (computed once, shared across copies).
  const std::vector<DifferentialForm>& structure() const;

 private:
  ChartPtr chart_;
  ChartPtr frame_;
  std::vector<DifferentialForm> forms_;
  Matrix b_;
  Matrix b_inverse_;
  RationalFunction det_;
  Matrix metric_;
  Matrix metric_inverse_;

  struct Lazy {
    std::once_flag once;
    std::vector<DifferentialForm> structure;
  };
  std::shared_ptr<Lazy> lazy_ = std::make_shared<Lazy>();
};

/// Components of a coordinate form in the theta basis of `c`.
DifferentialForm express_in_coframe(const DifferentialForm& a, const Coframe& c);

/// Inverse of express_in_coframe: rebuilds the coordinate form from theta components.
DifferentialForm reconstruct(const DifferentialForm& theta_form, const Coframe& c);

/// d of a form given by theta-basis components, returned in the theta basis.
DifferentialForm frame_exterior_derivative(const DifferentialForm& theta_form, const Coframe& c);

/// dF in the theta basis: the frame derivatives e_i(F).
std::vector<RationalFunction> frame_gradient(const RationalFunction& f, const Coframe& c);

}  // namespace cartan235::exterior
