#pragma once

#include <string>

#include "cartan235/exterior/forms.hpp"
#include "cartan235/symcore/linalg.hpp"

namespace cartan235::exterior {

/// Symmetric 2-tensor S_ab dx^a dx^b on a coordinate chart. Entries follow the
/// symmetrized-product bookkeeping: the quadratic monomial c da db (a != b)
/// contributes c to both S_ab and S_ba, and c da^2 contributes 2c to S_aa.
class SymmetricTensor2 {
 public:
  explicit SymmetricTensor2(ChartPtr chart);

  const ChartPtr& chart() const noexcept { return chart_; }
  std::size_t dimension() const noexcept { return chart_->dimension(); }
  const RationalFunction& operator()(std::size_t a, std::size_t b) const { return m_(a, b); }
  const symcore::Matrix& matrix() const noexcept { return m_; }

  /// Adds c * da db to the quadratic form.
  void add_quadratic(std::size_t a, std::size_t b, const RationalFunction& c);

  SymmetricTensor2& operator+=(const SymmetricTensor2& o);
  friend SymmetricTensor2 operator+(SymmetricTensor2 a, const SymmetricTensor2& b) { return a += b; }
  friend bool operator==(const SymmetricTensor2& a, const SymmetricTensor2& b) {
    return *a.chart_ == *b.chart_ && a.m_ == b.m_;
  }

  /// Quadratic form as "c*da*db + ...", a <= b.
  std::string str() const;

 private:
  ChartPtr chart_;
  symcore::Matrix m_;
};

/// a (x) b + b (x) a.
SymmetricTensor2 symmetrized_product(const DifferentialForm& a, const DifferentialForm& b);

/// t1 (.) t2 + t3 (.) t4 with (.) the symmetrized product.
SymmetricTensor2 metric_from_null_pairing(const DifferentialForm& t1, const DifferentialForm& t2,
                                          const DifferentialForm& t3, const DifferentialForm& t4);

}  // namespace cartan235::exterior
