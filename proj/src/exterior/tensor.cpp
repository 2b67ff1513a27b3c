#include "cartan235/exterior/tensor.hpp"

#include "cartan235/error.hpp"

namespace cartan235::exterior {

SymmetricTensor2::SymmetricTensor2(ChartPtr chart) : chart_(std::move(chart)) {
  if (!chart_) throw Error(ErrorCode::InvalidArgument, "tensor without a chart");
  m_ = symcore::Matrix(chart_->dimension(), chart_->dimension());
}

void SymmetricTensor2::add_quadratic(std::size_t a, std::size_t b, const RationalFunction& c) {
  if (a >= dimension() || b >= dimension()) throw Error(ErrorCode::InvalidArgument, "tensor index out of range");
  m_(a, b) += c;
  m_(b, a) += c;
}

SymmetricTensor2& SymmetricTensor2::operator+=(const SymmetricTensor2& o) {
  if (!(*chart_ == *o.chart_)) throw Error(ErrorCode::ChartMismatch, "adding tensors on different charts");
  for (std::size_t a = 0; a < dimension(); ++a) {
    for (std::size_t b = 0; b < dimension(); ++b) m_(a, b) += o.m_(a, b);
  }
  return *this;
}

std::string SymmetricTensor2::str() const {
  std::string out;
  for (std::size_t a = 0; a < dimension(); ++a) {
    for (std::size_t b = a; b < dimension(); ++b) {
      RationalFunction c = m_(a, b);
      if (a == b) c = c * RationalFunction(symcore::Rational(1, 2));
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")*" + chart_->basis_name(a) + "*" + chart_->basis_name(b);
    }
  }
  return out.empty() ? "0" : out;
}

SymmetricTensor2 symmetrized_product(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.degree() != 1 || b.degree() != 1) throw Error(ErrorCode::DegreeMismatch, "symmetrized product of non 1-forms");
  if (!(*a.chart() == *b.chart())) throw Error(ErrorCode::ChartMismatch, "symmetrized product across charts");
  SymmetricTensor2 t(a.chart());
  auto ca = a.coefficients();
  auto cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].is_zero()) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (!cb[j].is_zero()) t.add_quadratic(i, j, ca[i] * cb[j]);
    }
  }
  return t;
}

SymmetricTensor2 metric_from_null_pairing(const DifferentialForm& t1, const DifferentialForm& t2,
                                          const DifferentialForm& t3, const DifferentialForm& t4) {
  return symmetrized_product(t1, t2) + symmetrized_product(t3, t4);
}

}  // namespace cartan235::exterior
