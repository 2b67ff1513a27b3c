#include "cartan235/exterior/coframe.hpp"

#include <bit>

#include "cartan235/error.hpp"

namespace cartan235::exterior {

using Mask = DifferentialForm::Mask;

Matrix conformal_metric() {
  Matrix g(5, 5);
  g(0, 4) = g(4, 0) = RationalFunction(1);
  g(1, 3) = g(3, 1) = RationalFunction(-1);
  g(2, 2) = RationalFunction(symcore::Rational(4, 3));
  return g;
}

namespace {

Matrix default_metric(std::size_t n) { return n == 5 ? conformal_metric() : Matrix::identity(n); }

// Pushes each basis 1-form of a chart through `images` (one 1-form per basis
// element) and wedges them to get the image of a basis k-form.
DifferentialForm image_of(Mask m, const std::vector<DifferentialForm>& images, const ChartPtr& target,
                          std::map<Mask, DifferentialForm>& cache) {
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  DifferentialForm out = DifferentialForm::scalar(target, RationalFunction(1));
  if (m != 0) {
    const int low = std::countr_zero(m);
    const Mask rest = m & (m - 1);
    out = wedge(images[static_cast<std::size_t>(low)], image_of(rest, images, target, cache));
  }
  cache.emplace(m, out);
  return out;
}

DifferentialForm change_basis(const DifferentialForm& a, const std::vector<DifferentialForm>& images,
                              const ChartPtr& target) {
  DifferentialForm out(target, a.degree());
  std::map<Mask, DifferentialForm> cache;
  for (const auto& [m, c] : a.components()) out += c * image_of(m, images, target, cache);
  return out;
}

}  // namespace

Coframe::Coframe(std::vector<DifferentialForm> forms) : Coframe(forms, default_metric(forms.size())) {}

Coframe::Coframe(std::vector<DifferentialForm> forms, Matrix metric)
    : forms_(std::move(forms)), metric_(std::move(metric)) {
  if (forms_.empty()) throw Error(ErrorCode::InvalidArgument, "empty coframe");
  chart_ = forms_.front().chart();
  const std::size_t n = forms_.size();
  if (chart_->is_frame() || chart_->dimension() != n) {
    throw Error(ErrorCode::ChartMismatch, "coframe size must match the chart dimension");
  }
  b_ = Matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = forms_[i];
    if (f.degree() != 1) throw Error(ErrorCode::DegreeMismatch, "coframe entries must be 1-forms");
    if (!(*f.chart() == *chart_)) throw Error(ErrorCode::ChartMismatch, "coframe forms on different charts");
    auto coeffs = f.coefficients();
    for (std::size_t a = 0; a < n; ++a) b_(i, a) = coeffs[a];
  }
  det_ = symcore::determinant(b_);
  if (det_.is_zero()) throw Error(ErrorCode::SingularCoframe, "coframe determinant vanishes");
  auto inv = symcore::inverse(b_);
  if (!inv) throw Error(ErrorCode::SingularCoframe, "coframe matrix is not invertible");
  b_inverse_ = std::move(*inv);

  if (metric_.rows() != n || metric_.cols() != n) throw Error(ErrorCode::SingularMetric, "metric has the wrong shape");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!metric_(i, j).is_constant()) throw Error(ErrorCode::SingularMetric, "frame metric must be constant");
      if (!(metric_(i, j) == metric_(j, i))) throw Error(ErrorCode::SingularMetric, "frame metric must be symmetric");
    }
  }
  auto ginv = symcore::inverse(metric_);
  if (!ginv) throw Error(ErrorCode::SingularMetric, "frame metric is degenerate");
  metric_inverse_ = std::move(*ginv);
  frame_ = Chart::frame("theta[" + chart_->name() + "]", n);
}

const std::vector<DifferentialForm>& Coframe::structure() const {
  std::call_once(lazy_->once, [this] {
    std::vector<DifferentialForm> s;
    s.reserve(forms_.size());
    for (const auto& f : forms_) s.push_back(express_in_coframe(exterior_derivative(f), *this));
    lazy_->structure = std::move(s);
  });
  return lazy_->structure;
}

DifferentialForm express_in_coframe(const DifferentialForm& a, const Coframe& c) {
  if (!(*a.chart() == *c.chart())) {
    throw Error(ErrorCode::ChartMismatch, "form on " + a.chart()->name() + ", coframe on " + c.chart()->name());
  }
  const std::size_t n = c.dimension();
  std::vector<DifferentialForm> images;
  images.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    DifferentialForm e(c.frame_chart(), 1);
    for (std::size_t i = 0; i < n; ++i) e.set_component(Mask{1} << i, c.inverse_matrix()(k, i));
    images.push_back(std::move(e));
  }
  return change_basis(a, images, c.frame_chart());
}

DifferentialForm reconstruct(const DifferentialForm& theta_form, const Coframe& c) {
  if (!(*theta_form.chart() == *c.frame_chart())) {
    throw Error(ErrorCode::ChartMismatch, "reconstruct needs theta components of this coframe");
  }
  return change_basis(theta_form, c.forms(), c.chart());
}

std::vector<RationalFunction> frame_gradient(const RationalFunction& f, const Coframe& c) {
  const std::size_t n = c.dimension();
  std::vector<RationalFunction> partials(n);
  for (std::size_t a = 0; a < n; ++a) partials[a] = symcore::partial_derivative(f, c.chart()->coordinate(a));
  std::vector<RationalFunction> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      if (partials[a].is_zero() || c.inverse_matrix()(a, i).is_zero()) continue;
      out[i] += c.inverse_matrix()(a, i) * partials[a];
    }
  }
  return out;
}

DifferentialForm frame_exterior_derivative(const DifferentialForm& theta_form, const Coframe& c) {
  if (!(*theta_form.chart() == *c.frame_chart())) {
    throw Error(ErrorCode::ChartMismatch, "frame derivative needs theta components of this coframe");
  }
  const auto& frame = c.frame_chart();
  const auto& s = c.structure();
  DifferentialForm out(frame, theta_form.degree() + 1);
  for (const auto& [m, coeff] : theta_form.components()) {
    DifferentialForm basis_form(frame, theta_form.degree());
    basis_form.set_component(m, RationalFunction(1));
    // d(coeff) ^ theta^J
    auto grad = frame_gradient(coeff, c);
    out += wedge(DifferentialForm::one_form(frame, grad), basis_form);
    // coeff d(theta^J) with d(theta^j1 ^ ... ^ theta^jk) expanded by Leibniz
    DifferentialForm d_basis(frame, theta_form.degree() + 1);
    int r = 0;
    for (Mask rest = m; rest; rest &= rest - 1, ++r) {
      const int j = std::countr_zero(rest);
      DifferentialForm before = DifferentialForm::scalar(frame, RationalFunction(1));
      DifferentialForm after = DifferentialForm::scalar(frame, RationalFunction(1));
      for (Mask t = m; t; t &= t - 1) {
        const int k = std::countr_zero(t);
        if (k < j) before = wedge(before, DifferentialForm::basis(frame, static_cast<std::size_t>(k)));
        if (k > j) after = wedge(after, DifferentialForm::basis(frame, static_cast<std::size_t>(k)));
      }
      DifferentialForm term = wedge(wedge(before, s[static_cast<std::size_t>(j)]), after);
      if (r & 1) term = -term;
      d_basis += term;
    }
    out += coeff * d_basis;
  }
  return out;
}

}  // namespace cartan235::exterior
