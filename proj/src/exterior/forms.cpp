#include "cartan235/exterior/forms.hpp"

#include <bit>

#include "cartan235/error.hpp"

namespace cartan235::exterior {

Chart::Chart(std::string name, std::vector<Symbol> coordinates)
    : name_(std::move(name)), coordinates_(std::move(coordinates)) {
  if (coordinates_.size() > 5) throw Error(ErrorCode::InvalidArgument, "charts have dimension at most 5");
  for (Symbol s : coordinates_) {
    if (s.kind() != symcore::SymbolKind::Coordinate) {
      throw Error(ErrorCode::InvalidArgument, "chart coordinates must be coordinate symbols");
    }
    basis_.push_back("d" + s.display());
  }
}

std::shared_ptr<const Chart> Chart::frame(std::string name, std::size_t dimension) {
  if (dimension > 5) throw Error(ErrorCode::InvalidArgument, "frames have dimension at most 5");
  auto c = std::shared_ptr<Chart>(new Chart());
  c->name_ = std::move(name);
  c->frame_ = true;
  for (std::size_t k = 0; k < dimension; ++k) c->basis_.push_back("theta" + std::to_string(k + 1));
  return c;
}

std::optional<std::size_t> Chart::index_of(Symbol s) const {
  for (std::size_t k = 0; k < coordinates_.size(); ++k) {
    if (coordinates_[k] == s) return k;
  }
  return std::nullopt;
}

namespace charts {
namespace {
ChartPtr make(const char* name, std::initializer_list<const char*> coords) {
  std::vector<Symbol> symbols;
  for (const char* c : coords) symbols.push_back(Symbol::coordinate(c));
  return std::make_shared<const Chart>(name, std::move(symbols));
}
}  // namespace

ChartPtr monge() {
  static const ChartPtr c = make("monge", {"x", "y", "p", "q", "z"});
  return c;
}
ChartPtr twistor() {
  static const ChartPtr c = make("twistor", {"x", "y", "z", "w", "xi"});
  return c;
}
ChartPtr goursat() {
  static const ChartPtr c = make("goursat", {"x1", "x2", "x3", "x4", "x5"});
  return c;
}
ChartPtr plebanski() {
  static const ChartPtr c = make("plebanski", {"x", "y", "z", "w"});
  return c;
}
}  // namespace charts

// ---------------------------------------------------------------------------

DifferentialForm::DifferentialForm(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  if (!chart_) throw Error(ErrorCode::InvalidArgument, "form without a chart");
  // Degrees above the dimension are allowed and always identically zero.
  if (degree < 0 || degree > 2 * static_cast<int>(chart_->dimension())) {
    throw Error(ErrorCode::DegreeMismatch, "degree out of range for chart " + chart_->name());
  }
}

DifferentialForm DifferentialForm::scalar(ChartPtr chart, const RationalFunction& value) {
  DifferentialForm f(std::move(chart), 0);
  f.set_component(0, value);
  return f;
}

DifferentialForm DifferentialForm::basis(ChartPtr chart, std::size_t k) {
  if (k >= chart->dimension()) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  DifferentialForm f(std::move(chart), 1);
  f.set_component(Mask{1} << k, RationalFunction(1));
  return f;
}

DifferentialForm DifferentialForm::one_form(ChartPtr chart, std::span<const RationalFunction> coefficients) {
  if (coefficients.size() != chart->dimension()) {
    throw Error(ErrorCode::InvalidArgument, "coefficient count does not match chart dimension");
  }
  DifferentialForm f(std::move(chart), 1);
  for (std::size_t k = 0; k < coefficients.size(); ++k) f.set_component(Mask{1} << k, coefficients[k]);
  return f;
}

DifferentialForm::Mask DifferentialForm::mask_of(std::initializer_list<std::size_t> increasing_indices) {
  Mask m = 0;
  std::size_t last = 0;
  bool first = true;
  for (std::size_t i : increasing_indices) {
    if (!first && i <= last) throw Error(ErrorCode::InvalidArgument, "indices must be strictly increasing");
    m |= Mask{1} << i;
    last = i;
    first = false;
  }
  return m;
}

RationalFunction DifferentialForm::component(Mask m) const {
  auto it = components_.find(m);
  return it == components_.end() ? RationalFunction() : it->second;
}

std::vector<RationalFunction> DifferentialForm::coefficients() const {
  if (degree_ != 1) throw Error(ErrorCode::DegreeMismatch, "coefficients() needs a 1-form");
  std::vector<RationalFunction> out(chart_->dimension());
  for (const auto& [m, c] : components_) out[static_cast<std::size_t>(std::countr_zero(m))] = c;
  return out;
}

void DifferentialForm::set_component(Mask m, const RationalFunction& value) {
  if (std::popcount(m) != degree_ || (m >> chart_->dimension()) != 0) {
    throw Error(ErrorCode::DegreeMismatch, "component index does not match form degree");
  }
  if (value.is_zero()) {
    components_.erase(m);
  } else {
    components_[m] = value;
  }
}

void DifferentialForm::check_compatible(const DifferentialForm& o) const {
  if (!(*chart_ == *o.chart_)) {
    throw Error(ErrorCode::ChartMismatch, "forms on charts " + chart_->name() + " and " + o.chart_->name());
  }
  if (degree_ != o.degree_) throw Error(ErrorCode::DegreeMismatch, "adding forms of different degree");
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.components_) {
    auto it = components_.find(m);
    if (it == components_.end()) {
      components_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) components_.erase(it);
    }
  }
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& o) { return *this += -o; }

DifferentialForm DifferentialForm::operator-() const {
  DifferentialForm r = *this;
  for (auto& [m, c] : r.components_) c = -c;
  return r;
}

DifferentialForm operator*(const RationalFunction& c, const DifferentialForm& a) {
  DifferentialForm r(a.chart_, a.degree_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : a.components_) r.components_.emplace(m, c * v);
  return r;
}

bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
  return *a.chart_ == *b.chart_ && a.degree_ == b.degree_ && a.components_ == b.components_;
}

std::string DifferentialForm::str() const {
  if (components_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : components_) {
    if (!out.empty()) out += " + ";
    std::string basis;
    for (std::size_t k = 0; k < chart_->dimension(); ++k) {
      if (!(m & (Mask{1} << k))) continue;
      if (!basis.empty()) basis += "^";
      basis += chart_->basis_name(k);
    }
    out += "(" + c.str() + ")";
    if (!basis.empty()) out += "*" + basis;
  }
  return out;
}

int merge_sign(DifferentialForm::Mask a, DifferentialForm::Mask b) {
  int inversions = 0;
  while (b) {
    int j = std::countr_zero(b);
    b &= b - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  if (!(*a.chart() == *b.chart())) {
    throw Error(ErrorCode::ChartMismatch, "wedge of forms on " + a.chart()->name() + " and " + b.chart()->name());
  }
  const int degree = a.degree() + b.degree();
  DifferentialForm r(a.chart(), degree);
  if (degree > static_cast<int>(a.chart()->dimension())) return r;
  std::map<DifferentialForm::Mask, RationalFunction> acc;
  for (const auto& [ma, ca] : a.components()) {
    for (const auto& [mb, cb] : b.components()) {
      if (ma & mb) continue;
      RationalFunction term = ca * cb;
      if (merge_sign(ma, mb) < 0) term = -term;
      acc[ma | mb] += term;
    }
  }
  for (const auto& [m, c] : acc) r.set_component(m, c);
  return r;
}

DifferentialForm exterior_derivative(const DifferentialForm& a) {
  const auto& chart = a.chart();
  if (chart->is_frame()) {
    throw Error(ErrorCode::ChartMismatch, "exterior_derivative needs a coordinate chart, got frame " + chart->name());
  }
  DifferentialForm r(chart, a.degree() + 1);
  if (a.degree() >= static_cast<int>(chart->dimension())) return r;
  std::map<DifferentialForm::Mask, RationalFunction> acc;
  for (const auto& [m, c] : a.components()) {
    for (std::size_t k = 0; k < chart->dimension(); ++k) {
      const DifferentialForm::Mask bit = DifferentialForm::Mask{1} << k;
      if (m & bit) continue;
      RationalFunction dc = symcore::partial_derivative(c, chart->coordinate(k));
      if (dc.is_zero()) continue;
      // dx^k ^ dx^I: move dx^k past the indices of I below k.
      if (std::popcount(m & (bit - 1)) & 1) dc = -dc;
      acc[m | bit] += dc;
    }
  }
  for (const auto& [m, c] : acc) r.set_component(m, c);
  return r;
}

}  // namespace cartan235::exterior
