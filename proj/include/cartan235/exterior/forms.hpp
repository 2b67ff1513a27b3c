#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cartan235/symcore/rational_function.hpp"

namespace cartan235::exterior {

using symcore::RationalFunction;
using symcore::Symbol;

/// A coordinate chart of dimension <= 5, or an abstract frame basis
/// (theta^1..theta^n) on which forms can be wedged but not differentiated.
class Chart {
 public:
  Chart(std::string name, std::vector<Symbol> coordinates);
  static std::shared_ptr<const Chart> frame(std::string name, std::size_t dimension);

  const std::string& name() const noexcept { return name_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  bool is_frame() const noexcept { return frame_; }
  const std::vector<Symbol>& coordinates() const noexcept { return coordinates_; }
  Symbol coordinate(std::size_t k) const { return coordinates_.at(k); }
  std::optional<std::size_t> index_of(Symbol s) const;
  /// Printed name of the k-th basis 1-form ("dq", "theta3", ...).
  const std::string& basis_name(std::size_t k) const { return basis_.at(k); }

  friend bool operator==(const Chart& a, const Chart& b) noexcept {
    return a.frame_ == b.frame_ && a.name_ == b.name_ && a.coordinates_ == b.coordinates_ &&
           a.basis_.size() == b.basis_.size();
  }

 private:
  Chart() = default;
  std::string name_;
  std::vector<Symbol> coordinates_;
  std::vector<std::string> basis_;
  bool frame_ = false;
};

using ChartPtr = std::shared_ptr<const Chart>;

namespace charts {
ChartPtr monge();      ///< (x, y, p, q, z)
ChartPtr twistor();    ///< (x, y, z, w, xi)
ChartPtr goursat();    ///< (x1, x2, x3, x4, x5)
ChartPtr plebanski();  ///< (x, y, z, w)
}  // namespace charts

/// Homogeneous exterior form. Components are keyed by the bitmask of a
/// strictly increasing index tuple; zero components are never stored.
class DifferentialForm {
 public:
  using Mask = std::uint32_t;

  DifferentialForm(ChartPtr chart, int degree);
  static DifferentialForm scalar(ChartPtr chart, const RationalFunction& value);
  /// dx^k (or theta^{k+1} on a frame chart), zero-based.
  static DifferentialForm basis(ChartPtr chart, std::size_t k);
  static DifferentialForm one_form(ChartPtr chart, std::span<const RationalFunction> coefficients);

  static Mask mask_of(std::initializer_list<std::size_t> increasing_indices);

  int degree() const noexcept { return degree_; }
  const ChartPtr& chart() const noexcept { return chart_; }
  const std::map<Mask, RationalFunction>& components() const noexcept { return components_; }
  RationalFunction component(Mask m) const;
  /// Component on increasing zero-based indices, e.g. component({0, 3}) for dx^0 ^ dx^3.
  RationalFunction component(std::initializer_list<std::size_t> increasing_indices) const {
    return component(mask_of(increasing_indices));
  }
  /// Coefficient vector of a 1-form.
  std::vector<RationalFunction> coefficients() const;
  void set_component(Mask m, const RationalFunction& value);
  bool is_zero() const noexcept { return components_.empty(); }

  DifferentialForm& operator+=(const DifferentialForm& o);
  DifferentialForm& operator-=(const DifferentialForm& o);
  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
  DifferentialForm operator-() const;
  friend DifferentialForm operator*(const RationalFunction& c, const DifferentialForm& a);
  friend bool operator==(const DifferentialForm& a, const DifferentialForm& b);

  std::string str() const;

 private:
  void check_compatible(const DifferentialForm& o) const;

  ChartPtr chart_;
  int degree_;
  std::map<Mask, RationalFunction> components_;
};

/// Sign of reordering the concatenation (a, b) of two increasing tuples into increasing order.
int merge_sign(DifferentialForm::Mask a, DifferentialForm::Mask b);

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

/// d on a coordinate chart; coefficients differentiate through symcore's chain rule.
DifferentialForm exterior_derivative(const DifferentialForm& a);

}  // namespace cartan235::exterior
