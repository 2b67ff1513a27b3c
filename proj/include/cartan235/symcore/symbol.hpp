#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cartan235::symcore {

enum class SymbolKind : std::uint8_t {
  Coordinate,  ///< independent variable of a chart (or a free parameter)
  Jet,         ///< derivative of a named function, indexed by differentiation orders
  Root,        ///< u with u^d = base coordinate; lets q^(1/d) live in a polynomial ring
};

struct SymbolInfo {
  SymbolKind kind = SymbolKind::Coordinate;
  std::string name;         // coordinate name, function id, or base coordinate of a root
  std::vector<int> orders;  // jet multi-index, one entry per argument slot
  int root_degree = 0;
  std::string display;
};

/// Interned handle into the process-wide symbol table.
///
/// Ids follow registration order, and the polynomial term order is graded
/// lexicographic over ids. The standard coordinates and the f / Theta jets
/// up to the order cap are registered up front so printed output does not
/// depend on the order in which computations first touch a symbol.
class Symbol {
 public:
  static Symbol coordinate(std::string_view name);
  static Symbol jet(std::string_view function, std::vector<int> orders);
  static Symbol jet(std::string_view function, int order) { return jet(function, std::vector<int>{order}); }
  static Symbol root(std::string_view base_coordinate, int degree);
  static Symbol from_id(std::uint16_t id);

  std::uint16_t id() const noexcept { return id_; }
  const SymbolInfo& info() const;
  SymbolKind kind() const { return info().kind; }
  const std::string& display() const { return info().display; }
  int total_order() const;

  friend bool operator==(Symbol a, Symbol b) noexcept { return a.id_ == b.id_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) noexcept { return a.id_ <=> b.id_; }

 private:
  explicit Symbol(std::uint16_t id) : id_(id) {}
  std::uint16_t id_;
};

/// Declares which coordinates each argument slot of `function` follows:
/// differentiating a jet by a coordinate listed for slot k raises orders[k].
/// Re-registering a function replaces its bindings.
void register_function(std::string_view function, std::vector<std::vector<std::string>> slot_coordinates);
std::vector<std::vector<std::string>> function_slots(std::string_view function);

/// Maximum total differentiation order of a jet symbol. Defaults to 12, or
/// the value of CARTAN235_JET_ORDER_CAP when set.
int jet_order_cap();
void set_jet_order_cap(int cap);

}  // namespace cartan235::symcore
