#include "cartan235/symcore/symbol.hpp"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>

#include "cartan235/error.hpp"

namespace cartan235::symcore {
namespace {

using Key = std::tuple<SymbolKind, std::string, std::vector<int>, int>;

int initial_cap() {
  if (const char* env = std::getenv("CARTAN235_JET_ORDER_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0 && v < 1000) return static_cast<int>(v);
  }
  return 12;
}

std::atomic<int>& cap_storage() {
  static std::atomic<int> cap{initial_cap()};
  return cap;
}

std::string jet_display(const std::string& function, const std::vector<int>& orders) {
  if (orders.size() == 1) {
    return orders[0] == 0 ? function : function + std::to_string(orders[0]);
  }
  // Multi-slot jets print as Theta_xxy using the slot coordinate names.
  static const char* letters[] = {"x", "y", "z", "w", "v", "u"};
  std::string base = function;
  if (base.size() > 1 && std::isdigit(static_cast<unsigned char>(base.back()))) base.pop_back();
  std::string out = base + "_";
  bool any = false;
  for (std::size_t k = 0; k < orders.size(); ++k) {
    for (int i = 0; i < orders[k]; ++i) {
      out += k < 6 ? letters[k] : "?";
      any = true;
    }
  }
  if (!any) out += "0";
  return out;
}

class Registry {
 public:
  Registry() {
    for (const char* c : {"x", "y", "p", "q", "z", "w", "xi", "x1", "x2", "x3", "x4", "x5"}) {
      intern({SymbolKind::Coordinate, c, {}, 0});
    }
    functions_["f"] = {{"q"}};
    functions_["Theta"] = {{"x", "x5"}};
    functions_["Theta4"] = {{"x"}, {"y"}, {"z"}, {"w"}};
    for (int k = 0; k <= 12; ++k) intern({SymbolKind::Jet, "f", {k}, 0});
    for (int k = 0; k <= 12; ++k) intern({SymbolKind::Jet, "Theta", {k}, 0});
  }

  std::uint16_t intern(const Key& key) {
    {
      std::shared_lock lock(mutex_);
      auto it = index_.find(key);
      if (it != index_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    if (infos_.size() >= 0xFFFF) throw Error(ErrorCode::InvalidArgument, "symbol table exhausted");
    SymbolInfo info;
    info.kind = std::get<0>(key);
    info.name = std::get<1>(key);
    info.orders = std::get<2>(key);
    info.root_degree = std::get<3>(key);
    switch (info.kind) {
      case SymbolKind::Coordinate: info.display = info.name; break;
      case SymbolKind::Jet: info.display = jet_display(info.name, info.orders); break;
      case SymbolKind::Root:
        info.display = info.name + "^(1/" + std::to_string(info.root_degree) + ")";
        break;
    }
    auto id = static_cast<std::uint16_t>(infos_.size());
    infos_.push_back(std::move(info));
    index_.emplace(key, id);
    return id;
  }

  const SymbolInfo& info(std::uint16_t id) const {
    std::shared_lock lock(mutex_);
    if (id >= infos_.size()) throw Error(ErrorCode::InvalidArgument, "unknown symbol id");
    return infos_[id];
  }

  void set_function(std::string_view name, std::vector<std::vector<std::string>> slots) {
    std::unique_lock lock(mutex_);
    functions_[std::string(name)] = std::move(slots);
  }

  std::vector<std::vector<std::string>> function(std::string_view name) const {
    std::shared_lock lock(mutex_);
    auto it = functions_.find(std::string(name));
    if (it == functions_.end()) return {};
    return it->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::deque<SymbolInfo> infos_;
  std::map<Key, std::uint16_t> index_;
  std::map<std::string, std::vector<std::vector<std::string>>> functions_;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

Symbol Symbol::coordinate(std::string_view name) {
  return Symbol(registry().intern({SymbolKind::Coordinate, std::string(name), {}, 0}));
}

Symbol Symbol::jet(std::string_view function, std::vector<int> orders) {
  if (orders.empty()) throw Error(ErrorCode::InvalidArgument, "jet needs at least one slot");
  int total = 0;
  for (int o : orders) {
    if (o < 0) throw Error(ErrorCode::InvalidArgument, "negative jet order");
    total += o;
  }
  if (total > jet_order_cap()) {
    throw Error(ErrorCode::JetOrderOverflow, std::string(function) + " order " + std::to_string(total) +
                                                 " exceeds cap " + std::to_string(jet_order_cap()));
  }
  return Symbol(registry().intern({SymbolKind::Jet, std::string(function), std::move(orders), 0}));
}

Symbol Symbol::root(std::string_view base_coordinate, int degree) {
  if (degree < 2) throw Error(ErrorCode::InvalidArgument, "root degree must be at least 2");
  return Symbol(registry().intern({SymbolKind::Root, std::string(base_coordinate), {}, degree}));
}

Symbol Symbol::from_id(std::uint16_t id) {
  (void)registry().info(id);
  return Symbol(id);
}

const SymbolInfo& Symbol::info() const { return registry().info(id_); }

int Symbol::total_order() const {
  const auto& o = info().orders;
  return std::accumulate(o.begin(), o.end(), 0);
}

void register_function(std::string_view function, std::vector<std::vector<std::string>> slot_coordinates) {
  registry().set_function(function, std::move(slot_coordinates));
}

std::vector<std::vector<std::string>> function_slots(std::string_view function) {
  return registry().function(function);
}

int jet_order_cap() { return cap_storage().load(std::memory_order_relaxed); }

void set_jet_order_cap(int cap) {
  if (cap < 1) throw Error(ErrorCode::InvalidArgument, "jet order cap must be positive");
  cap_storage().store(cap, std::memory_order_relaxed);
}

}  // namespace cartan235::symcore
