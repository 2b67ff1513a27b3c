#include "cartan235/cli/report.hpp"

#include <sstream>

namespace cartan235::cli {

nlohmann::json Report::to_json(bool with_timings) const {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = inputs;
  j["verdicts"] = verdicts;
  j["exact"] = exact;
  j["numeric"] = numeric;
  j["messages"] = messages;
  j["exit_code"] = exit_code;
  if (with_timings) j["timings"] = timings;
  return j;
}

std::string Report::json_text(bool with_timings) const { return to_json(with_timings).dump(2) + "\n"; }

std::string Report::text(bool with_timings) const {
  std::ostringstream out;
  out.precision(17);
  out << "command: " << command << "\n";
  for (const auto& [k, v] : inputs) out << "input." << k << ": " << v << "\n";
  for (const auto& [k, v] : verdicts) out << "verdict." << k << ": " << (v ? "true" : "false") << "\n";
  for (const auto& [k, v] : exact) out << "exact." << k << ": " << v << "\n";
  for (const auto& [k, v] : numeric) out << "numeric." << k << ": " << v << "\n";
  for (const auto& m : messages) out << "message: " << m << "\n";
  if (with_timings) {
    for (const auto& [k, v] : timings) out << "timing." << k << ": " << v << "\n";
  }
  out << "exit_code: " << exit_code << "\n";
  return out.str();
}

}  // namespace cartan235::cli
