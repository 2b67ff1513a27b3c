#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace cartan235::cli {

inline constexpr int kSchemaVersion = 1;

/// Exit codes: 0 ran, 1 a verification failed, 2 usage or parse error.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

struct Report {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::map<std::string, bool> verdicts;
  std::map<std::string, std::string> exact;  // canonical rational-function strings
  std::map<std::string, double> numeric;
  std::map<std::string, double> timings;     // seconds
  std::vector<std::string> messages;
  int exit_code = kExitOk;

  /// Keys are sorted; timings appear only when asked for, so output is byte-stable.
  nlohmann::json to_json(bool with_timings = false) const;
  std::string json_text(bool with_timings = false) const;
  /// One "section.key: value" line per entry.
  std::string text(bool with_timings = false) const;
};

}  // namespace cartan235::cli
