#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cartan235/cli/report.hpp"
#include "cartan235/symcore/polynomial.hpp"

namespace cartan235::cli {

enum class Pipeline { Fq, Theta };

/// "fq" or "theta"; InvalidArgument otherwise.
Pipeline parse_pipeline(std::string_view name);
std::string_view pipeline_name(Pipeline p);

/// Parse and usage errors propagate as cartan235::Error (ParseError,
/// InvalidArgument); the front end maps them to exit code 2.

Report cmd_quartic(std::string_view spec, Pipeline pipeline);

/// which: structure, proposition, pairing, goursat, dictionary. An empty spec
/// means the symbolic jets of the check (jet4 for pairing). With raw set,
/// structure is run on the coordinate coframe dx, dy, dp, dq, dz.
Report cmd_verify(std::string_view which, Pipeline pipeline, std::string_view spec = {}, bool raw = false);

Report cmd_bracket(std::string_view spec);

struct OdeOptions {
  int order = 8;
  std::optional<symcore::Rational> monomial;
  std::optional<std::vector<double>> init;  // y, y', ..., one entry per order
  double from = 1;
  double to = 2;
  double h = 1e-3;
  double study_h = 0.02;  // step of the step-halving study
  std::optional<std::string> csv_path;
};

/// Comma-separated doubles; InvalidArgument on junk.
std::vector<double> parse_init(std::string_view text);

Report cmd_ode(const OdeOptions& options);

}  // namespace cartan235::cli
