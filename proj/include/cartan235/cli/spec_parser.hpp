#pragma once

#include <string>
#include <string_view>

#include "cartan235/dist235/dist235.hpp"
#include "cartan235/twistor/twistor.hpp"

namespace cartan235::cli {

/// A parsed f- or Theta-specification: a reserved word or a power sum.
struct ParsedSpec {
  enum class Kind { Jet, Jet4, Sum };
  Kind kind = Kind::Sum;
  dist235::PowerSum sum;
  std::string variable;  // "q" or "x5" as written (x is read as x5); empty for constants

  friend bool operator==(const ParsedSpec&, const ParsedSpec&) = default;
};

/// expr := term (('+'|'-') term)*, term := rational ('*' var '^' exponent)?,
/// whitespace ignored. A bare var or var^e is accepted with coefficient 1.
/// Errors are ParseError with the 1-based column and a caret line.
ParsedSpec parse_spec(std::string_view input);

/// Canonical text; constants and sums print with the given variable when none was written.
std::string canonical(const ParsedSpec& spec, std::string_view fallback_variable = "q");

/// InvalidArgument for jet4 or a Theta variable.
dist235::MongeSpec to_monge(const ParsedSpec& spec);
/// InvalidArgument for the variable q.
twistor::HeavenlySpec to_heavenly(const ParsedSpec& spec);

}  // namespace cartan235::cli
