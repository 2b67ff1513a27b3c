#include "cartan235/error.hpp"

namespace cartan235 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::JetOrderOverflow: return "JetOrderOverflow";
    case ErrorCode::MissingBinding: return "MissingBinding";
    case ErrorCode::NearSingularEvaluation: return "NearSingularEvaluation";
    case ErrorCode::InvalidSubstitution: return "InvalidSubstitution";
    case ErrorCode::NotExactlyDivisible: return "NotExactlyDivisible";
    case ErrorCode::ChartMismatch: return "ChartMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::SingularCoframe: return "SingularCoframe";
    case ErrorCode::SingularMetric: return "SingularMetric";
    case ErrorCode::NotAdapted: return "NotAdapted";
    case ErrorCode::DegenerateDistribution: return "DegenerateDistribution";
    case ErrorCode::ChangeOfChartFailure: return "ChangeOfChartFailure";
    case ErrorCode::PropositionMismatch: return "PropositionMismatch";
    case ErrorCode::SingularThirdDerivative: return "SingularThirdDerivative";
    case ErrorCode::NotATransform: return "NotATransform";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cartan235
