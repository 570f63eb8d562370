#include "gpk/errors.hpp"

namespace gpk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::out_of_range: return "out of range";
    case ErrorCode::overflow: return "integer overflow";
    case ErrorCode::context_mismatch: return "context mismatch";
    case ErrorCode::validation: return "validation error";
    case ErrorCode::precondition: return "precondition violated";
    case ErrorCode::unsupported: return "unsupported";
    case ErrorCode::non_injective: return "non-injective family";
    case ErrorCode::budget_exceeded: return "budget exceeded";
    case ErrorCode::config: return "config error";
    case ErrorCode::internal: return "internal consistency failure";
  }
  return "unknown";
}

}  // namespace gpk
