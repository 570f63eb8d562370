#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpk {

// Each category maps onto a distinct CLI exit status (see gpk/cli.hpp).
enum class ErrorCode {
  invalid_argument,
  out_of_range,
  overflow,
  context_mismatch,
  validation,
  precondition,
  unsupported,
  non_injective,
  budget_exceeded,
  config,
  internal,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace gpk
