#pragma once

#include <stdexcept>
#include <string>

namespace satalg {

enum class ErrorCode {
  pole,
  domain,
  division_by_zero,
  classification,
  invalid_parameter,
  out_of_range,
  out_of_scope,
  degenerate,
  no_convergence,
  unavailable,
  parse,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace satalg
