#pragma once

#include <stdexcept>
#include <string>

namespace drg {

enum class ErrorCode {
  invalid_modulus,
  group_mismatch,
  invalid_element,
  no_such_order,
  invalid_subgroup,
  conductor_mismatch,
  overflow,
  not_a_group_algebra_element,
  identity_in_set,
  not_inverse_closed,
  not_connected,
  not_distance_regular,
  numeric_separation_failure,
  not_antipodal,
  not_bipartite,
  precondition,
  size_limit_exceeded,
  limit_exceeded,
  aut_computation_limit,
  not_q_polynomial,
  usage,
  // Violations of proven facts. Reaching one of these means a bug in this library.
  internal_inconsistency,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool is_bug_trap() const noexcept { return code_ == ErrorCode::internal_inconsistency; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void bug_trap(const std::string& what) {
  throw Error(ErrorCode::internal_inconsistency, what);
}

}  // namespace drg
