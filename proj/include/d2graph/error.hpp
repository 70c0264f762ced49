#pragma once

#include <stdexcept>
#include <string>

namespace d2g {

enum class ErrorCode {
  index_out_of_range,
  self_loop,
  empty_set,
  empty_graph,
  disconnected,
  diameter_too_small,
  too_large,
  bad_header,
  byte_out_of_range,
  truncated_bitstream,
  trailing_garbage,
  too_many_tokens,
  partition_mismatch,
  improper_coloring,
  wrong_diameter,
  internal_consistency,
  parse_error,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception. Carries a machine-readable code plus a message
/// suitable for CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace d2g
