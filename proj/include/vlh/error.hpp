#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vlh {

enum class ErrorKind {
  not_invertible,
  constraint_violated,
  unknown_preset,
  field_mismatch,
  dimension_mismatch,
  duplicate_role,
  missing_passage,
  sign_mismatch,
  bad_syntax,
  length_mismatch,
  not_cube_edge,
  pattern_not_found,
  invalid_site,
  d_squared_nonzero,
  not_graded,
  invalid_config,
  io,
  mismatch_found,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one exception type. `subject`
// names the offending item (a constraint, a crossing label, a character
// offset) and `value` carries a residual or witness when one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string subject = {},
        std::string value = {})
      : std::runtime_error(std::move(message)),
        kind_(kind),
        subject_(std::move(subject)),
        value_(std::move(value)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& subject() const noexcept { return subject_; }
  const std::string& value() const noexcept { return value_; }

 private:
  ErrorKind kind_;
  std::string subject_;
  std::string value_;
};

}  // namespace vlh
