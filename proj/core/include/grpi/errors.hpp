#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grpi {

enum class ErrorCode {
  invalid_degree,
  degree_mismatch,
  not_bijective,
  point_out_of_range,
  cap_exceeded,
  order_overflow,
  not_a_subgroup,
  not_normal,
  not_p_group,
  trivial_group,
  parse_error,
  io_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-readable code.
class GroupError : public std::runtime_error {
 public:
  GroupError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the group-file reader; remembers the 1-based line number.
class ParseError : public GroupError {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& what)
      : GroupError(code, "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace grpi
