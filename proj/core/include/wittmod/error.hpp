#ifndef WITTMOD_ERROR_HPP
#define WITTMOD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace wittmod {

enum class ErrorCode {
  division_by_zero,
  group_missing_one,
  parity_inconsistent,
  not_in_group,
  not_super,
  not_subgroup,
  invalid_character,
  kind_mismatch,
  invalid_scaling,
  empty_support,
  not_homogeneous,
  bad_target,
  shape_violation,
  spec_mismatch,
  invalid_argument,
  parse_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the report writer) can dispatch on it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wittmod

#endif  // WITTMOD_ERROR_HPP
