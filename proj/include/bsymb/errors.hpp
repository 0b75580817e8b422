#pragma once

#include <stdexcept>
#include <string>

namespace bsymb {

// Failure categories named by the library contracts. Tests and the CLI match
// on the code; messages are for humans.
enum class Errc {
  not_prime,
  reducible_modulus,
  degree_mismatch,
  field_too_large,
  field_mismatch,
  division_by_zero,
  index_out_of_range,
  duplicate_index,
  dimension_mismatch,
  bad_window,
  budget_exceeded,
  degenerate,
  uncertifiable,
  bad_params,
  bad_axis,
  budget_exhausted,
  seam_violation,
  not_a_divisor,
  gcd_violation,
  coefficient_outside_subfield,
  precondition_unmet,
  parse_error,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace bsymb
