#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace albert {

enum class Errc {
  invalid_unit_argument,   // exp_unit called with a non-unit or non-imaginary axis
  zero_conjugator,
  non_associating_spinor,
  non_normalized_spinor,
  numerical_inconsistency, // cubic discriminant clearly negative
  non_coplanar_theta,
  unknown_family,
  requires_nesting,
  not_type_one,
  invalid_g2_target,
  not_hermitian,
  step_inconsistency,      // finite-difference tangent failed the h vs h/2 check
  empty_span,
  parse_error,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace albert
