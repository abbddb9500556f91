#include "albert/error.hpp"

namespace albert {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_unit_argument: return "invalid_unit_argument";
    case Errc::zero_conjugator: return "zero_conjugator";
    case Errc::non_associating_spinor: return "non_associating_spinor";
    case Errc::non_normalized_spinor: return "non_normalized_spinor";
    case Errc::numerical_inconsistency: return "numerical_inconsistency";
    case Errc::non_coplanar_theta: return "non_coplanar_theta";
    case Errc::unknown_family: return "unknown_family";
    case Errc::requires_nesting: return "requires_nesting";
    case Errc::not_type_one: return "not_type_one";
    case Errc::invalid_g2_target: return "invalid_g2_target";
    case Errc::not_hermitian: return "not_hermitian";
    case Errc::step_inconsistency: return "step_inconsistency";
    case Errc::empty_span: return "empty_span";
    case Errc::parse_error: return "parse_error";
  }
  return "unknown";
}

}  // namespace albert
