#pragma once

// JSON forms used by the command-line tool.
//
// Matrix: {"diag":[d1,d2,d3], "o12":[8], "o13":[8], "o23":[8]}, octonions in
// the basis order (1, i, j, k, kl, jl, il, l). A full 3x3 form
// {"entries":[[o11,o12,o13],[o21,o22,o23],[o31,o32,o33]]} is also accepted
// on input and must be Hermitian.

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "albert/dirac.hpp"
#include "albert/hermitian.hpp"
#include "albert/jordan.hpp"
#include "albert/lie_rank.hpp"

namespace albert {

inline constexpr double kInputHermiticityTolerance = 1e-12;

/// Throws Error(parse_error) on malformed input (bad JSON, wrong lengths,
/// non-finite numbers) and Error(not_hermitian) for a non-Hermitian full form.
Hermitian3 parse_matrix(std::string_view text);
Hermitian3 matrix_from_json(const nlohmann::json& j);

std::string serialize_matrix(const Hermitian3& m);

nlohmann::json to_json(const Octonion& a);
nlohmann::json to_json(const Hermitian3& m);
nlohmann::json to_json(const Hermitian2& p);
nlohmann::json to_json(const SpectralDecomposition& d);
nlohmann::json to_json(const SpanReport& r);
nlohmann::json to_json(const DiracStateBundle& s);

}  // namespace albert
