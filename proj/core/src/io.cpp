#include "albert/io.hpp"

#include <cmath>
#include <vector>

#include "albert/error.hpp"

namespace albert {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::parse_error, what); }

Octonion octonion_from(const json& j, std::string_view field) {
  if (!j.is_array() || j.size() != kOctonionDim) {
    fail("'" + std::string(field) + "' must be an array of 8 numbers");
  }
  Octonion::Coeffs c{};
  for (std::size_t n = 0; n < kOctonionDim; ++n) {
    if (!j[n].is_number()) fail("'" + std::string(field) + "' holds a non-number");
    c[n] = j[n].get<double>();
    if (!std::isfinite(c[n])) fail("'" + std::string(field) + "' holds a non-finite number");
  }
  return Octonion(c);
}

const json& member(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Hermitian3 matrix_from_json(const json& j) {
  if (!j.is_object()) fail("matrix must be a JSON object");

  if (j.contains("entries")) {
    const json& rows = j["entries"];
    if (!rows.is_array() || rows.size() != 3) fail("'entries' must hold 3 rows");
    OctMatrix3 m{};
    for (std::size_t r = 0; r < 3; ++r) {
      if (!rows[r].is_array() || rows[r].size() != 3) fail("each row of 'entries' needs 3 octonions");
      for (std::size_t c = 0; c < 3; ++c) {
        m[r][c] = octonion_from(rows[r][c], "entries");
      }
    }
    return Hermitian3::from_full(m, kInputHermiticityTolerance);
  }

  const json& diag = member(j, "diag");
  if (!diag.is_array() || diag.size() != 3) fail("'diag' must be an array of 3 numbers");
  Hermitian3 m;
  for (std::size_t n = 0; n < 3; ++n) {
    if (!diag[n].is_number()) fail("'diag' holds a non-number");
    m.diag[n] = diag[n].get<double>();
    if (!std::isfinite(m.diag[n])) fail("'diag' holds a non-finite number");
  }
  m.o12 = octonion_from(member(j, "o12"), "o12");
  m.o13 = octonion_from(member(j, "o13"), "o13");
  m.o23 = octonion_from(member(j, "o23"), "o23");
  return m;
}

Hermitian3 parse_matrix(std::string_view text) {
  json j = json::parse(text.begin(), text.end(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail("malformed JSON");
  return matrix_from_json(j);
}

std::string serialize_matrix(const Hermitian3& m) { return to_json(m).dump(); }

json to_json(const Octonion& a) {
  return json(std::vector<double>(a.coeffs().begin(), a.coeffs().end()));
}

json to_json(const Hermitian3& m) {
  return json{{"diag", std::vector<double>(m.diag.begin(), m.diag.end())},
              {"o12", to_json(m.o12)},
              {"o13", to_json(m.o13)},
              {"o23", to_json(m.o23)}};
}

json to_json(const Hermitian2& p) {
  return json{{"diag", {p.d1, p.d2}}, {"o12", to_json(p.a)}};
}

json to_json(const SpectralDecomposition& d) {
  json pairs = json::array();
  json values = json::array();
  for (const auto& pair : d.pairs) {
    values.push_back(pair.eigenvalue);
    pairs.push_back({{"eigenvalue", pair.eigenvalue}, {"idempotent", to_json(pair.idempotent)}});
  }
  const char* path = d.path == SpectralPath::nondegenerate ? "nondegenerate"
                     : d.path == SpectralPath::doublet     ? "doublet"
                                                           : "triple";
  return json{{"eigenvalues", values}, {"pairs", pairs}, {"path", path}};
}

json to_json(const SpanReport& r) {
  json gap = std::isfinite(r.gap) ? json(r.gap) : json(nullptr);
  return json{{"name", r.name},
              {"rank", r.rank},
              {"gap", gap},
              {"full_rank", r.full_rank},
              {"conclusive", r.conclusive()},
              {"families", r.family_ids},
              {"singular_values", r.singular_values}};
}

json to_json(const DiracStateBundle& s) {
  const BlockMatrix b = s.block();
  const DiracResidual res = dirac_residual(b.p, b.psi);
  return json{{"label", to_string(s.label)},
              {"generation", to_string(s.generation)},
              {"spin", to_string(s.spin)},
              {"theta", {to_json(s.theta[0]), to_json(s.theta[1])}},
              {"xi", to_json(s.xi)},
              {"P", to_json(b.p)},
              {"psi", {to_json(b.psi[0]), to_json(b.psi[1])}},
              {"n", b.n},
              {"residuals",
               {{"dirac", res.residual_norm},
                {"det_P", res.det_p},
                {"star", star_blocks(b).max_abs()}}}};
}

}  // namespace albert
