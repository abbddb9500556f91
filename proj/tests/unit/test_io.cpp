#include <gtest/gtest.h>

#include <albert/io.hpp>
#include <cmath>
#include <limits>

#include "helpers.hpp"

using namespace albert;
using nlohmann::json;
using testing_support::Sampler;

namespace {

json zero8() { return json::array({0, 0, 0, 0, 0, 0, 0, 0}); }

json diag_doc(json diag) {
  return json{{"diag", std::move(diag)}, {"o12", zero8()}, {"o13", zero8()}, {"o23", zero8()}};
}

}  // namespace

TEST(Io, ParsesDiagonal) {
  EXPECT_EQ(parse_matrix(diag_doc({1, 2, 3}).dump()), Hermitian3::diagonal(1, 2, 3));
}

TEST(Io, RoundTripIsBitExact) {
  Sampler s(60);
  for (int n = 0; n < 50; ++n) {
    Hermitian3 m = s.hermitian();
    m.o13[5] = 1.0 / 3.0;
    m.diag[0] = 1e-300;
    const std::string text = serialize_matrix(m);
    const Hermitian3 back = parse_matrix(text);
    EXPECT_EQ(back, m);
    EXPECT_EQ(serialize_matrix(back), text);
  }
}

TEST(Io, RejectsWrongLengths) {
  json doc = diag_doc({1, 2, 3});
  doc["o12"] = json::array({0, 0, 0, 0, 0, 0, 0});
  EXPECT_ALBERT_ERROR(parse_matrix(doc.dump()), Errc::parse_error);
  EXPECT_ALBERT_ERROR(parse_matrix(diag_doc({1, 2}).dump()), Errc::parse_error);
  json missing = diag_doc({1, 2, 3});
  missing.erase("o23");
  EXPECT_ALBERT_ERROR(parse_matrix(missing.dump()), Errc::parse_error);
  EXPECT_ALBERT_ERROR(parse_matrix(diag_doc({1, "2", 3}).dump()), Errc::parse_error);
}

TEST(Io, RejectsNonFinite) {
  EXPECT_ALBERT_ERROR(matrix_from_json(diag_doc({1, std::numeric_limits<double>::quiet_NaN(), 3})),
                      Errc::parse_error);
  json doc = diag_doc({1, 2, 3});
  doc["o13"][2] = std::numeric_limits<double>::infinity();
  EXPECT_ALBERT_ERROR(matrix_from_json(doc), Errc::parse_error);
}

TEST(Io, RejectsMalformedJson) {
  EXPECT_ALBERT_ERROR(parse_matrix("{\"diag\": [1, 2"), Errc::parse_error);
  EXPECT_ALBERT_ERROR(parse_matrix("[1, 2, 3]"), Errc::parse_error);
}

TEST(Io, FullEntriesForm) {
  const Hermitian3 m = Sampler(61).hermitian();
  json rows = json::array();
  for (std::size_t r = 0; r < 3; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < 3; ++c) row.push_back(to_json(m.entry(r, c)));
    rows.push_back(row);
  }
  EXPECT_EQ(matrix_from_json(json{{"entries", rows}}), m);
  rows[1][0][3] = rows[1][0][3].get<double>() + 0.5;
  EXPECT_ALBERT_ERROR(matrix_from_json(json{{"entries", rows}}), Errc::not_hermitian);
}

TEST(Io, DecompositionJson) {
  const json j = to_json(spectral_decompose(Hermitian3::diagonal(1, 2, 3)));
  EXPECT_EQ(j["path"], "nondegenerate");
  ASSERT_EQ(j["eigenvalues"].size(), 3u);
  EXPECT_NEAR(j["eigenvalues"][0].get<double>(), 3.0, 1e-14);
  EXPECT_EQ(j["pairs"][0]["idempotent"]["diag"][2], 1.0);
}
