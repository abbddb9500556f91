#include <gtest/gtest.h>

#include <albert/group.hpp>
#include <albert/jordan.hpp>
#include <albert/lie_rank.hpp>
#include <cmath>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace albert;
using testing_support::Sampler;

namespace {

// Coordinates: diag 0..2, o12 3..10, o13 11..18, o23 19..26.
constexpr std::size_t kO13 = 11, kO23 = 19;

}  // namespace

TEST(Tangent, TzBoostIsDiagonalScaling) {
  const TangentOperator t = tangent(family_by_id("boost:tz"));
  for (std::size_t r = 0; r < 27; ++r) {
    for (std::size_t c = 0; c < 27; ++c) {
      double expected = 0.0;
      if (r == c) {
        if (r == 0) expected = 1.0;
        if (r == 1) expected = -1.0;
        if (r >= kO13 && r < kO23) expected = 0.5;
        if (r >= kO23) expected = -0.5;
      }
      EXPECT_NEAR(t.at(r, c), expected, 1e-9) << r << ", " << c;
    }
  }
  // d/db of e^b * 2e^{-b} * 3 at 0 vanishes.
  EXPECT_NEAR(det_derivative(t, Hermitian3::diagonal(1, 2, 3)), 0.0, 1e-9);
}

TEST(Tangent, RotationFixesIdentity) {
  for (const char* id : {"rot:xy:l", "rot:yz:k", "rot:zx", "phase:jl", "g2:c1:i"}) {
    const TangentOperator t = tangent(family_by_id(id));
    const auto v = t.apply(Hermitian3::identity()).to_vector();
    for (double x : v) EXPECT_NEAR(x, 0.0, 1e-10) << id;
    EXPECT_LT(trace_drift(t), 1e-9) << id;
  }
  EXPECT_GT(trace_drift(tangent(family_by_id("boost:ty:il"))), 0.5);
}

TEST(Tangent, MatchesFiniteDifferenceOfAction) {
  Sampler s(40);
  for (const auto& f : catalog()) {
    const TangentOperator t = tangent(f);
    const Hermitian3 x = s.hermitian();
    const double h = 1e-4;
    const auto plus = act(f, h, x).to_vector();
    const auto minus = act(f, -h, x).to_vector();
    const auto v = t.apply(x).to_vector();
    for (std::size_t n = 0; n < 27; ++n) {
      EXPECT_NEAR(v[n], (plus[n] - minus[n]) / (2 * h), 1e-6) << f.id;
    }
  }
}

TEST(Tangent, DeterminantGradientAnnihilated) {
  Sampler s(41);
  std::vector<GeneratorFamily> all = naive_families();
  for (const auto& f : flip_families()) all.push_back(f);
  for (const auto& f : all) {
    const TangentOperator t = tangent(f);
    for (int n = 0; n < 20; ++n) {
      const Hermitian3 x = s.hermitian();
      const double scale = std::pow(frobenius(x), 3);
      EXPECT_LE(std::abs(det_derivative(t, x)), 1e-7 * scale) << f.id;
    }
  }
}

TEST(Tangent, DetDerivativeMatchesFiniteDifferenceOracle) {
  // Along a non-preserving direction the formula must agree with a plain
  // difference quotient of the closed-form determinant.
  Sampler s(42);
  const Hermitian3 x = s.hermitian();
  const Hermitian3 y = s.hermitian();
  TangentOperator t;
  t.family_id = "translation";
  const auto yv = y.to_vector();
  // T(X) = tr(X) Y is linear; at X with tr X = 1 it points along Y.
  for (std::size_t r = 0; r < 27; ++r) {
    for (std::size_t c = 0; c < 3; ++c) t.matrix[r * 27 + c] = yv[r];
  }
  const Hermitian3 x1 = (1.0 / x.trace()) * x;
  const double h = 1e-6;
  const double fd = (oracle::det(x1 + h * y) - oracle::det(x1 - h * y)) / (2 * h);
  EXPECT_NEAR(det_derivative(t, x1), fd, 1e-6 * std::max(1.0, std::abs(fd)));
}

TEST(SpanRank, SingleFamily) {
  const std::vector<TangentOperator> one = {tangent(family_by_id("rot:xy:l"))};
  const SpanReport r = span_rank("single", one);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_TRUE(r.full_rank);
  EXPECT_TRUE(r.conclusive());
}

TEST(SpanRank, DuplicateDirectionsCollapse) {
  const auto f = family_by_id("boost:tz");
  const std::vector<TangentOperator> two = {tangent(f), tangent(f)};
  const SpanReport r = span_rank("dup", two);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_FALSE(r.full_rank);
  EXPECT_GE(r.gap, 1e3);
}

TEST(SpanRank, EmptyRejected) {
  EXPECT_ALBERT_ERROR(span_rank("empty", std::span<const TangentOperator>{}), Errc::empty_span);
}

TEST(SpanRank, SubgroupDimensions) {
  const std::map<std::string, std::size_t> expected = {
      {"E6", 78}, {"F4", 52}, {"boosts", 26}, {"G2", 14}, {"SU3", 8}, {"SO8", 28}, {"SO7", 21}};
  const auto checks = subgroup_dimensions();
  ASSERT_EQ(checks.size(), expected.size());
  for (const auto& c : checks) {
    EXPECT_EQ(c.report.rank, expected.at(c.report.name)) << c.report.name;
    EXPECT_GE(c.report.gap, 1e3) << c.report.name;
    EXPECT_TRUE(c.ok());
  }
}

TEST(SpanRank, TrialityAndNaiveSpan) {
  const DimensionCheck tri = triality_check();
  EXPECT_EQ(tri.report.rank, 28u);
  EXPECT_EQ(tri.report.family_ids.size(), 84u);
  EXPECT_TRUE(tri.ok());

  const DimensionCheck naive = naive_span_check();
  EXPECT_EQ(naive.report.family_ids.size(), 135u);
  EXPECT_EQ(naive.report.rank, 78u);
  EXPECT_TRUE(naive.ok());

  std::vector<GeneratorFamily> pair = so8_families(BlockType::I);
  for (const auto& f : so8_families(BlockType::II)) pair.push_back(f);
  EXPECT_EQ(span_rank("I+II", tangents(pair)).rank, 28u);
  EXPECT_EQ(span_rank("I", tangents(so8_families(BlockType::I))).rank, 28u);
}

TEST(SpanRank, NestedFlipsSpanSo7) {
  for (const auto& c : flip_span_checks()) {
    EXPECT_EQ(c.report.rank, 21u) << c.report.name;
    EXPECT_TRUE(c.ok()) << c.report.name;
  }
}
