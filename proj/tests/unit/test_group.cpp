#include <gtest/gtest.h>

#include <albert/group.hpp>
#include <albert/jordan.hpp>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace albert;
using testing_support::Sampler;
using testing_support::u;

namespace {

constexpr double kPi = std::numbers::pi;

// Oracle for single-matrix families: (M X) M^dagger by explicit loops.
oracle::Mat conjugate(const OctMatrix3& m, const Hermitian3& x) {
  oracle::Mat om{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) om[r][c] = m[r][c];
  return oracle::matmul(oracle::matmul(om, oracle::full(x)), oracle::adjoint(om));
}

double rel_det_change(const Hermitian3& before, const Hermitian3& after) {
  const double d = oracle::det(before);
  return std::abs(oracle::det(after) - d) / std::max(1.0, std::abs(d));
}

}  // namespace

TEST(Catalog, CountsByKind) {
  const auto& cat = catalog();
  ASSERT_EQ(cat.size(), 78u);
  std::map<std::string, int> counts;
  std::set<std::string> ids;
  for (const auto& f : cat) {
    ids.insert(f.id);
    if (f.is_g2()) {
      ++counts["g2"];
    } else if (f.kind == FamilyKind::phase) {
      ++counts["phase"];
    } else if (f.kind == FamilyKind::boost) {
      ++counts["boost"];
    } else if (f.motion == Motion::xy) {
      ++counts["xy"];
    } else {
      ++counts["so9"];
    }
  }
  EXPECT_EQ(ids.size(), 78u);
  EXPECT_EQ(counts["g2"], 14);
  EXPECT_EQ(counts["xy"], 7);
  EXPECT_EQ(counts["phase"], 7);
  EXPECT_EQ(counts["so9"], 24);
  EXPECT_EQ(counts["boost"], 26);
  EXPECT_EQ(std::count_if(cat.begin(), cat.end(), [](const auto& f) { return f.is_rotation_like(); }),
            52);
  EXPECT_EQ(naive_families().size(), 135u);
  EXPECT_EQ(flip_families().size(), 21u);
  EXPECT_EQ(so8_families(BlockType::II).size(), 28u);
}

TEST(Catalog, RedundantBoostIsTypeThreeTz) {
  const auto& cat = catalog();
  auto has = [&](std::string_view id) {
    return std::any_of(cat.begin(), cat.end(), [&](const auto& f) { return f.id == id; });
  };
  EXPECT_TRUE(has("boost:tz:I"));
  EXPECT_TRUE(has("boost:tz:II"));
  EXPECT_FALSE(has("boost:tz:III"));
}

TEST(Catalog, IdsRoundTrip) {
  for (const auto& f : catalog()) EXPECT_EQ(family_by_id(f.id).id, f.id);
  for (const auto& f : naive_families()) EXPECT_EQ(family_by_id(f.id).id, f.id);
  for (const auto& f : flip_families()) EXPECT_EQ(family_by_id(f.id).id, f.id);
  EXPECT_EQ(family_by_id("boost:tz:I").id, family_by_id("boost:tz").id);
  for (const char* bad : {"", "rot", "rot:xy", "rot:xy:m", "rot:xy:l:IV", "g2:c1:l", "g2:c3:ik",
                          "nest:i:i", "boost:tz:l", "phase", "spin:xy:l"}) {
    EXPECT_ALBERT_ERROR(family_by_id(bad), Errc::unknown_family);
  }
}

TEST(Transforms, PrintedMatrices) {
  const double t = 0.8;
  const OctMatrix3 rz = single_matrix(family_by_id("rot:xy:l"), t);
  EXPECT_LT((rz[0][0] - exp_unit(-u(Unit::l), t / 2)).norm(), 1e-15);
  EXPECT_LT((rz[1][1] - exp_unit(u(Unit::l), t / 2)).norm(), 1e-15);
  EXPECT_EQ(rz[2][2], Octonion(1.0));
  EXPECT_EQ(rz[0][1], Octonion());

  const OctMatrix3 tz = single_matrix(family_by_id("boost:tz:I"), t);
  EXPECT_DOUBLE_EQ(tz[0][0][0], std::exp(t / 2));
  EXPECT_DOUBLE_EQ(tz[1][1][0], std::exp(-t / 2));

  const OctMatrix3 ph = single_matrix(family_by_id("phase:l"), t);
  EXPECT_LT((ph[0][0] - exp_unit(u(Unit::l), t / 2)).norm(), 1e-15);
  EXPECT_LT((ph[1][1] - exp_unit(u(Unit::l), t / 2)).norm(), 1e-15);
  EXPECT_LT((ph[2][2] - exp_unit(u(Unit::l), -t)).norm(), 1e-15);

  EXPECT_ALBERT_ERROR(single_matrix(family_by_id("g2:c2:kl"), t), Errc::requires_nesting);
  EXPECT_ALBERT_ERROR(build_transform(family_by_id("g2:c2:kl"), t).matrix(),
                      Errc::requires_nesting);
  EXPECT_EQ(build_transform(family_by_id("g2:c2:kl"), t).mode(),
            ApplicationMode::entrywise_automorphism);
  EXPECT_EQ(build_transform(family_by_id("nest:i:j"), t).mode(), ApplicationMode::nested);
}

TEST(Transforms, BlockTypesAreCyclicRelabelings) {
  const OctMatrix3 one = single_matrix(family_by_id("boost:ty:j"), 0.6);
  const OctMatrix3 two = single_matrix(family_by_id("boost:ty:j:II"), 0.6);
  const OctMatrix3 three = single_matrix(family_by_id("boost:ty:j:III"), 0.6);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_EQ(two[(r + 1) % 3][(c + 1) % 3], one[r][c]);
      EXPECT_EQ(three[(r + 2) % 3][(c + 2) % 3], one[r][c]);
    }
  }
}

TEST(Transforms, ZxRotationExample) {
  const Hermitian3 r = act(family_by_id("rot:zx"), kPi / 2, Hermitian3::diagonal(1, 2, 3));
  Hermitian3 expected = Hermitian3::diagonal(1.5, 1.5, 3);
  expected.o12 = Octonion(-0.5);
  EXPECT_LT(max_abs(r - expected), 1e-15);
  EXPECT_NEAR(det(r), 6.0, 1e-14);
}

TEST(Transforms, TzBoostExample) {
  const double b = 0.9;
  const Hermitian3 r = act(family_by_id("boost:tz"), b, Hermitian3::diagonal(1, 2, 3));
  EXPECT_LT(max_abs(r - Hermitian3::diagonal(std::exp(b), 2 * std::exp(-b), 3)), 1e-14);
  EXPECT_NEAR(det(r), 6.0, 1e-14);
}

TEST(Transforms, IdentityAtZero) {
  Sampler s(20);
  const Hermitian3 x = s.hermitian();
  for (const auto& f : catalog()) EXPECT_LT(max_abs(act(f, 0.0, x) - x), 1e-15) << f.id;
  for (const auto& f : flip_families()) EXPECT_LT(max_abs(act(f, 0.0, x) - x), 1e-15) << f.id;
}

TEST(Transforms, SingleActionMatchesOracle) {
  Sampler s(21);
  for (const auto& f : naive_families()) {
    if (f.is_g2()) continue;
    const double p = s.uniform(-2, 2);
    const Hermitian3 x = s.hermitian();
    EXPECT_LT(oracle::distance(conjugate(single_matrix(f, p), x), act(f, p, x)), 1e-13) << f.id;
  }
}

TEST(Transforms, EveryFamilyPreservesDeterminant) {
  Sampler s(22);
  std::vector<GeneratorFamily> all = naive_families();
  for (const auto& f : flip_families()) all.push_back(f);
  for (const auto& f : all) {
    for (double p : {0.1, -0.1, 0.7, -0.7, 2.3, -2.3, s.uniform(-3, 3)}) {
      const Hermitian3 x = s.hermitian();
      EXPECT_LE(rel_det_change(x, act(f, p, x)), 1e-10) << f.id << " at " << p;
    }
  }
}

TEST(Transforms, RotationsPreserveTraceBoostsDoNot) {
  Sampler s(23);
  const Hermitian3 x = s.hermitian();
  for (const auto& f : catalog()) {
    const double change = std::abs(act(f, 0.7, x).trace() - x.trace());
    if (f.is_rotation_like()) {
      EXPECT_LT(change, 1e-14) << f.id;
    }
  }
  EXPECT_GT(std::abs(act(family_by_id("boost:tx"), 0.7, x).trace() - x.trace()), 1e-3);
}

TEST(Transforms, PreservesRankOneCondition) {
  Sampler s(24);
  Hermitian3 v = Hermitian3::unit_diagonal(0);
  for (const auto& f : catalog()) {
    const Hermitian3 g = act(f, s.uniform(-2, 2), v);
    EXPECT_LT(std::abs(oracle::sigma(g)) / std::max(1.0, std::pow(frobenius(g), 2)), 1e-12)
        << f.id;
  }
}

TEST(Nesting, FlipWithPrintedInnerMatrixPreservesDeterminant) {
  // M1 = diag(l, l, 1), M2 = diag(p, p, 1), p = cos(t/2) l + sin(t/2) i.
  Sampler s(25);
  for (int n = 0; n < 20; ++n) {
    const double t = s.uniform(-kPi, kPi);
    OctMatrix3 inner = identity_matrix3(), outer = identity_matrix3();
    inner[0][0] = inner[1][1] = u(Unit::l);
    outer[0][0] = outer[1][1] = std::cos(t / 2) * u(Unit::l) + std::sin(t / 2) * u(Unit::i);
    const Hermitian3 x = s.hermitian();
    const Hermitian3 r = nested_apply(MatrixTransform(MatrixTransform::Single{outer}),
                                      MatrixTransform(MatrixTransform::Single{inner}), x);
    EXPECT_LE(rel_det_change(x, r), 1e-10);
  }
}

TEST(Nesting, IdentityPair) {
  Sampler s(26);
  const Hermitian3 x = s.hermitian();
  EXPECT_LT(max_abs(nested_apply(MatrixTransform(), MatrixTransform(), x) - x), 1e-16);
}

TEST(Nesting, ParenthesesCannotBeMoved) {
  Sampler s(27);
  OctMatrix3 inner = identity_matrix3(), outer = identity_matrix3();
  inner[0][0] = inner[1][1] = u(Unit::l);
  outer[0][0] = outer[1][1] = std::cos(0.4) * u(Unit::l) + std::sin(0.4) * u(Unit::i);
  const Hermitian3 x = s.hermitian();
  const Hermitian3 nested = nested_apply(MatrixTransform(MatrixTransform::Single{outer}),
                                         MatrixTransform(MatrixTransform::Single{inner}), x);
  const oracle::Mat flattened = conjugate(matmul(outer, inner), x);
  EXPECT_GT(oracle::distance(flattened, nested), 1e-3);
}

TEST(G2, PrintedPlaneRotations) {
  const double a = 0.3, c = std::cos(a), s = std::sin(a);
  // Class 1 to kl: {j, il} by a, {jl, i} by -a, kl fixed.
  EXPECT_LT((g2_apply(1, Unit::kl, a, u(Unit::j)) - (c * u(Unit::j) + s * u(Unit::il))).norm(),
            1e-15);
  EXPECT_LT((g2_apply(1, Unit::kl, a, u(Unit::jl)) - (c * u(Unit::jl) - s * u(Unit::i))).norm(),
            1e-15);
  EXPECT_EQ(g2_apply(1, Unit::kl, a, u(Unit::kl)), u(Unit::kl));
  // Class 2 to kl: both planes by a, {k, l} by -2a.
  EXPECT_LT((g2_apply(2, Unit::kl, a, u(Unit::jl)) - (c * u(Unit::jl) + s * u(Unit::i))).norm(),
            1e-15);
  EXPECT_LT((g2_apply(2, Unit::kl, a, u(Unit::k)) -
             (std::cos(2 * a) * u(Unit::k) - std::sin(2 * a) * u(Unit::l)))
                .norm(),
            1e-15);
  // Class 3: {il, i} by a, {jl, j} by -a, l fixed.
  EXPECT_LT((g2_apply(3, Unit::l, a, u(Unit::il)) - (c * u(Unit::il) + s * u(Unit::i))).norm(),
            1e-15);
  EXPECT_LT((g2_apply(3, Unit::l, a, u(Unit::jl)) - (c * u(Unit::jl) - s * u(Unit::j))).norm(),
            1e-15);
  EXPECT_EQ(g2_apply(3, Unit::l, a, u(Unit::l)), u(Unit::l));
  EXPECT_ALBERT_ERROR(g2_planes(FamilyKind::g2_class1, Unit::l), Errc::invalid_g2_target);
}

TEST(G2, PlanesPointToTarget) {
  for (Unit t : kUnits) {
    const auto pairs = pairs_pointing_to(t);
    ASSERT_EQ(pairs.size(), 3u);
    for (const auto& [p, q] : pairs) EXPECT_EQ(u(p) * u(q), u(t));
  }
}

TEST(G2, AutomorphismOnUnitsAndRandomPairs) {
  Sampler s(28);
  for (const auto& f : catalog()) {
    if (!f.is_g2()) continue;
    const G2Element g{f.kind, *f.target_unit, f.pairing, s.uniform(-3, 3)};
    for (Unit x : kUnits) {
      for (Unit y : kUnits) {
        EXPECT_LT(oracle::dist(g.apply(oracle::mul(u(x), u(y))),
                               oracle::mul(g.apply(u(x)), g.apply(u(y)))),
                  1e-12)
            << f.id;
      }
    }
    const Octonion x = s.octonion(), y = s.octonion();
    EXPECT_LT(oracle::dist(g.apply(x * y), g.apply(x) * g.apply(y)), 1e-13) << f.id;
    EXPECT_EQ(g.apply(Octonion(1.0)), Octonion(1.0));
    const double l_shift = (g.apply(u(Unit::l)) - u(Unit::l)).norm();
    if (f.kind == FamilyKind::g2_class2) {
      EXPECT_GT(l_shift, 1e-6) << f.id;
    } else {
      EXPECT_LT(l_shift, 1e-15) << f.id;
    }
  }
}

TEST(G2, EntrywiseActionPreservesJordanProduct) {
  Sampler s(29);
  const GeneratorFamily f = family_by_id("g2:c2:j");
  const Hermitian3 a = s.hermitian(), b = s.hermitian();
  const double t = 1.1;
  EXPECT_LT(max_abs(act(f, t, jordan_product(a, b)) - jordan_product(act(f, t, a), act(f, t, b))),
            1e-14);
}

TEST(InnerAutomorphism, SixthRoots) {
  for (int n = 0; n < 6; ++n) {
    const ConjugatorCheck c = is_valid_conjugator(exp_unit(u(Unit::i), n * kPi / 3));
    EXPECT_TRUE(c.valid) << n;
    EXPECT_LE(c.residual, 1e-12);
  }
  Sampler s(30);
  const Octonion x = s.octonion();
  EXPECT_LT((inner_automorphism(Octonion(1.0), x) - x).norm(), 1e-16);
}

TEST(InnerAutomorphism, EighthRootFails) {
  const Octonion a = exp_unit(u(Unit::i), kPi / 4);
  const ConjugatorCheck c = is_valid_conjugator(a);
  EXPECT_FALSE(c.valid);
  EXPECT_GT(c.residual, 0.1);
  // The pair (j, l) is a witness.
  auto conj_by = [&](const Octonion& x) { return inner_automorphism(a, x); };
  const Octonion lhs = conj_by(u(Unit::j)) * conj_by(u(Unit::l));
  const Octonion rhs = conj_by(u(Unit::j) * u(Unit::l));
  EXPECT_GT((lhs - rhs).norm(), 0.1);
  EXPECT_ALBERT_ERROR(inner_automorphism(Octonion(), u(Unit::i)), Errc::zero_conjugator);
}
