#include "albert/group.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "albert/error.hpp"

namespace albert {

std::string_view to_string(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::rotation: return "rotation";
    case FamilyKind::boost: return "boost";
    case FamilyKind::phase: return "phase";
    case FamilyKind::g2_class1: return "g2_class1";
    case FamilyKind::g2_class2: return "g2_class2";
    case FamilyKind::g2_class3: return "g2_class3";
    case FamilyKind::nested_flip: return "nested_flip";
  }
  return "unknown";
}

std::string_view to_string(BlockType block) noexcept {
  switch (block) {
    case BlockType::I: return "I";
    case BlockType::II: return "II";
    case BlockType::III: return "III";
    case BlockType::none: return "none";
  }
  return "unknown";
}

namespace {

constexpr std::array<std::string_view, 3> kClass3Pairings = {"ij", "jk", "ki"};
constexpr std::array<BlockType, 3> kBlocks = {BlockType::I, BlockType::II, BlockType::III};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::optional<BlockType> parse_block(std::string_view s) {
  if (s == "I") return BlockType::I;
  if (s == "II") return BlockType::II;
  if (s == "III") return BlockType::III;
  return std::nullopt;
}

// Canonical id: the block suffix is spelled out except for type-I xy
// rotations and phases, the only type those kinds have in the catalog.
std::string canonical_id(const GeneratorFamily& f) {
  std::string id;
  auto block_suffix = [&](bool omit_type_one) {
    if (!(omit_type_one && f.block == BlockType::I)) {
      id += ':';
      id += to_string(f.block);
    }
  };
  switch (f.kind) {
    case FamilyKind::rotation:
      id = "rot:";
      if (f.motion == Motion::xy) {
        id += "xy:" + std::string(unit_name(*f.unit));
        block_suffix(true);
      } else if (f.motion == Motion::yz) {
        id += "yz:" + std::string(unit_name(*f.unit));
        block_suffix(false);
      } else {
        id += "zx";
        block_suffix(false);
      }
      break;
    case FamilyKind::boost:
      id = "boost:";
      if (f.motion == Motion::ty) {
        id += "ty:" + std::string(unit_name(*f.unit));
      } else {
        id += f.motion == Motion::tz ? "tz" : "tx";
      }
      block_suffix(false);
      break;
    case FamilyKind::phase:
      id = "phase:" + std::string(unit_name(*f.unit));
      block_suffix(true);
      break;
    case FamilyKind::g2_class1:
      id = "g2:c1:" + std::string(unit_name(*f.target_unit));
      break;
    case FamilyKind::g2_class2:
      id = "g2:c2:" + std::string(unit_name(*f.target_unit));
      break;
    case FamilyKind::g2_class3:
      id = "g2:c3:" + std::string(kClass3Pairings[static_cast<std::size_t>(f.pairing)]);
      break;
    case FamilyKind::nested_flip:
      id = "nest:" + std::string(unit_name(*f.unit)) + ":" +
           std::string(unit_name(*f.second_unit));
      break;
  }
  return id;
}

GeneratorFamily make(FamilyKind kind, Motion motion, BlockType block,
                     std::optional<Unit> unit = std::nullopt) {
  GeneratorFamily f;
  f.kind = kind;
  f.motion = motion;
  f.block = block;
  f.unit = unit;
  f.id = canonical_id(f);
  return f;
}

GeneratorFamily make_g2(FamilyKind kind, Unit target, int pairing = 0) {
  GeneratorFamily f;
  f.kind = kind;
  f.motion = Motion::automorphism;
  f.target_unit = target;
  f.pairing = pairing;
  f.id = canonical_id(f);
  return f;
}

GeneratorFamily make_flip(Unit u, Unit v) {
  GeneratorFamily f;
  f.kind = FamilyKind::nested_flip;
  f.motion = Motion::flip;
  f.unit = u;
  f.second_unit = v;
  f.id = canonical_id(f);
  return f;
}

[[noreturn]] void unknown(std::string_view id) {
  throw Error(Errc::unknown_family, "unknown family id '" + std::string(id) + "'");
}

std::vector<GeneratorFamily> g2_families() {
  std::vector<GeneratorFamily> out;
  for (Unit u : kUnits) {
    if (u == Unit::l) continue;
    out.push_back(make_g2(FamilyKind::g2_class1, u));
    out.push_back(make_g2(FamilyKind::g2_class2, u));
  }
  out.push_back(make_g2(FamilyKind::g2_class3, Unit::l, 0));
  out.push_back(make_g2(FamilyKind::g2_class3, Unit::l, 1));
  return out;
}

// The nine SO(9,1)-completing rotations and boosts of one block type,
// excluding the xy rotations (type I only in the basis).
void append_block(std::vector<GeneratorFamily>& out, BlockType b, bool with_tz) {
  for (Unit u : kUnits) out.push_back(make(FamilyKind::rotation, Motion::yz, b, u));
  out.push_back(make(FamilyKind::rotation, Motion::zx, b));
  if (with_tz) out.push_back(make(FamilyKind::boost, Motion::tz, b));
  out.push_back(make(FamilyKind::boost, Motion::tx, b));
  for (Unit u : kUnits) out.push_back(make(FamilyKind::boost, Motion::ty, b, u));
}

}  // namespace

GeneratorFamily family_by_id(std::string_view id) {
  const auto parts = split(id, ':');
  auto unit_at = [&](std::size_t n) {
    if (n >= parts.size()) unknown(id);
    const auto u = parse_unit(parts[n]);
    if (!u) unknown(id);
    return *u;
  };
  // Optional trailing block at position n; nothing may follow it.
  auto block_at = [&](std::size_t n) {
    if (parts.size() == n) return BlockType::I;
    if (parts.size() != n + 1) unknown(id);
    const auto b = parse_block(parts[n]);
    if (!b) unknown(id);
    return *b;
  };

  if (parts.size() < 2) unknown(id);
  const std::string_view head = parts[0];
  const std::string_view motion = parts[1];

  if (head == "rot") {
    if (motion == "xy") return make(FamilyKind::rotation, Motion::xy, block_at(3), unit_at(2));
    if (motion == "yz") return make(FamilyKind::rotation, Motion::yz, block_at(3), unit_at(2));
    if (motion == "zx") return make(FamilyKind::rotation, Motion::zx, block_at(2));
  } else if (head == "boost") {
    if (motion == "tz") return make(FamilyKind::boost, Motion::tz, block_at(2));
    if (motion == "tx") return make(FamilyKind::boost, Motion::tx, block_at(2));
    if (motion == "ty") return make(FamilyKind::boost, Motion::ty, block_at(3), unit_at(2));
  } else if (head == "phase") {
    return make(FamilyKind::phase, Motion::phase, block_at(2), unit_at(1));
  } else if (head == "g2" && parts.size() == 3) {
    if (motion == "c1" || motion == "c2") {
      const Unit u = unit_at(2);
      if (u == Unit::l) unknown(id);
      return make_g2(motion == "c1" ? FamilyKind::g2_class1 : FamilyKind::g2_class2, u);
    }
    if (motion == "c3") {
      for (std::size_t n = 0; n < kClass3Pairings.size(); ++n) {
        if (parts[2] == kClass3Pairings[n]) {
          return make_g2(FamilyKind::g2_class3, Unit::l, static_cast<int>(n));
        }
      }
    }
  } else if (head == "nest" && parts.size() == 3) {
    const Unit u = unit_at(1);
    const Unit v = unit_at(2);
    if (u != v) return make_flip(u, v);
  }
  unknown(id);
}

const std::vector<GeneratorFamily>& catalog() {
  static const std::vector<GeneratorFamily> families = [] {
    std::vector<GeneratorFamily> out = g2_families();
    for (Unit u : kUnits) out.push_back(make(FamilyKind::rotation, Motion::xy, BlockType::I, u));
    for (Unit u : kUnits) out.push_back(make(FamilyKind::phase, Motion::phase, BlockType::I, u));
    // The type-III tz boost is the redundant one.
    for (BlockType b : kBlocks) append_block(out, b, b != BlockType::III);
    return out;
  }();
  return families;
}

std::vector<GeneratorFamily> so8_families(BlockType block) {
  std::vector<GeneratorFamily> out = g2_families();
  for (Unit u : kUnits) out.push_back(make(FamilyKind::rotation, Motion::xy, block, u));
  for (Unit u : kUnits) out.push_back(make(FamilyKind::phase, Motion::phase, block, u));
  return out;
}

std::vector<GeneratorFamily> naive_families() {
  std::vector<GeneratorFamily> out;
  for (BlockType b : kBlocks) {
    auto so8 = so8_families(b);
    out.insert(out.end(), so8.begin(), so8.end());
    append_block(out, b, true);
  }
  return out;
}

std::vector<GeneratorFamily> flip_families() {
  std::vector<GeneratorFamily> out;
  for (std::size_t a = 0; a < kUnits.size(); ++a) {
    for (std::size_t b = a + 1; b < kUnits.size(); ++b) {
      out.push_back(make_flip(kUnits[a], kUnits[b]));
    }
  }
  return out;
}

std::vector<std::pair<Unit, Unit>> pairs_pointing_to(Unit target) {
  std::vector<std::pair<Unit, Unit>> out;
  for (Unit p : kUnits) {
    for (Unit q : kUnits) {
      const SignedBasis e = kStructure[slot(p)][slot(q)];
      if (e.index == slot(target) && e.sign > 0 && slot(p) != slot(target) &&
          slot(q) != slot(target)) {
        // Each unordered pair appears once with p q = +target.
        out.emplace_back(p, q);
      }
    }
  }
  // Order by the first element so that the rotation sense is reproducible.
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return slot(a.first) < slot(b.first); });
  return out;
}

std::vector<PlaneRotation> g2_planes(FamilyKind cls, Unit target, int pairing) {
  if (cls == FamilyKind::g2_class3) {
    if (target != Unit::l || pairing < 0 || pairing > 2) {
      throw Error(Errc::invalid_g2_target, "class-3 G2 elements point to l");
    }
    // Planes {il, i}, {jl, j}, {kl, k}, each with product l.
    constexpr std::array<std::pair<Unit, Unit>, 3> planes = {
        std::pair{Unit::il, Unit::i}, std::pair{Unit::jl, Unit::j},
        std::pair{Unit::kl, Unit::k}};
    const auto& first = planes[static_cast<std::size_t>(pairing)];
    const auto& second = planes[static_cast<std::size_t>((pairing + 1) % 3)];
    return {{first.first, first.second, 1.0}, {second.first, second.second, -1.0}};
  }
  if ((cls != FamilyKind::g2_class1 && cls != FamilyKind::g2_class2) || target == Unit::l) {
    throw Error(Errc::invalid_g2_target, "class-1/2 G2 elements point to a unit other than l");
  }
  std::vector<std::pair<Unit, Unit>> free_planes;
  std::pair<Unit, Unit> l_plane{};
  for (const auto& pq : pairs_pointing_to(target)) {
    if (pq.first == Unit::l || pq.second == Unit::l) {
      l_plane = pq;
    } else {
      free_planes.push_back(pq);
    }
  }
  if (cls == FamilyKind::g2_class1) {
    return {{free_planes[0].first, free_planes[0].second, 1.0},
            {free_planes[1].first, free_planes[1].second, -1.0}};
  }
  return {{free_planes[0].first, free_planes[0].second, 1.0},
          {free_planes[1].first, free_planes[1].second, 1.0},
          {l_plane.first, l_plane.second, -2.0}};
}

Octonion G2Element::apply(const Octonion& x) const {
  Octonion y = x;
  for (const PlaneRotation& r : g2_planes(cls, target, pairing)) {
    // p -> p cos + q sin, q -> q cos - p sin
    const double c = std::cos(r.weight * alpha);
    const double s = std::sin(r.weight * alpha);
    const double xp = x[slot(r.p)];
    const double xq = x[slot(r.q)];
    y[slot(r.p)] = c * xp - s * xq;
    y[slot(r.q)] = s * xp + c * xq;
  }
  return y;
}

Octonion g2_apply(int cls, Unit target, double alpha, const Octonion& x, int pairing) {
  if (cls < 1 || cls > 3) throw Error(Errc::invalid_g2_target, "G2 class must be 1, 2 or 3");
  constexpr std::array<FamilyKind, 3> kinds = {FamilyKind::g2_class1, FamilyKind::g2_class2,
                                               FamilyKind::g2_class3};
  return G2Element{kinds[static_cast<std::size_t>(cls - 1)], target, pairing, alpha}.apply(x);
}

ApplicationMode MatrixTransform::mode() const noexcept {
  if (std::holds_alternative<Single>(mode_)) return ApplicationMode::single;
  if (std::holds_alternative<Nested>(mode_)) return ApplicationMode::nested;
  return ApplicationMode::entrywise_automorphism;
}

const OctMatrix3& MatrixTransform::matrix() const {
  if (const auto* s = std::get_if<Single>(&mode_)) return s->m;
  throw Error(Errc::requires_nesting, "transform is not a single matrix");
}

namespace {

// Type-I matrix placed on the block of the given type by cyclic relabeling.
OctMatrix3 relabel(const OctMatrix3& m, BlockType block) {
  std::size_t shift = 0;
  if (block == BlockType::II) shift = 1;
  if (block == BlockType::III) shift = 2;
  OctMatrix3 out{};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) out[(r + shift) % 3][(c + shift) % 3] = m[r][c];
  }
  return out;
}

OctMatrix3 block2(const Octonion& a, const Octonion& b, const Octonion& c,
                  const Octonion& d) {
  OctMatrix3 m{};
  m[0][0] = a;
  m[0][1] = b;
  m[1][0] = c;
  m[1][1] = d;
  m[2][2] = Octonion(1.0);
  return m;
}

OctMatrix3 diag3(const Octonion& a, const Octonion& b, const Octonion& c) {
  OctMatrix3 m{};
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  return m;
}

Octonion exp_axis(Unit u, double theta) { return exp_unit(Octonion::unit(u), theta); }

}  // namespace

OctMatrix3 single_matrix(const GeneratorFamily& f, double param) {
  if (f.is_g2() || f.kind == FamilyKind::nested_flip) {
    throw Error(Errc::requires_nesting,
                "family '" + f.id + "' has no single-matrix form");
  }
  const double h = 0.5 * param;
  OctMatrix3 m{};
  switch (f.motion) {
    case Motion::xy:
      m = diag3(exp_axis(*f.unit, -h), exp_axis(*f.unit, h), Octonion(1.0));
      break;
    case Motion::yz: {
      const Octonion off = -std::sin(h) * Octonion::unit(*f.unit);
      m = block2(std::cos(h), off, off, std::cos(h));
      break;
    }
    case Motion::zx:
      m = block2(std::cos(h), -std::sin(h), std::sin(h), std::cos(h));
      break;
    case Motion::tz:
      m = diag3(std::exp(h), std::exp(-h), Octonion(1.0));
      break;
    case Motion::tx:
      m = block2(std::cosh(h), std::sinh(h), std::sinh(h), std::cosh(h));
      break;
    case Motion::ty: {
      const Octonion u = std::sinh(h) * Octonion::unit(*f.unit);
      m = block2(std::cosh(h), -u, u, std::cosh(h));
      break;
    }
    case Motion::phase:
      m = diag3(exp_axis(*f.unit, h), exp_axis(*f.unit, h), exp_axis(*f.unit, -param));
      break;
    case Motion::automorphism:
    case Motion::flip:
      break;
  }
  return relabel(m, f.block);
}

MatrixTransform build_transform(const GeneratorFamily& f, double param) {
  if (f.is_g2()) {
    return MatrixTransform(
        MatrixTransform::Entrywise{G2Element{f.kind, *f.target_unit, f.pairing, param}});
  }
  if (f.kind == FamilyKind::nested_flip) {
    const Octonion u = Octonion::unit(*f.unit);
    const Octonion p = std::cos(0.5 * param) * u +
                       std::sin(0.5 * param) * Octonion::unit(*f.second_unit);
    return MatrixTransform(MatrixTransform::Nested{diag3(-u, -u, Octonion(1.0)),
                                                   diag3(p, p, Octonion(1.0))});
  }
  return MatrixTransform(MatrixTransform::Single{single_matrix(f, param)});
}

namespace {

Hermitian3 conjugate_by(const OctMatrix3& m, const Hermitian3& x) {
  const OctMatrix3 y = matmul(matmul(m, x.full()), adjoint(m));
  return Hermitian3::from_full(y, kHermiticityTolerance * (1.0 + max_abs(x)) *
                                      (1.0 + max_abs(y[0][0]) + max_abs(y[1][1]) +
                                       max_abs(y[2][2])));
}

}  // namespace

Hermitian3 apply(const MatrixTransform& t, const Hermitian3& x) {
  return std::visit(
      [&](const auto& mode) -> Hermitian3 {
        using T = std::decay_t<decltype(mode)>;
        if constexpr (std::is_same_v<T, MatrixTransform::Single>) {
          return conjugate_by(mode.m, x);
        } else if constexpr (std::is_same_v<T, MatrixTransform::Nested>) {
          return conjugate_by(mode.outer, conjugate_by(mode.inner, x));
        } else {
          Hermitian3 y = x;
          y.o12 = mode.g.apply(x.o12);
          y.o13 = mode.g.apply(x.o13);
          y.o23 = mode.g.apply(x.o23);
          return y;
        }
      },
      t.data());
}

Hermitian3 nested_apply(const MatrixTransform& outer, const MatrixTransform& inner,
                        const Hermitian3& x) {
  return apply(outer, apply(inner, x));
}

Hermitian3 act(const GeneratorFamily& f, double param, const Hermitian3& x) {
  return apply(build_transform(f, param), x);
}

Octonion inner_automorphism(const Octonion& a, const Octonion& x) {
  const auto ni = norm_inverse(a);
  if (!ni.inverse) throw Error(Errc::zero_conjugator, "conjugator must be nonzero");
  return (a * x) * *ni.inverse;
}

ConjugatorCheck is_valid_conjugator(const Octonion& a, double tol) {
  const auto ni = norm_inverse(a);
  if (!ni.inverse) throw Error(Errc::zero_conjugator, "conjugator must be nonzero");
  const Octonion inv = *ni.inverse;
  auto conj_by = [&](const Octonion& x) { return (a * x) * inv; };

  ConjugatorCheck check;
  for (std::size_t p = 0; p < kOctonionDim; ++p) {
    Octonion x;
    x[p] = 1.0;
    for (std::size_t q = 0; q < kOctonionDim; ++q) {
      Octonion y;
      y[q] = 1.0;
      const double r = (conj_by(x) * conj_by(y) - conj_by(x * y)).norm();
      if (r > check.residual) {
        check.residual = r;
        check.witness_x = p;
        check.witness_y = q;
      }
    }
  }
  check.valid = check.residual <= tol;
  return check;
}

}  // namespace albert
