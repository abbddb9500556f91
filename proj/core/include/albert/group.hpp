#pragma once

// Generator catalog of E6 = SL(3,O) acting on H3(O) by X -> M X M^dagger,
// together with the G2 automorphism classes and inner automorphisms.
//
// Family id grammar (block suffix defaults to I when omitted):
//
//   rot:xy:<u>[:<B>]     diag(e^{-u t/2}, e^{u t/2}, 1)
//   rot:yz:<u>[:<B>]     [[cos t/2, -u sin t/2], [-u sin t/2, cos t/2]]
//   rot:zx[:<B>]         [[cos t/2, -sin t/2], [sin t/2, cos t/2]]
//   boost:tz[:<B>]       diag(e^{b/2}, e^{-b/2}, 1)
//   boost:tx[:<B>]       [[cosh b/2, sinh b/2], [sinh b/2, cosh b/2]]
//   boost:ty:<u>[:<B>]   [[cosh b/2, -u sinh b/2], [u sinh b/2, cosh b/2]]
//   phase:<u>[:<B>]      diag(e^{u t/2}, e^{u t/2}, e^{-u t})
//   g2:c1:<u>            u != l, rotates the two l-free planes pointing to u by +-a
//   g2:c2:<u>            u != l, those two planes by a, the l-plane by -2a
//   g2:c3:<pq>           pq in {ij, jk, ki}: planes {pl,p} by a, {ql,q} by -a
//   nest:<u>:<v>         flip pair diag(p,p,1) (diag(-u,-u,1) X ...) with
//                        p = cos(t/2) u + sin(t/2) v
//
// <u> is one of i j k kl jl il l and <B> one of I II III. Block types II and
// III are the cyclic relabelings (1,2,3) -> (2,3,1) -> (3,1,2) of type I.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "albert/hermitian.hpp"
#include "albert/octonion.hpp"

namespace albert {

enum class FamilyKind { rotation, boost, phase, g2_class1, g2_class2, g2_class3, nested_flip };
enum class BlockType { I, II, III, none };
enum class Motion { xy, yz, zx, tz, tx, ty, phase, automorphism, flip };

std::string_view to_string(FamilyKind kind) noexcept;
std::string_view to_string(BlockType block) noexcept;

struct GeneratorFamily {
  std::string id;
  FamilyKind kind = FamilyKind::rotation;
  Motion motion = Motion::xy;
  BlockType block = BlockType::none;
  std::optional<Unit> unit;         // the imaginary unit replacing l
  std::optional<Unit> target_unit;  // G2: the unit pointed to
  int pairing = 0;                  // g2:c3 pairing (0: ij, 1: jk, 2: ki)
  std::optional<Unit> second_unit;  // nest:<u>:<v>

  bool is_g2() const noexcept {
    return kind == FamilyKind::g2_class1 || kind == FamilyKind::g2_class2 ||
           kind == FamilyKind::g2_class3;
  }
  /// Rotations, phases and G2 preserve the trace; boosts do not.
  bool is_rotation_like() const noexcept { return kind != FamilyKind::boost; }
  /// Acts through the preferred 2x2 block as (M 0; 0 1).
  bool is_type_one() const noexcept {
    return block == BlockType::I &&
           (kind == FamilyKind::rotation || kind == FamilyKind::boost);
  }
};

/// Resolve a family id (see grammar above). Throws Error(unknown_family).
GeneratorFamily family_by_id(std::string_view id);

/// The 78 basis families of E6.
const std::vector<GeneratorFamily>& catalog();

/// The 3 x 45 families before identifying the triality copies and the
/// redundant tz boost.
std::vector<GeneratorFamily> naive_families();

/// SO(8) set of one block type: 14 G2 + 7 xy rotations + 7 phases.
std::vector<GeneratorFamily> so8_families(BlockType block);

/// The 21 nested flip pairs nest:<u>:<v>, u before v in basis order.
std::vector<GeneratorFamily> flip_families();

/// An octonion automorphism from one of the three G2 classes.
struct G2Element {
  FamilyKind cls = FamilyKind::g2_class1;
  Unit target = Unit::kl;
  int pairing = 0;
  double alpha = 0.0;

  Octonion apply(const Octonion& x) const;
};

/// Oriented plane (p, q) with p q = target, with its angle multiplier.
struct PlaneRotation {
  Unit p;
  Unit q;
  double weight;
};

/// The planes a G2 element rotates. Throws Error(invalid_g2_target) if the
/// class/target combination is not one of the three classes.
std::vector<PlaneRotation> g2_planes(FamilyKind cls, Unit target, int pairing = 0);

/// g(x) for class 1, 2 or 3 (given as 1, 2, 3).
Octonion g2_apply(int cls, Unit target, double alpha, const Octonion& x, int pairing = 0);

/// The three ordered pairs (p, q) with p q = target.
std::vector<std::pair<Unit, Unit>> pairs_pointing_to(Unit target);

enum class ApplicationMode { single, nested, entrywise_automorphism };

class MatrixTransform {
 public:
  struct Single {
    OctMatrix3 m;
  };
  struct Nested {
    OctMatrix3 inner;
    OctMatrix3 outer;
  };
  struct Entrywise {
    G2Element g;
  };

  MatrixTransform() : mode_(Single{identity_matrix3()}) {}
  explicit MatrixTransform(Single s) : mode_(std::move(s)) {}
  explicit MatrixTransform(Nested n) : mode_(std::move(n)) {}
  explicit MatrixTransform(Entrywise e) : mode_(e) {}

  ApplicationMode mode() const noexcept;
  /// The single matrix M. Throws Error(requires_nesting) for other modes.
  const OctMatrix3& matrix() const;
  const std::variant<Single, Nested, Entrywise>& data() const noexcept { return mode_; }

 private:
  std::variant<Single, Nested, Entrywise> mode_;
};

/// The 3x3 matrix M of a family at a parameter (single-matrix families only;
/// G2 and nested flips throw Error(requires_nesting)).
OctMatrix3 single_matrix(const GeneratorFamily& f, double param);

/// The transform of a family at a parameter; G2 families come back in
/// entrywise_automorphism mode and flip pairs in nested mode.
MatrixTransform build_transform(const GeneratorFamily& f, double param);

inline constexpr double kHermiticityTolerance = 1e-9;

/// X -> (M X) M^dagger, or the nested / entrywise variants. Throws
/// Error(not_hermitian) if the output drifts from Hermitian beyond
/// kHermiticityTolerance relative to its size.
Hermitian3 apply(const MatrixTransform& t, const Hermitian3& x);

/// M2 (M1 X M1^dagger) M2^dagger, inner transform first.
Hermitian3 nested_apply(const MatrixTransform& outer, const MatrixTransform& inner,
                        const Hermitian3& x);

/// Shorthand for apply(build_transform(f, param), x).
Hermitian3 act(const GeneratorFamily& f, double param, const Hermitian3& x);

/// x -> (a x) a^{-1}. Throws Error(zero_conjugator) for a = 0.
Octonion inner_automorphism(const Octonion& a, const Octonion& x);

struct ConjugatorCheck {
  bool valid = false;
  double residual = 0.0;  // max over basis pairs
  std::size_t witness_x = 0;  // basis slots attaining the residual
  std::size_t witness_y = 0;
};

inline constexpr double kConjugatorTolerance = 1e-10;

/// Tests (a x a^-1)(a y a^-1) = a (x y) a^-1 on all pairs of basis elements.
ConjugatorCheck is_valid_conjugator(const Octonion& a, double tol = kConjugatorTolerance);

}  // namespace albert
