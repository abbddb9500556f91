#pragma once

// Block structure of H3(O) under the preferred SL(2,O): a 2x2 momentum block
// P, a two-component spinor psi and a scalar n. The massless Dirac equation
// in ten dimensions is P~ psi = 0, with P~ = P - tr(P) I.

#include <string_view>
#include <vector>

#include "albert/group.hpp"
#include "albert/hermitian.hpp"
#include "albert/octonion.hpp"

namespace albert {

struct BlockMatrix {
  Hermitian2 p;
  Spinor2 psi;
  double n = 0.0;

  /// [[P, psi], [psi^dagger, n]]
  Hermitian3 assemble() const;
  static BlockMatrix split(const Hermitian3& m);
};

/// P~ = P - tr(P) I
Hermitian2 trace_reversal(const Hermitian2& p);

struct DiracResidual {
  double residual_norm;  // |P~ psi|
  double det_p;
};

DiracResidual dirac_residual(const Hermitian2& p, const Spinor2& psi);

/// Closed-form blocks of P * P for P = [[P, psi], [psi^dagger, n]]:
/// top-left (psi psi^dagger)~ - n P~, off-diagonal P~ psi, corner det P.
struct StarBlocks {
  Hermitian2 top_left;
  Spinor2 off_diagonal;
  double corner = 0.0;

  double max_abs() const;
};

StarBlocks star_blocks(const BlockMatrix& m);

inline constexpr double kCoplanarTolerance = 1e-10;

/// psi = theta xi, P = theta theta^dagger, n = |xi|^2. The components of
/// theta must lie in one complex subalgebra (vanishing commutator), else
/// Error(non_coplanar_theta).
BlockMatrix solve_from_theta(const Spinor2& theta, const Octonion& xi);

enum class Particle { e_up, e_down, e_up_bar, e_down_bar, nu, sterile };
enum class Generation { i, j, k, none };
enum class Spin { up, down, left_handed, right_handed };

std::string_view to_string(Particle p) noexcept;
std::string_view to_string(Generation g) noexcept;
std::string_view to_string(Spin s) noexcept;

struct DiracStateBundle {
  Particle label = Particle::e_up;
  Generation generation = Generation::none;
  Spin spin = Spin::up;
  Spinor2 theta;
  Octonion xi{1.0};

  BlockMatrix block() const;
  bool massless() const noexcept {
    return label == Particle::nu || label == Particle::sterile;
  }
};

/// Three generations (i, j, k) of e_up, e_down, e_up_bar, e_down_bar, nu,
/// followed by the single sterile state: 16 in all.
std::vector<DiracStateBundle> lepton_spectrum();

/// Momentum components (t, x, y, z) of P = [[t+z, x - l y], [x + l y, t - z]],
/// reading x from the real part and y from the l part of the off-diagonal.
struct Momentum {
  double t, x, y, z;
};

Momentum spatial_reading(const Hermitian2& p);

/// The 2x2 block of a type-I family's matrix.
std::array<std::array<Octonion, 2>, 2> preferred_block(const GeneratorFamily& f, double param);

Spinor2 act_on_spinor(const std::array<std::array<Octonion, 2>, 2>& m, const Spinor2& theta);
Hermitian2 act_on_vector(const std::array<std::array<Octonion, 2>, 2>& m, const Hermitian2& p);

/// max |M (theta theta^dagger) M^dagger - (M theta)(M theta)^dagger|
double compatibility_residual(const GeneratorFamily& f, double param, const Spinor2& theta);

/// theta -> M theta for a type-I family (Error(not_type_one) otherwise).
DiracStateBundle boost_or_rotate_state(const DiracStateBundle& b, const GeneratorFamily& f,
                                       double param);

}  // namespace albert
