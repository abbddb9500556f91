#pragma once

// The exceptional Jordan algebra H3(O): Jordan and Freudenthal products, the
// cubic invariants, the Jordan eigenvalue problem, the Cayley plane OP2 and
// Cayley spinors.

#include <array>
#include <cstddef>

#include "albert/hermitian.hpp"
#include "albert/octonion.hpp"

namespace albert {

/// A o B = (AB + BA) / 2 with octonionic matrix multiplication.
Hermitian3 jordan_product(const Hermitian3& a, const Hermitian3& b);

/// A * B = A o B - (A tr B + B tr A)/2 + (tr A tr B - tr(A o B))/2 I
Hermitian3 freudenthal_product(const Hermitian3& a, const Hermitian3& b);

/// U_W(X) = 2 W o (W o X) - (W o W) o X
Hermitian3 quadratic_representation(const Hermitian3& w, const Hermitian3& x);

/// tr(V o W)
double trace_form(const Hermitian3& v, const Hermitian3& w);

/// sigma(A) = ((tr A)^2 - tr(A o A)) / 2
double sigma_from_traces(const Hermitian3& a);
/// sigma(A) = tr(A * A)
double sigma_from_freudenthal(const Hermitian3& a);

/// det(A) = tr((A * A) o A) / 3
double det(const Hermitian3& a);

struct Invariants {
  double trace;
  double sigma;
  double det;
};

Invariants invariants(const Hermitian3& a);

/// Real roots of lambda^3 - tr(A) lambda^2 + sigma(A) lambda - det(A), sorted
/// descending. The cubic is solved for A - (tr A / 3) I so the roots carry
/// absolute error relative to the spread of the spectrum rather than to tr A.
std::array<double, 3> eigenvalues(const Hermitian3& a);

/// Relative eigenvalue gap under which the decomposition switches to the
/// degenerate constructions.
inline constexpr double kDegeneracyTolerance = 1e-8;

enum class SpectralPath {
  nondegenerate,
  doublet,  // two eigenvalues closer than kDegeneracyTolerance * |A|
  triple,   // all three; the canonical diagonal frame is returned
};

struct EigenPair {
  double eigenvalue;
  Hermitian3 idempotent;
};

struct SpectralDecomposition {
  std::array<EigenPair, 3> pairs;  // eigenvalues descending
  SpectralPath path = SpectralPath::nondegenerate;

  bool degenerate() const noexcept { return path != SpectralPath::nondegenerate; }
  Hermitian3 reconstruct() const;
};

/// Decompose A = sum lambda_n V_n into Jordan-orthogonal primitive idempotents.
///
/// The most isolated eigenvalue gets V = (B * B) / tr(B * B), B = A - lambda I.
/// The remaining two live in the Peirce space of W = I - V, a spin factor in
/// which X = U_W(A) splits as t W + N with N o N = |N|^2 W, giving
/// idempotents (W +- N/|N|)/2. When |N| is below tolerance the pair is
/// degenerate and a primitive idempotent U_W(E_cc) / W_cc is taken from the
/// largest diagonal slot c, which is the normalized square of column c of W
/// whenever the entries associate.
SpectralDecomposition spectral_decompose(const Hermitian3& a);

struct Op2Membership {
  bool member = false;
  double idempotency_residual = 0.0;  // max |V o V - V|
  double star_residual = 0.0;         // max |V * V|
  double trace_residual = 0.0;        // |tr V - 1|
  double associator_residual = 0.0;   // |[o12, o13, o23]|
};

inline constexpr double kOp2Tolerance = 1e-9;

/// Checks both V o V = V, tr V = 1 and V * V = 0, tr V = 1.
Op2Membership op2_membership(const Hermitian3& v, double tol = kOp2Tolerance);

/// Three-component octonionic column.
struct CayleySpinor {
  std::array<Octonion, 3> components;

  /// [psi] = [psi_1, psi_2, psi_3]
  Octonion associator() const;
  /// psi^dagger psi
  double norm2() const;
};

/// psi psi^dagger without admissibility checks.
Hermitian3 outer(const CayleySpinor& psi);

/// sum_r conj(v_r) w_r
Octonion spinor_inner(const CayleySpinor& v, const CayleySpinor& w);

inline constexpr double kSpinorTolerance = 1e-10;

/// psi psi^dagger for an admissible Cayley spinor. Throws
/// Error(non_associating_spinor) if |[psi]| > tol and
/// Error(non_normalized_spinor) if |psi^dagger psi - 1| > tol.
Hermitian3 spinor_square(const CayleySpinor& psi, double tol = kSpinorTolerance);

}  // namespace albert
