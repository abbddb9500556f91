#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>

#include "albert/octonion.hpp"

namespace albert {

/// General 3x3 octonionic matrix, row-major.
using OctMatrix3 = std::array<std::array<Octonion, 3>, 3>;

OctMatrix3 matmul(const OctMatrix3& a, const OctMatrix3& b);
OctMatrix3 adjoint(const OctMatrix3& a);
OctMatrix3 identity_matrix3();

/// 2x2 octonionic Hermitian matrix [[d1, a], [conj(a), d2]].
struct Hermitian2 {
  double d1 = 0.0;
  double d2 = 0.0;
  Octonion a;

  constexpr double trace() const noexcept { return d1 + d2; }
  constexpr double det() const noexcept { return d1 * d2 - a.norm2(); }

  static constexpr Hermitian2 identity() noexcept { return {1.0, 1.0, Octonion()}; }

  friend constexpr bool operator==(const Hermitian2&, const Hermitian2&) = default;
};

using Spinor2 = std::array<Octonion, 2>;

/// P psi as an ordinary 2x2 matrix-vector product.
Spinor2 apply(const Hermitian2& p, const Spinor2& psi);

/// theta theta^dagger.
Hermitian2 outer(const Spinor2& theta);

/// 3x3 octonionic Hermitian matrix. Only the upper triangle is stored; the
/// lower triangle is its conjugate, so every value of this type is Hermitian.
///
/// The 27 real coordinates are ordered diag[0..2], o12[0..7], o13[0..7],
/// o23[0..7], matching the JSON file layout.
class Hermitian3 {
 public:
  static constexpr std::size_t kDim = 27;
  using Vector = std::array<double, kDim>;

  std::array<double, 3> diag{};
  Octonion o12;
  Octonion o13;
  Octonion o23;

  static Hermitian3 identity() noexcept { return diagonal(1.0, 1.0, 1.0); }
  static Hermitian3 diagonal(double a, double b, double c) noexcept {
    Hermitian3 m;
    m.diag = {a, b, c};
    return m;
  }
  /// E_nn, the diagonal primitive idempotent.
  static Hermitian3 unit_diagonal(std::size_t n) noexcept {
    Hermitian3 m;
    m.diag[n] = 1.0;
    return m;
  }

  /// Hermitian part of a general matrix; throws Error(not_hermitian) if the
  /// input deviates from Hermiticity by more than tol (absolute).
  static Hermitian3 from_full(const OctMatrix3& m, double tol);

  /// Entry (r, c), 0-based, with the lower triangle filled by conjugation.
  Octonion entry(std::size_t r, std::size_t c) const noexcept;
  /// Off-diagonal entry (r, c) with r < c, mutable.
  Octonion& upper(std::size_t r, std::size_t c) noexcept;

  OctMatrix3 full() const noexcept;

  double trace() const noexcept { return diag[0] + diag[1] + diag[2]; }

  Vector to_vector() const noexcept;
  static Hermitian3 from_vector(std::span<const double> v);

  Hermitian3& operator+=(const Hermitian3& o) noexcept;
  Hermitian3& operator-=(const Hermitian3& o) noexcept;
  Hermitian3& operator*=(double s) noexcept;

  friend bool operator==(const Hermitian3&, const Hermitian3&) = default;
};

inline Hermitian3 operator+(Hermitian3 a, const Hermitian3& b) noexcept { return a += b; }
inline Hermitian3 operator-(Hermitian3 a, const Hermitian3& b) noexcept { return a -= b; }
inline Hermitian3 operator*(Hermitian3 a, double s) noexcept { return a *= s; }
inline Hermitian3 operator*(double s, Hermitian3 a) noexcept { return a *= s; }

/// Frobenius norm, sqrt(tr(A o A)).
double frobenius(const Hermitian3& a) noexcept;
/// Largest absolute real coordinate.
double max_abs(const Hermitian3& a) noexcept;

std::ostream& operator<<(std::ostream& os, const Hermitian3& a);

}  // namespace albert
