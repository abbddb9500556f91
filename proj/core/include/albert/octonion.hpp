#pragma once

// Octonion arithmetic with the basis order (1, i, j, k, kl, jl, il, l).
//
// The multiplication table is generated once by Cayley-Dickson doubling of
// the quaternions, writing an octonion as a + b l with a, b quaternions:
//
//   (a + b l)(c + d l) = (a c - conj(d) b) + (d a + b conj(c)) l
//
// which gives k l = kl, l kl = k, kl k = l and (i j) l = kl, i (j l) = -kl.

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>

namespace albert {

inline constexpr std::size_t kOctonionDim = 8;

/// One of the seven imaginary units; the value is the coefficient slot.
enum class Unit : std::uint8_t { i = 1, j = 2, k = 3, kl = 4, jl = 5, il = 6, l = 7 };

inline constexpr std::array<Unit, 7> kUnits = {Unit::i,  Unit::j,  Unit::k, Unit::kl,
                                               Unit::jl, Unit::il, Unit::l};

constexpr std::size_t slot(Unit u) noexcept { return static_cast<std::size_t>(u); }

std::string_view unit_name(Unit u) noexcept;
std::optional<Unit> parse_unit(std::string_view name) noexcept;

/// Product of two basis elements: sign * e_index (index 0 is the real unit).
struct SignedBasis {
  std::int8_t sign;
  std::uint8_t index;

  friend constexpr bool operator==(SignedBasis, SignedBasis) = default;
};

using StructureTable = std::array<std::array<SignedBasis, kOctonionDim>, kOctonionDim>;

namespace detail {

using Quat = std::array<int, 4>;

constexpr Quat qmul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

constexpr Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

constexpr Quat qadd(const Quat& a, const Quat& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

constexpr Quat qsub(const Quat& a, const Quat& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

// Slots 4..7 hold kl, jl, il, l, i.e. the l-part quaternion (b0,b1,b2,b3)
// sits in slots (7, 6, 5, 4).
constexpr std::array<int, 8> basis_vector(std::size_t n) {
  std::array<int, 8> v{};
  v[n] = 1;
  return v;
}

constexpr std::array<int, 8> cayley_dickson(const std::array<int, 8>& x,
                                            const std::array<int, 8>& y) {
  const Quat a{x[0], x[1], x[2], x[3]};
  const Quat b{x[7], x[6], x[5], x[4]};
  const Quat c{y[0], y[1], y[2], y[3]};
  const Quat d{y[7], y[6], y[5], y[4]};
  const Quat re = qsub(qmul(a, c), qmul(qconj(d), b));
  const Quat im = qadd(qmul(d, a), qmul(b, qconj(c)));
  return {re[0], re[1], re[2], re[3], im[3], im[2], im[1], im[0]};
}

constexpr StructureTable build_structure_table() {
  StructureTable t{};
  for (std::size_t p = 0; p < kOctonionDim; ++p) {
    for (std::size_t q = 0; q < kOctonionDim; ++q) {
      const auto prod = cayley_dickson(basis_vector(p), basis_vector(q));
      for (std::size_t n = 0; n < kOctonionDim; ++n) {
        if (prod[n] != 0) {
          t[p][q] = SignedBasis{static_cast<std::int8_t>(prod[n]),
                                static_cast<std::uint8_t>(n)};
        }
      }
    }
  }
  return t;
}

}  // namespace detail

inline constexpr StructureTable kStructure = detail::build_structure_table();

class Octonion {
 public:
  using Coeffs = std::array<double, kOctonionDim>;

  constexpr Octonion() = default;
  constexpr explicit Octonion(const Coeffs& c) : c_(c) {}
  constexpr Octonion(double re) : c_{re} {}  // NOLINT(google-explicit-constructor)

  static constexpr Octonion unit(Unit u) {
    Coeffs c{};
    c[slot(u)] = 1.0;
    return Octonion(c);
  }

  static Octonion from_span(std::span<const double> values);

  constexpr const Coeffs& coeffs() const noexcept { return c_; }
  constexpr double operator[](std::size_t n) const { return c_[n]; }
  constexpr double& operator[](std::size_t n) { return c_[n]; }

  constexpr double real() const noexcept { return c_[0]; }
  constexpr Octonion imag() const noexcept {
    Octonion r = *this;
    r.c_[0] = 0.0;
    return r;
  }

  constexpr double norm2() const noexcept {
    double s = 0.0;
    for (double x : c_) s += x * x;
    return s;
  }
  double norm() const noexcept { return std::sqrt(norm2()); }

  constexpr Octonion& operator+=(const Octonion& o) noexcept {
    for (std::size_t n = 0; n < kOctonionDim; ++n) c_[n] += o.c_[n];
    return *this;
  }
  constexpr Octonion& operator-=(const Octonion& o) noexcept {
    for (std::size_t n = 0; n < kOctonionDim; ++n) c_[n] -= o.c_[n];
    return *this;
  }
  constexpr Octonion& operator*=(double s) noexcept {
    for (double& x : c_) x *= s;
    return *this;
  }
  constexpr Octonion& operator/=(double s) noexcept {
    for (double& x : c_) x /= s;
    return *this;
  }

  friend constexpr bool operator==(const Octonion&, const Octonion&) = default;

 private:
  Coeffs c_{};
};

constexpr Octonion operator+(Octonion a, const Octonion& b) noexcept { return a += b; }
constexpr Octonion operator-(Octonion a, const Octonion& b) noexcept { return a -= b; }
constexpr Octonion operator-(Octonion a) noexcept { return a *= -1.0; }
constexpr Octonion operator*(Octonion a, double s) noexcept { return a *= s; }
constexpr Octonion operator*(double s, Octonion a) noexcept { return a *= s; }
constexpr Octonion operator/(Octonion a, double s) noexcept { return a /= s; }

/// Octonion product via the precomputed signed-index table.
constexpr Octonion operator*(const Octonion& a, const Octonion& b) noexcept {
  Octonion::Coeffs r{};
  for (std::size_t p = 0; p < kOctonionDim; ++p) {
    const double ap = a[p];
    if (ap == 0.0) continue;
    for (std::size_t q = 0; q < kOctonionDim; ++q) {
      const SignedBasis e = kStructure[p][q];
      r[e.index] += e.sign * ap * b[q];
    }
  }
  return Octonion(r);
}

constexpr Octonion conj(const Octonion& a) noexcept {
  Octonion r = -a;
  r[0] = a[0];
  return r;
}

constexpr double dot(const Octonion& a, const Octonion& b) noexcept {
  double s = 0.0;
  for (std::size_t n = 0; n < kOctonionDim; ++n) s += a[n] * b[n];
  return s;
}

/// Norm and multiplicative inverse; the inverse is absent only for zero.
struct NormInverse {
  double norm;
  std::optional<Octonion> inverse;
};

NormInverse norm_inverse(const Octonion& a);

constexpr Octonion commutator(const Octonion& a, const Octonion& b) noexcept {
  return a * b - b * a;
}

/// [a, b, c] = (ab)c - a(bc)
constexpr Octonion associator(const Octonion& a, const Octonion& b,
                              const Octonion& c) noexcept {
  return (a * b) * c - a * (b * c);
}

/// Largest absolute coefficient.
double max_abs(const Octonion& a) noexcept;

inline constexpr double kUnitAxisTolerance = 1e-12;

/// e^{s theta} = cos(theta) + s sin(theta) for a unit pure-imaginary s.
/// Throws Error(invalid_unit_argument) otherwise.
Octonion exp_unit(const Octonion& axis, double theta);

/// a = r e^{s theta} with r >= 0, theta in [0, pi], s a unit imaginary.
/// For real a the axis defaults to i.
struct Polar {
  double r;
  Octonion axis;
  double theta;
};

Polar polar(const Octonion& a);

std::ostream& operator<<(std::ostream& os, const Octonion& a);

}  // namespace albert
