#include "albert/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "albert/error.hpp"

namespace albert {

OctMatrix3 matmul(const OctMatrix3& a, const OctMatrix3& b) {
  OctMatrix3 r{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Octonion s;
      for (std::size_t k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  }
  return r;
}

OctMatrix3 adjoint(const OctMatrix3& a) {
  OctMatrix3 r{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) r[i][j] = conj(a[j][i]);
  }
  return r;
}

OctMatrix3 identity_matrix3() {
  OctMatrix3 r{};
  for (std::size_t i = 0; i < 3; ++i) r[i][i] = Octonion(1.0);
  return r;
}

Spinor2 apply(const Hermitian2& p, const Spinor2& psi) {
  return {p.d1 * psi[0] + p.a * psi[1], conj(p.a) * psi[0] + p.d2 * psi[1]};
}

Hermitian2 outer(const Spinor2& theta) {
  return {theta[0].norm2(), theta[1].norm2(), theta[0] * conj(theta[1])};
}

Hermitian3 Hermitian3::from_full(const OctMatrix3& m, double tol) {
  double worst = 0.0;
  Hermitian3 h;
  for (std::size_t r = 0; r < 3; ++r) {
    worst = std::max(worst, max_abs(m[r][r].imag()));
    h.diag[r] = m[r][r].real();
    for (std::size_t c = r + 1; c < 3; ++c) {
      worst = std::max(worst, max_abs(m[r][c] - conj(m[c][r])));
      h.upper(r, c) = 0.5 * (m[r][c] + conj(m[c][r]));
    }
  }
  if (worst > tol) {
    throw Error(Errc::not_hermitian,
                "matrix is not Hermitian (deviation " + std::to_string(worst) + ")");
  }
  return h;
}

Octonion Hermitian3::entry(std::size_t r, std::size_t c) const noexcept {
  if (r == c) return Octonion(diag[r]);
  if (r > c) return conj(entry(c, r));
  if (r == 0) return c == 1 ? o12 : o13;
  return o23;
}

Octonion& Hermitian3::upper(std::size_t r, std::size_t c) noexcept {
  if (r == 0) return c == 1 ? o12 : o13;
  return o23;
}

OctMatrix3 Hermitian3::full() const noexcept {
  OctMatrix3 m{};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) m[r][c] = entry(r, c);
  }
  return m;
}

Hermitian3::Vector Hermitian3::to_vector() const noexcept {
  Vector v{};
  std::copy(diag.begin(), diag.end(), v.begin());
  std::copy(o12.coeffs().begin(), o12.coeffs().end(), v.begin() + 3);
  std::copy(o13.coeffs().begin(), o13.coeffs().end(), v.begin() + 11);
  std::copy(o23.coeffs().begin(), o23.coeffs().end(), v.begin() + 19);
  return v;
}

Hermitian3 Hermitian3::from_vector(std::span<const double> v) {
  if (v.size() != kDim) {
    throw Error(Errc::parse_error, "Hermitian3 needs 27 coordinates, got " +
                                       std::to_string(v.size()));
  }
  Hermitian3 h;
  std::copy(v.begin(), v.begin() + 3, h.diag.begin());
  h.o12 = Octonion::from_span(v.subspan(3, 8));
  h.o13 = Octonion::from_span(v.subspan(11, 8));
  h.o23 = Octonion::from_span(v.subspan(19, 8));
  return h;
}

Hermitian3& Hermitian3::operator+=(const Hermitian3& o) noexcept {
  for (std::size_t n = 0; n < 3; ++n) diag[n] += o.diag[n];
  o12 += o.o12;
  o13 += o.o13;
  o23 += o.o23;
  return *this;
}

Hermitian3& Hermitian3::operator-=(const Hermitian3& o) noexcept {
  for (std::size_t n = 0; n < 3; ++n) diag[n] -= o.diag[n];
  o12 -= o.o12;
  o13 -= o.o13;
  o23 -= o.o23;
  return *this;
}

Hermitian3& Hermitian3::operator*=(double s) noexcept {
  for (double& d : diag) d *= s;
  o12 *= s;
  o13 *= s;
  o23 *= s;
  return *this;
}

double frobenius(const Hermitian3& a) noexcept {
  double s = 0.0;
  for (double d : a.diag) s += d * d;
  s += 2.0 * (a.o12.norm2() + a.o13.norm2() + a.o23.norm2());
  return std::sqrt(s);
}

double max_abs(const Hermitian3& a) noexcept {
  double m = 0.0;
  for (double x : a.to_vector()) m = std::max(m, std::abs(x));
  return m;
}

std::ostream& operator<<(std::ostream& os, const Hermitian3& a) {
  return os << "{diag=(" << a.diag[0] << ", " << a.diag[1] << ", " << a.diag[2]
            << "), o12=" << a.o12 << ", o13=" << a.o13 << ", o23=" << a.o23 << '}';
}

}  // namespace albert
