#include "albert/octonion.hpp"

#include <algorithm>
#include <numbers>
#include <ostream>
#include <string>

#include "albert/error.hpp"

namespace albert {

namespace {

constexpr std::array<std::string_view, 8> kBasisNames = {"1",  "i",  "j",  "k",
                                                         "kl", "jl", "il", "l"};

}  // namespace

std::string_view unit_name(Unit u) noexcept { return kBasisNames[slot(u)]; }

std::optional<Unit> parse_unit(std::string_view name) noexcept {
  for (Unit u : kUnits) {
    if (unit_name(u) == name) return u;
  }
  return std::nullopt;
}

Octonion Octonion::from_span(std::span<const double> values) {
  if (values.size() != kOctonionDim) {
    throw Error(Errc::parse_error, "octonion needs exactly 8 coefficients, got " +
                                       std::to_string(values.size()));
  }
  Coeffs c{};
  std::copy(values.begin(), values.end(), c.begin());
  return Octonion(c);
}

NormInverse norm_inverse(const Octonion& a) {
  const double n2 = a.norm2();
  if (n2 == 0.0) return {0.0, std::nullopt};
  return {std::sqrt(n2), conj(a) / n2};
}

double max_abs(const Octonion& a) noexcept {
  double m = 0.0;
  for (double x : a.coeffs()) m = std::max(m, std::abs(x));
  return m;
}

Octonion exp_unit(const Octonion& axis, double theta) {
  if (std::abs(axis.real()) > kUnitAxisTolerance) {
    throw Error(Errc::invalid_unit_argument, "exp_unit: axis has a real part");
  }
  if (std::abs(axis.norm2() - 1.0) > kUnitAxisTolerance) {
    throw Error(Errc::invalid_unit_argument, "exp_unit: axis is not a unit octonion");
  }
  Octonion r = axis.imag() * std::sin(theta);
  r[0] = std::cos(theta);
  return r;
}

Polar polar(const Octonion& a) {
  const double r = a.norm();
  const Octonion im = a.imag();
  const double im_norm = im.norm();
  if (im_norm == 0.0) {
    return {r, Octonion::unit(Unit::i), a.real() < 0.0 ? std::numbers::pi : 0.0};
  }
  return {r, im / im_norm, std::atan2(im_norm, a.real())};
}

std::ostream& operator<<(std::ostream& os, const Octonion& a) {
  os << '(';
  for (std::size_t n = 0; n < kOctonionDim; ++n) {
    if (n != 0) os << ", ";
    os << a[n];
  }
  return os << ')';
}

}  // namespace albert
