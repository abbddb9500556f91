#include "albert/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "albert/error.hpp"

namespace albert {

std::array<double, 3> depressed_cubic_roots(double p, double q, double scale) {
  const double s2 = -p / 3.0;
  const double scale6 = scale * scale * scale * scale * scale * scale;
  const double disc = s2 * s2 * s2 - 0.25 * q * q;
  if (disc < -kDiscriminantSlack * scale6) {
    std::ostringstream msg;
    msg << "cubic has complex roots (p=" << p << ", q=" << q << ", discriminant " << disc
        << ")";
    throw Error(Errc::numerical_inconsistency, msg.str());
  }
  if (s2 <= 0.0) return {0.0, 0.0, 0.0};

  const double s = std::sqrt(s2);
  const double cos_arg = std::clamp(-q / (2.0 * s2 * s), -1.0, 1.0);
  const double phi = std::acos(cos_arg) / 3.0;
  constexpr double kThird = 2.0 * std::numbers::pi / 3.0;

  std::array<double, 3> roots = {2.0 * s * std::cos(phi), 2.0 * s * std::cos(phi - kThird),
                                 2.0 * s * std::cos(phi + kThird)};
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

std::array<double, 3> real_cubic_roots(double c2, double c1, double c0) {
  // lambda = t + shift
  const double shift = -c2 / 3.0;
  const double p = c1 - c2 * c2 / 3.0;
  const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
  const double scale =
      std::max({std::abs(c2), std::sqrt(std::abs(c1)), std::cbrt(std::abs(c0))});
  auto roots = depressed_cubic_roots(p, q, scale);
  for (double& r : roots) r += shift;
  return roots;
}

}  // namespace albert
