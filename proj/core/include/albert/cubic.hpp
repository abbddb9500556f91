#pragma once

#include <array>

namespace albert {

inline constexpr double kDiscriminantSlack = 1e-9;

/// Roots of t^3 + p t + q = 0 when all three are real, sorted descending.
///
/// Trigonometric formula with the arccos argument clamped to [-1, 1]. The
/// discriminant D = (-p/3)^3 - (q/2)^2 may dip to -1e-9 * scale^6 before the
/// cubic is declared to have complex roots (Error(numerical_inconsistency)).
/// `scale` is the magnitude of the roots the caller expects.
std::array<double, 3> depressed_cubic_roots(double p, double q, double scale);

/// Roots of lambda^3 + c2 lambda^2 + c1 lambda + c0 = 0, sorted descending.
std::array<double, 3> real_cubic_roots(double c2, double c1, double c0);

}  // namespace albert
