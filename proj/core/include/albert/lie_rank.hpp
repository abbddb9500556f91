#pragma once

// Numerical Lie-algebra dimensions: each generator family is linearized at
// the identity into a 27x27 operator on H3(O), and subsets of families are
// ranked by the singular values of their stacked, flattened tangents.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "albert/group.hpp"
#include "albert/hermitian.hpp"

namespace albert {

inline constexpr double kTangentStep = 1e-5;
inline constexpr double kStepConsistency = 1e-8;
inline constexpr double kRankThreshold = 1e-8;
inline constexpr double kRequiredGap = 1e3;

struct TangentOperator {
  static constexpr std::size_t kDim = Hermitian3::kDim;

  std::string family_id;
  /// Row-major d/dparam (g(param) X) at param = 0, acting on the 27 real
  /// coordinates of Hermitian3::to_vector().
  std::array<double, kDim * kDim> matrix{};

  double at(std::size_t row, std::size_t col) const { return matrix[row * kDim + col]; }
  Hermitian3 apply(const Hermitian3& x) const;
};

/// Central difference with step h, cross-checked against step h/2. Throws
/// Error(step_inconsistency) if the two disagree by more than
/// kStepConsistency in any entry.
TangentOperator tangent(const GeneratorFamily& f, double step = kTangentStep);

/// Directional derivative of det at X along the tangent, tr((X*X) o T(X)).
double det_derivative(const TangentOperator& t, const Hermitian3& x);

/// Largest |d tr(g X) / d param| over basis X: zero for trace-preserving
/// families.
double trace_drift(const TangentOperator& t);

struct SpanReport {
  std::string name;
  std::vector<std::string> family_ids;
  std::size_t rank = 0;
  std::vector<double> singular_values;  // descending
  /// Smallest accepted over largest rejected singular value. When nothing
  /// is rejected, the smallest accepted one over the rank threshold.
  double gap = 0.0;
  bool full_rank = false;

  bool conclusive() const noexcept { return gap >= kRequiredGap; }
};

/// Numerical rank of the flattened tangents (relative threshold 1e-8).
/// Throws Error(empty_span) on an empty set.
SpanReport span_rank(std::string name, std::span<const TangentOperator> tangents);

struct DimensionCheck {
  SpanReport report;
  std::size_t expected = 0;

  bool ok() const noexcept { return report.rank == expected && report.conclusive(); }
};

/// Tangents for a list of families, in order.
std::vector<TangentOperator> tangents(std::span<const GeneratorFamily> families);

/// E6, F4 (rotations), boosts, G2, SU(3), SO(8), SO(7) in that order.
std::vector<DimensionCheck> subgroup_dimensions();

/// Union of the type I, II and III SO(8) sets; expected rank 28.
DimensionCheck triality_check();

/// The 135 families before removing duplicates; expected rank 78.
DimensionCheck naive_span_check();

/// The 21 nested flip pairs, alone and joined with the SO(7) set; both 21.
std::vector<DimensionCheck> flip_span_checks();

}  // namespace albert
