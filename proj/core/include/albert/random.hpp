#pragma once

// Deterministic sampling. Every trial gets its own generator keyed by
// (seed, stream, trial), so results do not depend on evaluation order.

#include <array>
#include <cstdint>
#include <string_view>

#include "albert/hermitian.hpp"
#include "albert/jordan.hpp"
#include "albert/octonion.hpp"

namespace albert {

/// SplitMix64 over a counter derived from (seed, stream, trial).
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) noexcept;
  TrialRng(std::uint64_t seed, std::string_view stream, std::uint64_t trial) noexcept;

  std::uint64_t next() noexcept;
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  std::size_t below(std::size_t n) noexcept;

 private:
  std::uint64_t state_;
};

std::uint64_t stream_id(std::string_view name) noexcept;

/// Coefficients uniform in [lo, hi].
Octonion random_octonion(TrialRng& rng, double lo = -1.0, double hi = 1.0);
/// Coefficients in slots 1, i, j, k only.
Octonion random_quaternion(TrialRng& rng, double lo = -1.0, double hi = 1.0);
Octonion random_unit_imaginary(TrialRng& rng);
/// Diagonal and off-diagonal coefficients uniform in [lo, hi].
Hermitian3 random_hermitian(TrialRng& rng, double lo = -1.0, double hi = 1.0);

/// Image of the diagonal frame under a product of random rotations from the
/// catalog; an orthogonal frame of primitive idempotents.
std::array<Hermitian3, 3> random_frame(TrialRng& rng, int rotations = 12);

}  // namespace albert
