#include "albert/random.hpp"

#include <numbers>

#include "albert/group.hpp"

namespace albert {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t stream_id(std::string_view name) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) noexcept
    : state_(mix(mix(seed + kGolden) ^ stream) + trial * kGolden) {}

TrialRng::TrialRng(std::uint64_t seed, std::string_view stream, std::uint64_t trial) noexcept
    : TrialRng(seed, stream_id(stream), trial) {}

std::uint64_t TrialRng::next() noexcept {
  state_ += kGolden;
  return mix(state_);
}

double TrialRng::uniform() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::size_t TrialRng::below(std::size_t n) noexcept {
  return static_cast<std::size_t>(uniform() * static_cast<double>(n));
}

Octonion random_octonion(TrialRng& rng, double lo, double hi) {
  Octonion a;
  for (std::size_t n = 0; n < kOctonionDim; ++n) a[n] = rng.uniform(lo, hi);
  return a;
}

Octonion random_quaternion(TrialRng& rng, double lo, double hi) {
  Octonion a;
  for (std::size_t n = 0; n < 4; ++n) a[n] = rng.uniform(lo, hi);
  return a;
}

Octonion random_unit_imaginary(TrialRng& rng) {
  while (true) {
    Octonion a = random_octonion(rng).imag();
    const double n = a.norm();
    if (n > 0.1) return a / n;
  }
}

Hermitian3 random_hermitian(TrialRng& rng, double lo, double hi) {
  Hermitian3 m;
  for (double& d : m.diag) d = rng.uniform(lo, hi);
  m.o12 = random_octonion(rng, lo, hi);
  m.o13 = random_octonion(rng, lo, hi);
  m.o23 = random_octonion(rng, lo, hi);
  return m;
}

std::array<Hermitian3, 3> random_frame(TrialRng& rng, int rotations) {
  std::array<Hermitian3, 3> frame = {Hermitian3::unit_diagonal(0), Hermitian3::unit_diagonal(1),
                                     Hermitian3::unit_diagonal(2)};
  std::vector<const GeneratorFamily*> pool;
  for (const auto& f : catalog()) {
    if (f.is_rotation_like()) pool.push_back(&f);
  }
  for (int n = 0; n < rotations; ++n) {
    const GeneratorFamily& f = *pool[rng.below(pool.size())];
    const MatrixTransform t = build_transform(f, rng.uniform(-std::numbers::pi, std::numbers::pi));
    for (auto& v : frame) v = apply(t, v);
  }
  return frame;
}

}  // namespace albert
