#include "albert/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "albert/error.hpp"

namespace albert {

Hermitian3 BlockMatrix::assemble() const {
  Hermitian3 m;
  m.diag = {p.d1, p.d2, n};
  m.o12 = p.a;
  m.o13 = psi[0];
  m.o23 = psi[1];
  return m;
}

BlockMatrix BlockMatrix::split(const Hermitian3& m) {
  return {{m.diag[0], m.diag[1], m.o12}, {m.o13, m.o23}, m.diag[2]};
}

Hermitian2 trace_reversal(const Hermitian2& p) {
  const double t = p.trace();
  return {p.d1 - t, p.d2 - t, p.a};
}

DiracResidual dirac_residual(const Hermitian2& p, const Spinor2& psi) {
  const Spinor2 r = albert::apply(trace_reversal(p), psi);
  return {std::sqrt(r[0].norm2() + r[1].norm2()), p.det()};
}

double StarBlocks::max_abs() const {
  double m = std::max({std::abs(top_left.d1), std::abs(top_left.d2), albert::max_abs(top_left.a),
                       std::abs(corner)});
  for (const auto& c : off_diagonal) m = std::max(m, albert::max_abs(c));
  return m;
}

StarBlocks star_blocks(const BlockMatrix& m) {
  const Hermitian2 pt = trace_reversal(m.p);
  const Hermitian2 pp = trace_reversal(outer(m.psi));
  StarBlocks s;
  s.top_left = {pp.d1 - m.n * pt.d1, pp.d2 - m.n * pt.d2, pp.a - m.n * pt.a};
  s.off_diagonal = albert::apply(pt, m.psi);
  s.corner = m.p.det();
  return s;
}

BlockMatrix solve_from_theta(const Spinor2& theta, const Octonion& xi) {
  const double spread = commutator(theta[0], theta[1]).norm();
  if (spread > kCoplanarTolerance * std::max(1.0, theta[0].norm() * theta[1].norm())) {
    std::ostringstream msg;
    msg << "theta components do not share a complex subalgebra (|[t1, t2]| = " << spread
        << ")";
    throw Error(Errc::non_coplanar_theta, msg.str());
  }
  return {outer(theta), {theta[0] * xi, theta[1] * xi}, xi.norm2()};
}

std::string_view to_string(Particle p) noexcept {
  switch (p) {
    case Particle::e_up: return "e_up";
    case Particle::e_down: return "e_down";
    case Particle::e_up_bar: return "e_up_bar";
    case Particle::e_down_bar: return "e_down_bar";
    case Particle::nu: return "nu";
    case Particle::sterile: return "sterile";
  }
  return "unknown";
}

std::string_view to_string(Generation g) noexcept {
  switch (g) {
    case Generation::i: return "i";
    case Generation::j: return "j";
    case Generation::k: return "k";
    case Generation::none: return "none";
  }
  return "unknown";
}

std::string_view to_string(Spin s) noexcept {
  switch (s) {
    case Spin::up: return "up";
    case Spin::down: return "down";
    case Spin::left_handed: return "left";
    case Spin::right_handed: return "right";
  }
  return "unknown";
}

BlockMatrix DiracStateBundle::block() const {
  return {outer(theta), {theta[0] * xi, theta[1] * xi}, xi.norm2()};
}

std::vector<DiracStateBundle> lepton_spectrum() {
  constexpr std::array<std::pair<Generation, Unit>, 3> generations = {
      std::pair{Generation::i, Unit::i}, std::pair{Generation::j, Unit::j},
      std::pair{Generation::k, Unit::k}};
  const Octonion one(1.0);
  const Octonion zero;

  std::vector<DiracStateBundle> out;
  for (const auto& [gen, unit] : generations) {
    const Octonion u = Octonion::unit(unit);
    // Antiparticles take the conjugate label.
    out.push_back({Particle::e_up, gen, Spin::up, {one, u}, one});
    out.push_back({Particle::e_down, gen, Spin::down, {-u, one}, one});
    out.push_back({Particle::e_up_bar, gen, Spin::up, {one, -u}, one});
    out.push_back({Particle::e_down_bar, gen, Spin::down, {u, one}, one});
    out.push_back({Particle::nu, gen, Spin::left_handed, {zero, u}, one});
  }
  out.push_back({Particle::sterile, Generation::none, Spin::right_handed, {zero, one}, one});
  return out;
}

Momentum spatial_reading(const Hermitian2& p) {
  return {0.5 * (p.d1 + p.d2), p.a.real(), -p.a[slot(Unit::l)], 0.5 * (p.d1 - p.d2)};
}

std::array<std::array<Octonion, 2>, 2> preferred_block(const GeneratorFamily& f,
                                                       double param) {
  if (!f.is_type_one()) {
    throw Error(Errc::not_type_one,
                "family '" + f.id + "' does not act through the preferred 2x2 block");
  }
  const OctMatrix3 m = single_matrix(f, param);
  return {{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}};
}

Spinor2 act_on_spinor(const std::array<std::array<Octonion, 2>, 2>& m, const Spinor2& theta) {
  return {m[0][0] * theta[0] + m[0][1] * theta[1], m[1][0] * theta[0] + m[1][1] * theta[1]};
}

Hermitian2 act_on_vector(const std::array<std::array<Octonion, 2>, 2>& m, const Hermitian2& p) {
  const std::array<std::array<Octonion, 2>, 2> full = {
      {{Octonion(p.d1), p.a}, {conj(p.a), Octonion(p.d2)}}};
  auto entry = [&](std::size_t r, std::size_t c) {
    // ((M P) M^dagger)_rc
    Octonion s;
    for (std::size_t a = 0; a < 2; ++a) {
      Octonion mp;
      for (std::size_t b = 0; b < 2; ++b) mp += m[r][b] * full[b][a];
      s += mp * conj(m[c][a]);
    }
    return s;
  };
  return {entry(0, 0).real(), entry(1, 1).real(), entry(0, 1)};
}

double compatibility_residual(const GeneratorFamily& f, double param, const Spinor2& theta) {
  const auto m = preferred_block(f, param);
  const Hermitian2 lhs = act_on_vector(m, outer(theta));
  const Hermitian2 rhs = outer(act_on_spinor(m, theta));
  return std::max({std::abs(lhs.d1 - rhs.d1), std::abs(lhs.d2 - rhs.d2), max_abs(lhs.a - rhs.a)});
}

DiracStateBundle boost_or_rotate_state(const DiracStateBundle& b, const GeneratorFamily& f,
                                       double param) {
  DiracStateBundle out = b;
  out.theta = act_on_spinor(preferred_block(f, param), b.theta);
  return out;
}

}  // namespace albert
