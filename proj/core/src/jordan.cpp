#include "albert/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "albert/cubic.hpp"
#include "albert/error.hpp"

namespace albert {

Hermitian3 jordan_product(const Hermitian3& a, const Hermitian3& b) {
  const OctMatrix3 fa = a.full();
  const OctMatrix3 fb = b.full();
  auto sym = [&](std::size_t r, std::size_t c) {
    Octonion s;
    for (std::size_t k = 0; k < 3; ++k) s += fa[r][k] * fb[k][c] + fb[r][k] * fa[k][c];
    return 0.5 * s;
  };
  Hermitian3 out;
  for (std::size_t r = 0; r < 3; ++r) {
    out.diag[r] = sym(r, r).real();
    for (std::size_t c = r + 1; c < 3; ++c) out.upper(r, c) = sym(r, c);
  }
  return out;
}

Hermitian3 freudenthal_product(const Hermitian3& a, const Hermitian3& b) {
  const double ta = a.trace();
  const double tb = b.trace();
  const Hermitian3 ab = jordan_product(a, b);
  Hermitian3 out = ab - 0.5 * (tb * a + ta * b);
  const double shift = 0.5 * (ta * tb - ab.trace());
  for (double& d : out.diag) d += shift;
  return out;
}

Hermitian3 quadratic_representation(const Hermitian3& w, const Hermitian3& x) {
  return 2.0 * jordan_product(w, jordan_product(w, x)) -
         jordan_product(jordan_product(w, w), x);
}

double trace_form(const Hermitian3& v, const Hermitian3& w) {
  // tr(V o W) = sum_rc Re(V_rc W_cr); the diagonal of the Jordan product is
  // all that is needed.
  double s = 0.0;
  for (std::size_t n = 0; n < 3; ++n) s += v.diag[n] * w.diag[n];
  s += 2.0 * (dot(v.o12, w.o12) + dot(v.o13, w.o13) + dot(v.o23, w.o23));
  return s;
}

double sigma_from_traces(const Hermitian3& a) {
  const double t = a.trace();
  return 0.5 * (t * t - jordan_product(a, a).trace());
}

double sigma_from_freudenthal(const Hermitian3& a) {
  return freudenthal_product(a, a).trace();
}

double det(const Hermitian3& a) {
  return jordan_product(freudenthal_product(a, a), a).trace() / 3.0;
}

Invariants invariants(const Hermitian3& a) {
  return {a.trace(), sigma_from_traces(a), det(a)};
}

std::array<double, 3> eigenvalues(const Hermitian3& a) {
  const double mean = a.trace() / 3.0;
  Hermitian3 shifted = a;
  for (double& d : shifted.diag) d -= mean;
  // Characteristic polynomial of the traceless part: t^3 + sigma t - det.
  const double p = sigma_from_traces(shifted);
  const double q = -det(shifted);
  // Rounding in the shift is relative to A, so A sets the slack.
  auto roots = depressed_cubic_roots(p, q, frobenius(a));
  for (double& r : roots) r += mean;
  return roots;
}

Hermitian3 SpectralDecomposition::reconstruct() const {
  Hermitian3 sum;
  for (const auto& pair : pairs) sum += pair.eigenvalue * pair.idempotent;
  return sum;
}

namespace {

SpectralDecomposition canonical_frame(const std::array<double, 3>& lambda) {
  SpectralDecomposition out;
  out.path = SpectralPath::triple;
  for (std::size_t n = 0; n < 3; ++n) {
    out.pairs[n] = {lambda[n], Hermitian3::unit_diagonal(n)};
  }
  return out;
}

}  // namespace

SpectralDecomposition spectral_decompose(const Hermitian3& a) {
  const std::array<double, 3> lambda = eigenvalues(a);
  const double tol = kDegeneracyTolerance * frobenius(a);
  if (lambda[0] - lambda[2] <= tol) return canonical_frame(lambda);

  const bool top_isolated = lambda[0] - lambda[1] >= lambda[1] - lambda[2];
  const double simple = top_isolated ? lambda[0] : lambda[2];

  Hermitian3 b = a;
  for (double& d : b.diag) d -= simple;
  const Hermitian3 adj = freudenthal_product(b, b);
  const Hermitian3 v_simple = (1.0 / adj.trace()) * adj;

  // Peirce space of W = I - V is a spin factor holding the other two.
  const Hermitian3 w = Hermitian3::identity() - v_simple;
  const Hermitian3 x = quadratic_representation(w, a);
  const double t = 0.5 * x.trace();
  const Hermitian3 n = x - t * w;
  const double n_norm = frobenius(n) / std::sqrt(2.0);

  SpectralDecomposition out;
  std::array<EigenPair, 2> rest;
  if (2.0 * n_norm > tol) {
    out.path = SpectralPath::nondegenerate;
    const Hermitian3 dir = (1.0 / n_norm) * n;
    rest[0] = {t + n_norm, 0.5 * (w + dir)};
    rest[1] = {t - n_norm, 0.5 * (w - dir)};
  } else {
    out.path = SpectralPath::doublet;
    std::size_t c = 0;
    for (std::size_t k = 1; k < 3; ++k) {
      if (w.diag[k] > w.diag[c]) c = k;
    }
    const Hermitian3 u = quadratic_representation(w, Hermitian3::unit_diagonal(c));
    const Hermitian3 primitive = (1.0 / u.trace()) * u;
    rest[0] = {t, primitive};
    rest[1] = {t, w - primitive};
  }

  if (top_isolated) {
    out.pairs = {EigenPair{simple, v_simple}, rest[0], rest[1]};
  } else {
    out.pairs = {rest[0], rest[1], EigenPair{simple, v_simple}};
  }
  return out;
}

Op2Membership op2_membership(const Hermitian3& v, double tol) {
  Op2Membership m;
  m.idempotency_residual = max_abs(jordan_product(v, v) - v);
  m.star_residual = max_abs(freudenthal_product(v, v));
  m.trace_residual = std::abs(v.trace() - 1.0);
  m.associator_residual = associator(v.o12, v.o13, v.o23).norm();
  m.member =
      m.idempotency_residual <= tol && m.star_residual <= tol && m.trace_residual <= tol;
  return m;
}

Octonion CayleySpinor::associator() const {
  return albert::associator(components[0], components[1], components[2]);
}

double CayleySpinor::norm2() const {
  return components[0].norm2() + components[1].norm2() + components[2].norm2();
}

Hermitian3 outer(const CayleySpinor& psi) {
  const auto& c = psi.components;
  Hermitian3 out;
  for (std::size_t r = 0; r < 3; ++r) {
    out.diag[r] = c[r].norm2();
    for (std::size_t s = r + 1; s < 3; ++s) out.upper(r, s) = c[r] * conj(c[s]);
  }
  return out;
}

Octonion spinor_inner(const CayleySpinor& v, const CayleySpinor& w) {
  Octonion s;
  for (std::size_t r = 0; r < 3; ++r) s += conj(v.components[r]) * w.components[r];
  return s;
}

Hermitian3 spinor_square(const CayleySpinor& psi, double tol) {
  const double assoc = psi.associator().norm();
  if (assoc > tol) {
    std::ostringstream msg;
    msg << "spinor components do not associate (|[psi]| = " << assoc << ")";
    throw Error(Errc::non_associating_spinor, msg.str());
  }
  const double n2 = psi.norm2();
  if (std::abs(n2 - 1.0) > tol) {
    std::ostringstream msg;
    msg << "spinor is not normalized (psi^dagger psi = " << n2 << ")";
    throw Error(Errc::non_normalized_spinor, msg.str());
  }
  return outer(psi);
}

}  // namespace albert
