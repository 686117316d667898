#include "ellspec/ellipse.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ellspec {

namespace {

void check_time(double t, const char* who) {
  if (!std::isfinite(t))
    throw std::invalid_argument(std::string(who) + ": non-finite time");
}

// Shared precondition check for superposition inputs: equal dimensions,
// equal positive omega, finite entries.
void check_terms(std::span<const Sinusoid> terms, const char* who) {
  const std::size_t n = terms.front().direction.size();
  const double omega = terms.front().omega;
  for (const Sinusoid& term : terms) {
    if (term.direction.empty())
      throw std::invalid_argument(std::string(who) +
                                  ": sinusoid with empty direction vector");
    if (term.direction.size() != n)
      throw std::invalid_argument(
          std::string(who) + ": sinusoid dimensions differ (" +
          std::to_string(n) + " vs " + std::to_string(term.direction.size()) +
          ")");
    if (!all_finite(term.direction) || !std::isfinite(term.phi) ||
        !std::isfinite(term.omega))
      throw std::invalid_argument(std::string(who) +
                                  ": non-finite sinusoid parameter");
    if (term.omega <= 0.0)
      throw std::invalid_argument(std::string(who) +
                                  ": omega must be positive");
    if (term.omega != omega)
      throw std::invalid_argument(std::string(who) +
                                  ": sinusoids have mismatched omegas");
  }
}

}  // namespace

const char* to_string(PolarizationKind kind) {
  switch (kind) {
    case PolarizationKind::Zero: return "zero";
    case PolarizationKind::Linear: return "linear";
    case PolarizationKind::Circular: return "circular";
    case PolarizationKind::Elliptical: return "elliptical";
  }
  return "unknown";
}

Vec eval_superposition(std::span<const Sinusoid> terms, double t,
                       std::size_t dim_if_empty) {
  check_time(t, "eval_superposition");
  if (terms.empty()) return Vec(dim_if_empty, 0.0);
  check_terms(terms, "eval_superposition");
  Vec out(terms.front().direction.size(), 0.0);
  for (const Sinusoid& term : terms) {
    const double k = std::sin(term.omega * t + term.phi);
    add_scaled(out, term.direction, k);
  }
  return out;
}

EllipseCS cs_from_sinusoids(std::span<const Sinusoid> terms) {
  if (terms.empty())
    throw std::invalid_argument(
        "cs_from_sinusoids: empty superposition has no defined omega");
  check_terms(terms, "cs_from_sinusoids");
  const std::size_t n = terms.front().direction.size();
  EllipseCS out{Vec(n, 0.0), Vec(n, 0.0), terms.front().omega};
  for (const Sinusoid& term : terms) {
    add_scaled(out.c, term.direction, std::cos(term.phi));
    add_scaled(out.s, term.direction, std::sin(term.phi));
  }
  return out;
}

Vec eval_cs(const EllipseCS& e, double t) {
  check_time(t, "eval_cs");
  if (e.c.size() != e.s.size())
    throw std::invalid_argument("eval_cs: c and s dimensions differ");
  const double phase = e.omega * t;
  Vec out = scaled(e.c, std::sin(phase));
  add_scaled(out, e.s, std::cos(phase));
  return out;
}

double psi_from_cs(const Vec& c, const Vec& s) {
  if (c.size() != s.size())
    throw std::invalid_argument("psi_from_cs: c and s dimensions differ");
  const double cross = 2.0 * dot(c, s);
  const double diff = dot(c, c) - dot(s, s);
  if (cross == 0.0 && diff == 0.0) return 0.0;  // circle or zero: any psi works
  double two_psi = std::atan2(cross, diff);
  // atan2 lands in (-pi, pi] except for a signed zero in the first argument,
  // which can produce exactly -pi; fold that onto +pi to keep psi in the
  // half-open right half-plane.
  if (two_psi <= -std::numbers::pi) two_psi = std::numbers::pi;
  return 0.5 * two_psi;
}

EllipseAB ab_from_cs(const EllipseCS& e) {
  if (e.c.size() != e.s.size())
    throw std::invalid_argument("ab_from_cs: c and s dimensions differ");
  const double psi = psi_from_cs(e.c, e.s);
  const double cp = std::cos(psi);
  const double sp = std::sin(psi);
  const std::size_t n = e.c.size();
  EllipseAB out{Vec(n), Vec(n), psi, e.omega};
  for (std::size_t i = 0; i < n; ++i) {
    out.a[i] = e.c[i] * cp + e.s[i] * sp;
    out.b[i] = -e.c[i] * sp + e.s[i] * cp;
  }
  // <a,b> = 0 in exact arithmetic. For a degenerate (near-linear) ellipse the
  // rounded b is noise with no preferred direction, so project out its
  // along-a part; this changes b by O(eps*|b|) and restores orthogonality at
  // rounding level without altering the exact-arithmetic value.
  const double aa = dot(out.a, out.a);
  if (aa > 0.0) add_scaled(out.b, out.a, -dot(out.a, out.b) / aa);
  return out;
}

Vec eval_ab(const EllipseAB& e, double t) {
  check_time(t, "eval_ab");
  if (e.a.size() != e.b.size())
    throw std::invalid_argument("eval_ab: a and b dimensions differ");
  const double phase = e.omega * t + e.psi;
  Vec out = scaled(e.a, std::sin(phase));
  add_scaled(out, e.b, std::cos(phase));
  return out;
}

Polarization classify_polarization(const EllipseAB& e, double tol_rel,
                                   double tol_abs) {
  if (!(tol_rel > 0.0 && tol_rel < 1.0))
    throw std::invalid_argument(
        "classify_polarization: tol_rel must be in (0, 1)");
  const double na = modulus(e.a);
  const double nb = modulus(e.b);
  PolarizationKind kind = PolarizationKind::Elliptical;
  if (na <= tol_abs)
    kind = PolarizationKind::Zero;
  else if (nb <= tol_rel * na)
    kind = PolarizationKind::Linear;
  else if (na - nb <= tol_rel * na)
    kind = PolarizationKind::Circular;
  return Polarization{kind, tol_rel};
}

double planarity_residual(std::span<const Vec> samples, const EllipseCS& e) {
  const std::size_t n = e.c.size();
  if (e.s.size() != n)
    throw std::invalid_argument("planarity_residual: c and s dimensions differ");
  for (const Vec& x : samples)
    if (x.size() != n)
      throw std::invalid_argument(
          "planarity_residual: sample dimension does not match component");

  // Orthonormal basis of span{c, s}; directions whose Gram-Schmidt remainder
  // is negligible relative to the input are dropped (rank awareness).
  std::vector<Vec> basis;
  const double nc = modulus(e.c);
  if (nc > 0.0) basis.push_back(scaled(e.c, 1.0 / nc));
  const double ns = modulus(e.s);
  if (ns > 0.0) {
    Vec r = e.s;
    if (!basis.empty()) add_scaled(r, basis.front(), -dot(r, basis.front()));
    const double nr = modulus(r);
    if (nr > 1e-12 * ns) basis.push_back(scaled(r, 1.0 / nr));
  }

  double worst = 0.0;
  for (const Vec& x : samples) {
    Vec r = x;
    for (const Vec& q : basis) add_scaled(r, q, -dot(r, q));
    worst = std::max(worst, modulus(r));
  }
  return worst;
}

}  // namespace ellspec
