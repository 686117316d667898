#pragma once

// Elliptical decomposition of same-frequency vector oscillations.
//
// A single component n*sin(omega*t + phi) oscillates along a fixed line in
// R^N (linear polarization). Any finite sum of such components sharing one
// omega is confined to a plane and can be written two ways:
//
//   c/s form:   f(t) = c*sin(omega*t) + s*cos(omega*t)
//               with c = sum_i n_i*cos(phi_i), s = sum_i n_i*sin(phi_i);
//               c and s are generally not orthogonal.
//
//   a/b form:   f(t) = a*sin(omega*t + psi) + b*cos(omega*t + psi)
//               with a ⟂ b, modulus(a) >= modulus(b), psi in (-pi/2, pi/2].
//
// a and b are the major and minor axes of the ellipse traced by f. The
// aligning phase is psi = atan2(2<c,s>, |c|^2 - |s|^2) / 2, and then
// a = c*cos(psi) + s*sin(psi), b = -c*sin(psi) + s*cos(psi). The quadrant
// handling of atan2 guarantees a is never the minor axis.

#include <cstddef>
#include <span>

#include "ellspec/vecops.hpp"

namespace ellspec {

/// One linearly polarized oscillation. The amplitude is the modulus of
/// `direction` (not necessarily a unit vector); omega must be positive.
struct Sinusoid {
  Vec direction;
  double omega = 1.0;  // rad per unit time
  double phi = 0.0;    // rad
};

/// Single-frequency component in the non-orthogonal sin/cos form.
/// The signal value at t = 0 is `s`.
struct EllipseCS {
  Vec c;
  Vec s;
  double omega = 1.0;
};

/// Canonical form: orthogonal major axis `a` and minor axis `b`, plus the
/// aligning phase psi in (-pi/2, pi/2]. modulus(a) >= modulus(b) always.
/// The signs of a and b follow deterministically from the formulas above;
/// no additional direction normalization is applied, so a may point either
/// way along the major axis.
struct EllipseAB {
  Vec a;
  Vec b;
  double psi = 0.0;
  double omega = 1.0;
};

enum class PolarizationKind { Zero, Linear, Circular, Elliptical };

/// Lowercase name of the category ("zero", "linear", ...).
const char* to_string(PolarizationKind kind);

/// Classification outcome, carrying the relative tolerance that decided it.
struct Polarization {
  PolarizationKind kind;
  double tol_rel;
};

/// Default relative tolerance for algebraic identities.
inline constexpr double kIdentityTolRel = 1e-10;
/// Default relative tolerance for polarization classification.
inline constexpr double kClassifyTolRel = 1e-6;

/// Direct evaluation of sum_i n_i*sin(omega*t + phi_i). All terms must share
/// the dimension and omega. An empty term list yields a zero vector of
/// dimension `dim_if_empty`.
Vec eval_superposition(std::span<const Sinusoid> terms, double t,
                       std::size_t dim_if_empty = 0);

/// Collapse a same-frequency superposition into its c/s form. Requires at
/// least one term (omega is otherwise undefined).
EllipseCS cs_from_sinusoids(std::span<const Sinusoid> terms);

/// c*sin(omega*t) + s*cos(omega*t)
Vec eval_cs(const EllipseCS& e, double t);

/// Aligning phase psi = atan2(2<c,s>, |c|^2 - |s|^2) / 2, mapped into
/// (-pi/2, pi/2]. The degenerate atan2(0, 0) case (a circle, or zero input)
/// returns 0.
double psi_from_cs(const Vec& c, const Vec& s);

/// Canonical major/minor axis extraction. Zero input yields a = b = 0 and
/// psi = 0.
EllipseAB ab_from_cs(const EllipseCS& e);

/// a*sin(omega*t + psi) + b*cos(omega*t + psi)
Vec eval_ab(const EllipseAB& e, double t);

/// Category decision, in order: Zero if modulus(a) <= tol_abs; Linear if
/// modulus(b) <= tol_rel*modulus(a); Circular if the axis moduli agree to
/// tol_rel; otherwise Elliptical. Requires 0 < tol_rel < 1.
Polarization classify_polarization(const EllipseAB& e,
                                   double tol_rel = kClassifyTolRel,
                                   double tol_abs = 0.0);

/// Maximum Euclidean distance of any sample from span{c, s}, computed via a
/// rank-aware orthonormal basis of the span (0-, 1- or 2-dimensional). With
/// c = s = 0 the span is empty and the result is the largest sample modulus.
double planarity_residual(std::span<const Vec> samples, const EllipseCS& e);

}  // namespace ellspec
