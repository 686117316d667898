#pragma once

// JSON emission and parsing for the file formats the CLI speaks. Emission is
// hand-rolled so field order and numeric formatting are pinned (17
// significant digits, byte-stable); parsing accepts the same schemas.

#include <cstdint>
#include <span>
#include <string>

#include "ellspec/ellipse.hpp"
#include "ellspec/spectrum.hpp"

namespace ellspec {

/// Spectrum document:
/// { n_samples, dim, dc, nyquist?, bins: [ { u, freq_cycles_per_record,
///   freq_hz?, a, b, psi, polarization, power } ] }
/// power is modulus(a)^2 + modulus(b)^2; freq_hz appears only when the
/// spectrum carries a sample interval.
std::string spectrum_to_json(const EllipseSpectrum& spec,
                             double classify_tol_rel = kClassifyTolRel);

/// Inverse of spectrum_to_json. Bin omegas are rebuilt as 2*pi*u/M and the
/// sample interval, when freq_hz is present, as u/(M*freq_hz).
EllipseSpectrum spectrum_from_json(const std::string& text);

/// Parameters document written by the simulator: run settings, the drawn
/// sinusoids, and both component forms plus the classification.
std::string simulation_to_json(std::uint64_t seed, std::size_t samples,
                               std::span<const Sinusoid> terms,
                               const EllipseCS& cs, const EllipseAB& ab,
                               double classify_tol_rel);

/// { a, b, psi, polarization, norm_a, norm_b } for one decomposition.
/// norm_a/norm_b are Euclidean moduli.
std::string decomposition_to_json(const EllipseAB& ab,
                                  double classify_tol_rel);

/// Input document for decomposition: { "c": [...], "s": [...], "omega"? }.
EllipseCS cs_from_json(const std::string& text);

}  // namespace ellspec
