#pragma once

// Per-frequency ellipse description of uniformly sampled vector signals.
//
// The transform pair is the unitary DFT (1/sqrt(M) scaling in both
// directions). For a real-valued component series the coefficients at u and
// M-u are conjugates, and their combined contribution to the signal is
//   c_u*sin(2*pi*u*m/M) + s_u*cos(2*pi*u*m/M)
// with c_u = -(2/sqrt(M))*Im F[u] and s_u = (2/sqrt(M))*Re F[u]. Applied
// component-wise to an N-dimensional signal this yields one ellipse per bin
// u = 1..ceil(M/2)-1, plus the two bins that do not pair up: the DC vector
// (u = 0) and, for even M, the Nyquist alternation (u = M/2).

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "ellspec/ellipse.hpp"

namespace ellspec {

using ComplexSeries = std::vector<std::complex<double>>;

/// M uniformly spaced samples, each an N-vector (one row per sample).
/// When `sample_interval` is absent, frequencies are in cycles per record.
struct VectorSignal {
  Mat samples;
  std::optional<double> sample_interval;

  std::size_t size() const { return samples.size(); }
  std::size_t dim() const {
    return samples.empty() ? 0 : samples.front().size();
  }
};

/// One paired-coefficient bin. The component's omega is 2*pi*u/M, i.e. the
/// phase advance per record; evaluating it at integer t = m reproduces the
/// bin's contribution to sample m.
struct SpectrumBin {
  std::size_t index = 0;
  EllipseAB component;
};

/// Complete frequency-domain description of a sampled vector signal:
/// DC + one ellipse per bin + optional Nyquist alternation. Losslessly
/// resynthesizable via synthesize_spectrum.
struct EllipseSpectrum {
  std::size_t n_samples = 0;
  std::size_t dim = 0;
  Vec dc;
  std::vector<SpectrumBin> bins;        // exactly ceil(M/2)-1 entries
  std::optional<Vec> nyquist;           // present iff n_samples is even
  std::optional<double> sample_interval;
};

/// F[u] = (1/sqrt(M)) sum_m x[m] exp(-i*2*pi*m*u/M). Direct O(M^2) summation;
/// intended for desk-scale M (<= a few thousand).
ComplexSeries unitary_dft(const ComplexSeries& x);

/// Inverse of unitary_dft: f[m] = (1/sqrt(M)) sum_u F[u] exp(+i*2*pi*m*u/M).
ComplexSeries unitary_idft(const ComplexSeries& f);

/// Analyze a real vector signal into its ellipse spectrum. Each of the N
/// component series is transformed independently; results do not depend on
/// any execution order.
EllipseSpectrum ellipse_spectrum(const VectorSignal& sig);

/// Reconstruct the signal: f[m] = dc + sum_bins eval_ab(component, m)
/// + nyquist*(-1)^m. Exact inverse of ellipse_spectrum up to rounding.
VectorSignal synthesize_spectrum(const EllipseSpectrum& spec);

/// Frequency of a bin in cycles per record (equal to its index).
double bin_freq_cycles(const SpectrumBin& bin);

/// Frequency in hertz, when the spectrum carries a sample interval.
std::optional<double> bin_freq_hz(const EllipseSpectrum& spec,
                                  const SpectrumBin& bin);

}  // namespace ellspec
