#include "ellspec/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ellspec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Direct summation with a precomputed twiddle table; the index m*u is reduced
// mod M before the table lookup so angles never leave [0, 2*pi).
ComplexSeries dft_impl(const ComplexSeries& x, double sign, const char* who) {
  const std::size_t m_count = x.size();
  if (m_count == 0)
    throw std::invalid_argument(std::string(who) + ": empty series");
  std::vector<std::complex<double>> twiddle(m_count);
  for (std::size_t k = 0; k < m_count; ++k)
    twiddle[k] = std::polar(1.0, sign * kTwoPi * static_cast<double>(k) /
                                     static_cast<double>(m_count));
  const double scale = 1.0 / std::sqrt(static_cast<double>(m_count));
  ComplexSeries out(m_count);
  for (std::size_t u = 0; u < m_count; ++u) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t m = 0; m < m_count; ++m)
      acc += x[m] * twiddle[(m * u) % m_count];
    out[u] = acc * scale;
  }
  return out;
}

void check_signal(const VectorSignal& sig, const char* who) {
  if (sig.samples.empty())
    throw std::invalid_argument(std::string(who) + ": empty signal");
  const std::size_t n = sig.samples.front().size();
  if (n == 0)
    throw std::invalid_argument(std::string(who) + ": zero-dimension samples");
  for (std::size_t m = 0; m < sig.samples.size(); ++m) {
    if (sig.samples[m].size() != n)
      throw std::invalid_argument(std::string(who) + ": sample " +
                                  std::to_string(m) +
                                  " has inconsistent dimension");
    if (!all_finite(sig.samples[m]))
      throw std::invalid_argument(std::string(who) + ": non-finite sample " +
                                  std::to_string(m));
  }
  if (sig.sample_interval && !(*sig.sample_interval > 0.0))
    throw std::invalid_argument(std::string(who) +
                                ": sample interval must be positive");
}

}  // namespace

ComplexSeries unitary_dft(const ComplexSeries& x) {
  return dft_impl(x, -1.0, "unitary_dft");
}

ComplexSeries unitary_idft(const ComplexSeries& f) {
  return dft_impl(f, +1.0, "unitary_idft");
}

EllipseSpectrum ellipse_spectrum(const VectorSignal& sig) {
  check_signal(sig, "ellipse_spectrum");
  const std::size_t m_count = sig.size();
  const std::size_t n_dim = sig.dim();
  const std::size_t half = (m_count + 1) / 2;  // bins are 1..half-1
  const double root_m = std::sqrt(static_cast<double>(m_count));
  const bool even = m_count % 2 == 0;

  EllipseSpectrum out;
  out.n_samples = m_count;
  out.dim = n_dim;
  out.dc = Vec(n_dim, 0.0);
  out.sample_interval = sig.sample_interval;

  Mat bin_c(half > 0 ? half - 1 : 0, Vec(n_dim, 0.0));
  Mat bin_s(bin_c.size(), Vec(n_dim, 0.0));
  Vec nyquist(n_dim, 0.0);

  ComplexSeries series(m_count);
  for (std::size_t j = 0; j < n_dim; ++j) {
    for (std::size_t m = 0; m < m_count; ++m)
      series[m] = {sig.samples[m][j], 0.0};
    const ComplexSeries coeffs = unitary_dft(series);
    out.dc[j] = coeffs[0].real() / root_m;
    for (std::size_t u = 1; u < half; ++u) {
      bin_c[u - 1][j] = -2.0 * coeffs[u].imag() / root_m;
      bin_s[u - 1][j] = 2.0 * coeffs[u].real() / root_m;
    }
    if (even) nyquist[j] = coeffs[m_count / 2].real() / root_m;
  }

  out.bins.reserve(bin_c.size());
  for (std::size_t u = 1; u < half; ++u) {
    const double omega =
        kTwoPi * static_cast<double>(u) / static_cast<double>(m_count);
    out.bins.push_back(SpectrumBin{
        u, ab_from_cs(EllipseCS{std::move(bin_c[u - 1]),
                                std::move(bin_s[u - 1]), omega})});
  }
  if (even) out.nyquist = std::move(nyquist);
  return out;
}

VectorSignal synthesize_spectrum(const EllipseSpectrum& spec) {
  if (spec.n_samples < 1)
    throw std::invalid_argument("synthesize_spectrum: n_samples must be >= 1");
  if (spec.dim < 1)
    throw std::invalid_argument("synthesize_spectrum: dim must be >= 1");
  if (spec.dc.size() != spec.dim)
    throw std::invalid_argument(
        "synthesize_spectrum: dc dimension does not match dim");
  const std::size_t m_count = spec.n_samples;
  const std::size_t half = (m_count + 1) / 2;
  for (const SpectrumBin& bin : spec.bins) {
    if (bin.index < 1 || bin.index >= half)
      throw std::invalid_argument(
          "synthesize_spectrum: bin index " + std::to_string(bin.index) +
          " out of range [1, " + std::to_string(half - 1) + "] for " +
          std::to_string(m_count) + " samples");
    if (bin.component.a.size() != spec.dim ||
        bin.component.b.size() != spec.dim)
      throw std::invalid_argument("synthesize_spectrum: bin " +
                                  std::to_string(bin.index) +
                                  " dimension does not match dim");
  }
  if (spec.nyquist) {
    if (m_count % 2 != 0)
      throw std::invalid_argument(
          "synthesize_spectrum: Nyquist term requires an even sample count");
    if (spec.nyquist->size() != spec.dim)
      throw std::invalid_argument(
          "synthesize_spectrum: Nyquist dimension does not match dim");
  }

  VectorSignal out;
  out.sample_interval = spec.sample_interval;
  out.samples.assign(m_count, spec.dc);
  for (const SpectrumBin& bin : spec.bins)
    for (std::size_t m = 0; m < m_count; ++m)
      add_scaled(out.samples[m], eval_ab(bin.component, static_cast<double>(m)),
                 1.0);
  if (spec.nyquist)
    for (std::size_t m = 0; m < m_count; ++m)
      add_scaled(out.samples[m], *spec.nyquist, m % 2 == 0 ? 1.0 : -1.0);
  return out;
}

double bin_freq_cycles(const SpectrumBin& bin) {
  return static_cast<double>(bin.index);
}

std::optional<double> bin_freq_hz(const EllipseSpectrum& spec,
                                  const SpectrumBin& bin) {
  if (!spec.sample_interval) return std::nullopt;
  return static_cast<double>(bin.index) /
         (static_cast<double>(spec.n_samples) * *spec.sample_interval);
}

}  // namespace ellspec
