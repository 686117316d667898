#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "ellspec/rng.hpp"
#include "ellspec/spectrum.hpp"
#include "test_util.hpp"

using namespace ellspec;
using namespace elltest;

namespace {

constexpr double kPi = std::numbers::pi;

Mat random_samples(Sampler& rng, std::size_t m_count, std::size_t n) {
  Mat out(m_count, Vec(n));
  for (Vec& row : out)
    for (double& x : row) x = rng.uniform(-2.0, 2.0);
  return out;
}

double l2(const ComplexSeries& x) {
  double acc = 0.0;
  for (const auto& v : x) acc += std::norm(v);
  return std::sqrt(acc);
}

}  // namespace

TEST_CASE("unitary_dft: constant, delta, and alternating series") {
  const ComplexSeries constant{{1, 0}, {1, 0}, {1, 0}, {1, 0}};
  CHECK(max_diff(unitary_dft(constant),
                 ComplexSeries{{2, 0}, {0, 0}, {0, 0}, {0, 0}}) <= 1e-15);

  const ComplexSeries delta{{1, 0}, {0, 0}, {0, 0}, {0, 0}};
  CHECK(max_diff(unitary_dft(delta),
                 ComplexSeries{{0.5, 0}, {0.5, 0}, {0.5, 0}, {0.5, 0}}) <=
        1e-15);

  const ComplexSeries sine{{0, 0}, {1, 0}, {0, 0}, {-1, 0}};
  CHECK(max_diff(unitary_dft(sine),
                 ComplexSeries{{0, 0}, {0, -1}, {0, 0}, {0, 1}}) <= 1e-15);

  CHECK_THROWS_AS(unitary_dft({}), std::invalid_argument);
}

TEST_CASE("unitary_idft inverts unitary_dft") {
  CHECK(max_diff(unitary_idft({{2, 0}, {0, 0}, {0, 0}, {0, 0}}),
                 ComplexSeries{{1, 0}, {1, 0}, {1, 0}, {1, 0}}) <= 1e-15);
  CHECK(max_diff(unitary_idft({{0, 0}, {0, 0}, {0, 0}, {0, 0}}),
                 ComplexSeries{{0, 0}, {0, 0}, {0, 0}, {0, 0}}) == 0.0);

  Sampler rng(53);
  ComplexSeries x(64);
  for (auto& v : x) v = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  CHECK(max_diff(unitary_idft(unitary_dft(x)), x) <= 1e-12);
  CHECK_THROWS_AS(unitary_idft({}), std::invalid_argument);
}

TEST_CASE("unitary_dft is an isometry and conjugate-symmetric on real input") {
  Sampler rng(59);
  for (std::size_t m_count : {1u, 2u, 7u, 64u}) {
    ComplexSeries x(m_count);
    for (auto& v : x) v = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const ComplexSeries f = unitary_dft(x);
    CHECK(std::abs(l2(f) - l2(x)) <= 1e-12 * std::max(l2(x), 1e-30));

    ComplexSeries real(m_count);
    for (auto& v : real) v = {rng.uniform(-1.0, 1.0), 0.0};
    const ComplexSeries fr = unitary_dft(real);
    for (std::size_t u = 1; u < m_count; ++u)
      CHECK(std::abs(fr[m_count - u] - std::conj(fr[u])) <= 1e-12);
  }
}

TEST_CASE("ellipse_spectrum: on-bin sine recovers the tone exactly once") {
  const std::size_t m_count = 8;
  Mat samples(m_count, Vec(2));
  for (std::size_t m = 0; m < m_count; ++m) {
    const double th = 2.0 * kPi * static_cast<double>(m) / 8.0;
    samples[m][0] = std::sin(th);
    samples[m][1] = 2.0 * std::sin(th);
  }
  const EllipseSpectrum spec = ellipse_spectrum({samples, std::nullopt});

  REQUIRE(spec.bins.size() == 3);
  REQUIRE(spec.nyquist.has_value());
  CHECK(max_diff(spec.bins[0].component.a, Vec{1.0, 2.0}) <= 1e-14);
  CHECK(max_abs(spec.bins[0].component.b) <= 1e-14);
  CHECK(std::abs(spec.bins[0].component.psi) <= 1e-14);
  CHECK(max_abs(spec.dc) <= 1e-14);
  CHECK(max_abs(*spec.nyquist) <= 1e-14);
  for (std::size_t i = 1; i < spec.bins.size(); ++i) {
    CHECK(max_abs(spec.bins[i].component.a) <= 1e-14);
    CHECK(max_abs(spec.bins[i].component.b) <= 1e-14);
  }

  // Independent least-squares projection oracle for the populated bin.
  const SinCosFit fit = lsq_sincos(samples, 1);
  Vec oa, ob;
  double opsi = 0.0;
  oracle_ab(fit.c, fit.s, oa, ob, opsi);
  CHECK(max_diff(spec.bins[0].component.a, oa) <= 1e-12);
  CHECK(max_diff(spec.bins[0].component.b, ob) <= 1e-12);
  CHECK(std::abs(spec.bins[0].component.psi - opsi) <= 1e-12);
}

TEST_CASE("ellipse_spectrum: constant signal is pure DC") {
  const Vec value{3.0, -1.0, 4.0};
  const EllipseSpectrum spec =
      ellipse_spectrum({Mat(12, value), std::nullopt});
  CHECK(max_diff(spec.dc, value) <= 1e-14);
  for (const SpectrumBin& bin : spec.bins) {
    CHECK(max_abs(bin.component.a) <= 1e-14);
    CHECK(max_abs(bin.component.b) <= 1e-14);
  }
  CHECK(max_abs(*spec.nyquist) <= 1e-14);
}

TEST_CASE("ellipse_spectrum: quarter-phase pair classifies circular") {
  const std::size_t m_count = 16;
  Mat samples(m_count, Vec(3, 0.0));
  for (std::size_t m = 0; m < m_count; ++m) {
    const double th = 2.0 * kPi * static_cast<double>(m) / 16.0;
    samples[m][0] = std::cos(th);
    samples[m][1] = std::sin(th);
  }
  const EllipseSpectrum spec = ellipse_spectrum({samples, std::nullopt});
  const EllipseAB& tone = spec.bins[0].component;
  CHECK(modulus(tone.a) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(modulus(tone.b) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(classify_polarization(tone).kind == PolarizationKind::Circular);
}

TEST_CASE("ellipse_spectrum: bin metadata and input validation") {
  Sampler rng(61);
  const Mat samples = random_samples(rng, 9, 2);
  EllipseSpectrum spec = ellipse_spectrum({samples, 0.5});
  CHECK(spec.n_samples == 9);
  CHECK(spec.dim == 2);
  CHECK(spec.bins.size() == 4);  // ceil(9/2)-1
  CHECK(!spec.nyquist.has_value());
  CHECK(bin_freq_cycles(spec.bins[2]) == 3.0);
  CHECK(*bin_freq_hz(spec, spec.bins[2]) ==
        doctest::Approx(3.0 / (9.0 * 0.5)).epsilon(1e-15));
  CHECK(spec.bins[1].component.omega ==
        doctest::Approx(2.0 * kPi * 2.0 / 9.0).epsilon(1e-15));

  CHECK_THROWS_AS(ellipse_spectrum({Mat{}, std::nullopt}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ellipse_spectrum({Mat{{1.0, 2.0}, {1.0}}, std::nullopt}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ellipse_spectrum({Mat{{1.0}}, -1.0}),
                  std::invalid_argument);
}

TEST_CASE("synthesize_spectrum: DC-only spectrum repeats the DC vector") {
  EllipseSpectrum spec;
  spec.n_samples = 4;
  spec.dim = 2;
  spec.dc = {1.0, 2.0};
  const VectorSignal sig = synthesize_spectrum(spec);
  REQUIRE(sig.size() == 4);
  for (const Vec& row : sig.samples) CHECK(row == Vec{1.0, 2.0});
}

TEST_CASE("synthesize_spectrum: single unit bin reproduces the sine") {
  EllipseSpectrum spec;
  spec.n_samples = 8;
  spec.dim = 2;
  spec.dc = {0.0, 0.0};
  spec.bins.push_back(
      {1, EllipseAB{{1.0, 0.0}, {0.0, 0.0}, 0.0, 2.0 * kPi / 8.0}});
  const VectorSignal sig = synthesize_spectrum(spec);
  for (std::size_t m = 0; m < 8; ++m) {
    CHECK(sig.samples[m][0] ==
          doctest::Approx(std::sin(2.0 * kPi * m / 8.0)).epsilon(1e-14));
    CHECK(sig.samples[m][1] == 0.0);
  }
}

TEST_CASE("analysis/synthesis round trip at assorted sizes") {
  Sampler rng(67);
  for (std::size_t m_count : {1u, 2u, 7u, 8u, 64u}) {
    for (std::size_t n : {2u, 3u, 5u}) {
      const Mat samples = random_samples(rng, m_count, n);
      double scale = 0.0;
      for (const Vec& row : samples) scale = std::max(scale, max_abs(row));
      const VectorSignal back =
          synthesize_spectrum(ellipse_spectrum({samples, std::nullopt}));
      CHECK(max_diff(back.samples, samples) <= 1e-10 * std::max(scale, 1e-30));
    }
  }
}

TEST_CASE("synthesize_spectrum validates structure") {
  EllipseSpectrum spec;
  spec.n_samples = 8;
  spec.dim = 2;
  spec.dc = {0.0, 0.0};
  spec.bins.push_back(
      {5, EllipseAB{{1.0, 0.0}, {0.0, 0.0}, 0.0, 1.0}});
  CHECK_THROWS_WITH_AS(synthesize_spectrum(spec),
                       doctest::Contains("out of range"),
                       std::invalid_argument);

  spec.bins.clear();
  spec.bins.push_back({1, EllipseAB{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, 0.0, 1.0}});
  CHECK_THROWS_AS(synthesize_spectrum(spec), std::invalid_argument);

  spec.bins.clear();
  spec.n_samples = 7;
  spec.nyquist = Vec{1.0, 0.0};
  CHECK_THROWS_AS(synthesize_spectrum(spec), std::invalid_argument);

  spec.nyquist.reset();
  spec.dc = {1.0};
  CHECK_THROWS_AS(synthesize_spectrum(spec), std::invalid_argument);
}

TEST_CASE("spectrum bins satisfy the canonical-form invariants") {
  Sampler rng(71);
  const Mat samples = random_samples(rng, 32, 3);
  const EllipseSpectrum spec = ellipse_spectrum({samples, std::nullopt});
  for (const SpectrumBin& bin : spec.bins) {
    const EllipseAB& e = bin.component;
    const double na = modulus(e.a);
    const double nb = modulus(e.b);
    CHECK(std::abs(dot(e.a, e.b)) <= 1e-10 * std::max(na * nb, 1e-30));
    CHECK(na * na >= nb * nb - 1e-12 * na * na);
    CHECK(e.psi > -kPi / 2.0);
    CHECK(e.psi <= kPi / 2.0);
  }
}
