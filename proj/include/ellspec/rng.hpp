#pragma once

// Seeded random draws for the simulator. std::mt19937_64 has a pinned
// bitstream, and every mapping from raw 64-bit words to doubles is written
// out here rather than delegated to std::<distribution>, whose outputs are
// implementation-defined. A seed therefore reproduces identical trajectories
// across platforms and standard libraries.

#include <cstdint>
#include <random>

#include "ellspec/ellipse.hpp"

namespace ellspec {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1): top 53 bits of one engine word.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal, Box-Muller cosine branch (two engine words per value).
  double normal();

  /// Uniform direction on the unit sphere in R^n (n normalized normals).
  Vec unit_vector(std::size_t n);

  /// One random oscillation: direction uniform on the sphere, amplitude
  /// uniform on [0.5, 1.5), phase uniform on [0, 2*pi). Consumes, in order:
  /// dim normal draws, one amplitude draw, one phase draw.
  Sinusoid sinusoid(std::size_t dim, double omega);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ellspec
