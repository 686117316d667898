#include "ellspec/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ellspec/vecops.hpp"

namespace ellspec {

double Sampler::normal() {
  const double u1 = 1.0 - uniform01();  // (0, 1]: keeps the log finite
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Vec Sampler::unit_vector(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("unit_vector: dimension must be positive");
  Vec v(n);
  for (;;) {
    for (double& x : v) x = normal();
    const double m = modulus(v);
    if (m > 1e-12) {
      for (double& x : v) x /= m;
      return v;
    }
  }
}

Sinusoid Sampler::sinusoid(std::size_t dim, double omega) {
  Sinusoid out;
  out.direction = unit_vector(dim);
  const double amplitude = uniform(0.5, 1.5);
  for (double& x : out.direction) x *= amplitude;
  out.omega = omega;
  out.phi = uniform(0.0, 2.0 * std::numbers::pi);
  return out;
}

}  // namespace ellspec
