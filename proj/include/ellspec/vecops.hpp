#pragma once

// Small dense vector/matrix helpers used throughout the library. Vectors are
// plain std::vector<double>; matrices are rectangular row-major vectors of
// rows. Desk scale only (dimensions in the tens, sample counts in the
// thousands), so no attempt is made at blocking or vectorisation.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ellspec {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

inline double dot(const Vec& x, const Vec& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("dot: dimension mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

/// Euclidean length of a vector.
inline double modulus(const Vec& x) {
  double acc = 0.0;
  for (double v : x) acc += v * v;
  return std::sqrt(acc);
}

inline bool all_finite(const Vec& x) {
  for (double v : x)
    if (!std::isfinite(v)) return false;
  return true;
}

inline Vec scaled(const Vec& x, double k) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * k;
  return out;
}

/// x += k * y
inline void add_scaled(Vec& x, const Vec& y, double k) {
  if (x.size() != y.size())
    throw std::invalid_argument("add_scaled: dimension mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += k * y[i];
}

inline Mat identity(std::size_t n) {
  Mat out(n, Vec(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1.0;
  return out;
}

inline Vec mat_vec(const Mat& m, const Vec& x) {
  Vec out(m.size(), 0.0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (m[r].size() != x.size())
      throw std::invalid_argument("mat_vec: dimension mismatch");
    double acc = 0.0;
    for (std::size_t c = 0; c < x.size(); ++c) acc += m[r][c] * x[c];
    out[r] = acc;
  }
  return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t rows = a.size();
  const std::size_t inner = b.size();
  const std::size_t cols = inner == 0 ? 0 : b.front().size();
  Mat out(rows, Vec(cols, 0.0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (a[r].size() != inner)
      throw std::invalid_argument("mat_mul: dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      const double ark = a[r][k];
      for (std::size_t c = 0; c < cols; ++c) out[r][c] += ark * b[k][c];
    }
  }
  return out;
}

}  // namespace ellspec
