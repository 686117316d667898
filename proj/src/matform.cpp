#include "ellspec/matform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ellspec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kRootTol = 1e-12;

void check_root(const MatrixRoot& root, const char* who) {
  if (root.dim == 0 || root.matrix.size() != root.dim)
    throw std::invalid_argument(std::string(who) + ": malformed matrix root");
  for (const Vec& row : root.matrix)
    if (row.size() != root.dim)
      throw std::invalid_argument(std::string(who) +
                                  ": matrix root is not square");
  if (root_residual(root.matrix) > kRootTol)
    throw std::invalid_argument(std::string(who) +
                                ": matrix does not square to -I");
}

}  // namespace

double root_residual(const Mat& matrix) {
  const Mat square = mat_mul(matrix, matrix);
  double worst = 0.0;
  for (std::size_t r = 0; r < square.size(); ++r)
    for (std::size_t c = 0; c < square[r].size(); ++c) {
      const double want = r == c ? -1.0 : 0.0;
      worst = std::max(worst, std::abs(square[r][c] - want));
    }
  return worst;
}

MatrixRoot canonical_root(std::size_t n) {
  if (n == 0)
    throw std::invalid_argument("canonical_root: dimension must be positive");
  if (n % 2 != 0)
    throw std::invalid_argument(
        "canonical_root: no real matrix root of -1 exists in odd dimension " +
        std::to_string(n));
  Mat j(n, Vec(n, 0.0));
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    j[k][k + 1] = -1.0;
    j[k + 1][k] = 1.0;
  }
  return MatrixRoot{n, std::move(j)};
}

MatrixRoot root_from_planes(std::span<const PlanePair> pairs) {
  if (pairs.empty())
    throw std::invalid_argument("root_from_planes: no plane pairs given");
  const std::size_t n = pairs.front().u.size();
  std::vector<const Vec*> frame;
  frame.reserve(2 * pairs.size());
  for (const PlanePair& pair : pairs) {
    if (pair.u.size() != n || pair.v.size() != n)
      throw std::invalid_argument(
          "root_from_planes: plane pair dimensions differ");
    frame.push_back(&pair.u);
    frame.push_back(&pair.v);
  }
  if (frame.size() != n)
    throw std::invalid_argument(
        "root_from_planes: " + std::to_string(pairs.size()) +
        " pairs span " + std::to_string(frame.size()) +
        " directions but the space has dimension " + std::to_string(n) +
        "; need exactly N/2 pairs");

  double gram_residual = 0.0;
  for (std::size_t i = 0; i < frame.size(); ++i)
    for (std::size_t k = i; k < frame.size(); ++k) {
      const double want = i == k ? 1.0 : 0.0;
      gram_residual =
          std::max(gram_residual, std::abs(dot(*frame[i], *frame[k]) - want));
    }
  if (gram_residual > 1e-10)
    throw std::invalid_argument(
        "root_from_planes: vectors are not orthonormal (Gram residual " +
        std::to_string(gram_residual) + ")");

  Mat j(n, Vec(n, 0.0));
  for (const PlanePair& pair : pairs)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        j[r][c] += pair.v[r] * pair.u[c] - pair.u[r] * pair.v[c];
  return MatrixRoot{n, std::move(j)};
}

Mat generalized_exp(const MatrixRoot& root, double theta) {
  check_root(root, "generalized_exp");
  if (!std::isfinite(theta))
    throw std::invalid_argument("generalized_exp: non-finite angle");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Mat out(root.dim, Vec(root.dim));
  for (std::size_t r = 0; r < root.dim; ++r)
    for (std::size_t k = 0; k < root.dim; ++k)
      out[r][k] = root.matrix[r][k] * s + (r == k ? c : 0.0);
  return out;
}

Mat matrix_dft(const VectorSignal& sig, const MatrixRoot& root) {
  check_root(root, "matrix_dft");
  if (sig.samples.empty())
    throw std::invalid_argument("matrix_dft: empty signal");
  if (sig.dim() != root.dim)
    throw std::invalid_argument(
        "matrix_dft: signal dimension " + std::to_string(sig.dim()) +
        " does not match root dimension " + std::to_string(root.dim));
  const std::size_t m_count = sig.size();
  const std::size_t n = root.dim;
  for (const Vec& row : sig.samples)
    if (row.size() != n)
      throw std::invalid_argument("matrix_dft: ragged signal");

  std::vector<double> cos_tab(m_count), sin_tab(m_count);
  for (std::size_t k = 0; k < m_count; ++k) {
    const double angle = kTwoPi * static_cast<double>(k) /
                         static_cast<double>(m_count);
    cos_tab[k] = std::cos(angle);
    sin_tab[k] = std::sin(angle);
  }
  Mat rotated(m_count);
  for (std::size_t m = 0; m < m_count; ++m)
    rotated[m] = mat_vec(root.matrix, sig.samples[m]);

  const double scale = 1.0 / std::sqrt(static_cast<double>(m_count));
  Mat out(m_count, Vec(n, 0.0));
  for (std::size_t u = 0; u < m_count; ++u) {
    Vec& acc = out[u];
    for (std::size_t m = 0; m < m_count; ++m) {
      const std::size_t k = (m * u) % m_count;
      // exp(J * -angle) = I*cos(angle) - J*sin(angle)
      for (std::size_t i = 0; i < n; ++i)
        acc[i] += cos_tab[k] * sig.samples[m][i] - sin_tab[k] * rotated[m][i];
    }
    for (double& v : acc) v *= scale;
  }
  return out;
}

VectorSignal matrix_idft(const Mat& coeffs, const MatrixRoot& root) {
  check_root(root, "matrix_idft");
  if (coeffs.empty())
    throw std::invalid_argument("matrix_idft: empty coefficient matrix");
  const std::size_t m_count = coeffs.size();
  const std::size_t n = root.dim;
  for (const Vec& row : coeffs)
    if (row.size() != n)
      throw std::invalid_argument(
          "matrix_idft: coefficient dimension does not match root dimension");

  std::vector<double> cos_tab(m_count), sin_tab(m_count);
  for (std::size_t k = 0; k < m_count; ++k) {
    const double angle = kTwoPi * static_cast<double>(k) /
                         static_cast<double>(m_count);
    cos_tab[k] = std::cos(angle);
    sin_tab[k] = std::sin(angle);
  }
  Mat rotated(m_count);
  for (std::size_t u = 0; u < m_count; ++u)
    rotated[u] = mat_vec(root.matrix, coeffs[u]);

  const double scale = 1.0 / std::sqrt(static_cast<double>(m_count));
  VectorSignal out;
  out.samples.assign(m_count, Vec(n, 0.0));
  for (std::size_t m = 0; m < m_count; ++m) {
    Vec& acc = out.samples[m];
    for (std::size_t u = 0; u < m_count; ++u) {
      const std::size_t k = (m * u) % m_count;
      for (std::size_t i = 0; i < n; ++i)
        acc[i] += cos_tab[k] * coeffs[u][i] + sin_tab[k] * rotated[u][i];
    }
    for (double& v : acc) v *= scale;
  }
  return out;
}

}  // namespace ellspec
