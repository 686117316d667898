#pragma once

// Fourier transforms with the imaginary unit replaced by a real matrix root
// of -1: a matrix J with J*J = -I. Such roots exist only in even dimension.
// The exponential generalizes to exp(J*theta) = I*cos(theta) + J*sin(theta),
// an orthogonal rotation along a circular path, and the transform pair keeps
// the familiar form with exp(J*...) applied on the left of each sample
// treated as a column vector.

#include <cstddef>
#include <span>

#include "ellspec/spectrum.hpp"
#include "ellspec/vecops.hpp"

namespace ellspec {

/// A real N x N matrix J with J*J = -I, N even. Construct via canonical_root
/// or root_from_planes; the transform entry points re-validate the root
/// property, so hand-built instances are checked before use.
struct MatrixRoot {
  std::size_t dim = 0;
  Mat matrix;
};

/// Orthonormal 2-frame: unit vectors u, v with <u, v> = 0. N/2 mutually
/// orthonormal pairs determine a root that rotates each plane span{u_k, v_k}
/// a quarter turn.
struct PlanePair {
  Vec u;
  Vec v;
};

/// Max-norm of J*J + I; zero (within rounding) exactly when J is a root of -1.
double root_residual(const Mat& matrix);

/// Block-diagonal root built from n/2 copies of the 2x2 rotation generator
/// [[0, -1], [1, 0]]. Satisfies the root property exactly. Throws for odd n
/// (no real matrix root of -1 exists there) and for n = 0.
MatrixRoot canonical_root(std::size_t n);

/// J = sum_k (v_k u_k^T - u_k v_k^T) over N/2 orthonormal plane pairs, so
/// J u_k = v_k and J v_k = -u_k. The 2*count vectors must be mutually
/// orthonormal (Gram residual <= 1e-10) and span the whole space. Roots built
/// this way are skew-symmetric.
MatrixRoot root_from_planes(std::span<const PlanePair> pairs);

/// exp(J*theta) = I*cos(theta) + J*sin(theta); orthogonal with determinant 1.
Mat generalized_exp(const MatrixRoot& root, double theta);

/// F[u] = (1/sqrt(M)) sum_m exp(J * -2*pi*m*u/M) f[m]. The signal dimension
/// must equal the root dimension.
Mat matrix_dft(const VectorSignal& sig, const MatrixRoot& root);

/// f[m] = (1/sqrt(M)) sum_u exp(J * +2*pi*m*u/M) F[u]; inverse of matrix_dft.
VectorSignal matrix_idft(const Mat& coeffs, const MatrixRoot& root);

}  // namespace ellspec
