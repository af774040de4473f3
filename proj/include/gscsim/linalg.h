// gscsim/linalg.h

// Copyright 2026  The gscsim authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

// Dense real factorizations and subspace utilities, self-contained on top
// of the vector kernels.  Matrices here are small (a few hundred rows at
// most), so the algorithms favor accuracy and simplicity: Householder QR,
// cyclic Jacobi eigensolver, one-sided Jacobi singular values.
//
// Every rank decision uses the same cutoff: a pivot counts as zero when it
// falls below kRankTol times the largest pivot.

#ifndef GSCSIM_LINALG_H_
#define GSCSIM_LINALG_H_

#include <cstddef>
#include <vector>

#include "gscsim/matrix.h"

namespace gscsim {
namespace linalg {

inline constexpr double kRankTol = 1e-10;

/// Thin QR: a (m x n, m >= n) = q * r with q m x n orthonormal and r
/// n x n upper triangular, diag(r) >= 0.
struct QRFactors {
  Matrix q;
  Matrix r;
};

QRFactors qr_factor(const Matrix& a);

/// Column-pivoted Householder QR with rank revealing:
/// a * P = q * r, q m x rank orthonormal, r rank x n upper trapezoidal.
/// perm[j] is the source column of pivot j.
struct PivotedQR {
  Matrix q;
  Matrix r;
  std::vector<std::size_t> perm;
  std::size_t rank = 0;
};

PivotedQR qr_factor_pivoted(const Matrix& a, double rel_tol = kRankTol);

/// Semi-unitary complement of a unit vector: the returned N x (N-1)
/// matrix V satisfies V^T v = 0 and V^T V = I.  Deterministic: v is
/// completed to a Householder basis and the first column dropped.
Matrix orthonormal_complement(const Vector& v);

/// Symmetric eigendecomposition, eigenvalues sorted descending and
/// vectors' column j paired with values[j].
struct SymEig {
  Vector values;
  Matrix vectors;
};

SymEig sym_eig_desc(const Matrix& s);

/// Leading r left singular vectors of z ((N-1) x K), computed through the
/// K x K Gram matrix since K is small.  Throws RankError if r exceeds the
/// numerical rank.
Matrix top_left_singular_vectors(const Matrix& z, std::size_t r);

/// Minimum-norm minimizer of ||a*x - b||.  Full column rank solves
/// through QR; rank-deficient inputs go through a complete orthogonal
/// decomposition so the returned x has the smallest norm among all
/// minimizers.
Vector least_squares_min_norm(const Matrix& a, const Vector& b);

/// Solve a square full-rank system through pivoted QR; throws
/// SingularMatrixError when a pivot falls under the rank cutoff.
Vector solve(const Matrix& a, const Vector& b);

/// Orthogonal projector onto range(m): symmetric, idempotent.
Matrix orthogonal_projector(const Matrix& m);

/// Singular values of c, descending, via one-sided Jacobi.
Vector singular_values(const Matrix& c);

/// Principal angles (radians, ascending) between range(a) and range(b).
/// Inputs are orthonormalized internally; the cosines are the singular
/// values of Qa^T Qb, clamped to [0, 1].
Vector principal_angles(const Matrix& a, const Matrix& b);

}  // namespace linalg
}  // namespace gscsim

#endif  // GSCSIM_LINALG_H_
