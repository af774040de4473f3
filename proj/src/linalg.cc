// src/linalg.cc

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

#include "gscsim/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gscsim/errors.h"
#include "gscsim/kernels.h"

namespace gscsim {
namespace linalg {

namespace {

constexpr double kSymEigOffTol = 1e-14;
constexpr int kSymEigMaxSweeps = 30;
constexpr int kOneSidedMaxSweeps = 60;

// Reflector for the tail x of a column: u is unit, (I - 2uu^T)x = -sign*||x||*e1.
// Returns the new leading entry -sign*||x||; u is all zero when x is.
double make_householder(const double* x, double* u, std::size_t len) {
  const auto& k = kernels::active();
  const double normx = std::sqrt(k.sum_sq(x, len));
  if (normx == 0.0) {
    for (std::size_t i = 0; i < len; ++i) u[i] = 0.0;
    return 0.0;
  }
  const double sign = (x[0] >= 0.0) ? 1.0 : -1.0;
  for (std::size_t i = 0; i < len; ++i) u[i] = x[i];
  u[0] += sign * normx;
  const double unorm = std::sqrt(k.sum_sq(u, len));
  k.scal(1.0 / unorm, u, len);
  return -sign * normx;
}

// y(tail) -= 2 u (u^T y(tail)) for the tail starting at row `off`.
void apply_householder(const double* u, double* y, std::size_t len) {
  const auto& k = kernels::active();
  const double w = k.dot(u, y, len);
  k.axpy(-2.0 * w, u, y, len);
}

// Accumulate the thin Q (m x qcols) from reflectors stored in columns of
// refl (column k holds the unit reflector of step k in rows k..m-1).
Matrix accumulate_q(const Matrix& refl, std::size_t steps, std::size_t qcols) {
  const std::size_t m = refl.rows();
  Matrix q(m, qcols);
  for (std::size_t j = 0; j < qcols; ++j) q(j, j) = 1.0;
  for (std::size_t k = steps; k-- > 0;) {
    for (std::size_t j = 0; j < qcols; ++j) {
      apply_householder(refl.col(k) + k, q.col(j) + k, m - k);
    }
  }
  return q;
}

double off_diagonal_norm(const Matrix& a) {
  double acc = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != j) acc += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(acc);
}

// tan of the Jacobi rotation angle for the 2x2 [[app, apq], [apq, aqq]].
double jacobi_tangent(double app, double aqq, double apq) {
  const double theta = (aqq - app) / (2.0 * apq);
  if (std::fabs(theta) > 1e150) return 1.0 / (2.0 * theta);
  const double sgn = (theta >= 0.0) ? 1.0 : -1.0;
  return sgn / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
}

Vector back_substitute(const Matrix& r, const Vector& c) {
  const std::size_t n = c.size();
  Vector x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = c[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= r(i, j) * x[j];
    x[i] = acc / r(i, i);
  }
  return x;
}

// Solves r^T t = c with r upper triangular (so r^T lower).
Vector forward_substitute_t(const Matrix& r, const Vector& c) {
  const std::size_t n = c.size();
  Vector t(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = c[i];
    for (std::size_t j = 0; j < i; ++j) acc -= r(j, i) * t[j];
    t[i] = acc / r(i, i);
  }
  return t;
}

}  // namespace

QRFactors qr_factor(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m < n) {
    throw DimensionError("qr_factor: need rows >= cols, got " +
                         std::to_string(m) + " x " + std::to_string(n));
  }
  Matrix work = a;
  Matrix refl(m, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double rkk = make_householder(work.col(k) + k, refl.col(k) + k, m - k);
    work(k, k) = rkk;
    for (std::size_t i = k + 1; i < m; ++i) work(i, k) = 0.0;
    for (std::size_t j = k + 1; j < n; ++j) {
      apply_householder(refl.col(k) + k, work.col(j) + k, m - k);
    }
  }
  QRFactors out;
  out.q = accumulate_q(refl, n, n);
  out.r = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) out.r(i, j) = work(i, j);
  }
  // Sign convention: nonnegative diagonal of r.
  for (std::size_t j = 0; j < n; ++j) {
    if (out.r(j, j) < 0.0) {
      for (std::size_t c = j; c < n; ++c) out.r(j, c) = -out.r(j, c);
      kernels::active().scal(-1.0, out.q.col(j), m);
    }
  }
  return out;
}

PivotedQR qr_factor_pivoted(const Matrix& a, double rel_tol) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t kmax = std::min(m, n);
  const auto& kr = kernels::active();

  Matrix work = a;
  Matrix refl(m, kmax == 0 ? 1 : kmax);
  PivotedQR out;
  out.perm.resize(n);
  std::iota(out.perm.begin(), out.perm.end(), std::size_t{0});

  double max_pivot = 0.0;
  std::size_t rank = 0;
  for (std::size_t k = 0; k < kmax; ++k) {
    // Exact tail norms each step; the matrices are small enough that the
    // classic downdating shortcut is not worth its cancellation risk.
    std::size_t best = k;
    double best_norm2 = -1.0;
    for (std::size_t j = k; j < n; ++j) {
      const double nrm2 = kr.sum_sq(work.col(j) + k, m - k);
      if (nrm2 > best_norm2) {
        best_norm2 = nrm2;
        best = j;
      }
    }
    const double pivot = std::sqrt(std::max(best_norm2, 0.0));
    if (k == 0) max_pivot = pivot;
    if (pivot == 0.0 || pivot < rel_tol * max_pivot) break;
    if (best != k) {
      for (std::size_t i = 0; i < m; ++i) std::swap(work(i, k), work(i, best));
      std::swap(out.perm[k], out.perm[best]);
    }
    const double rkk = make_householder(work.col(k) + k, refl.col(k) + k, m - k);
    work(k, k) = rkk;
    for (std::size_t i = k + 1; i < m; ++i) work(i, k) = 0.0;
    for (std::size_t j = k + 1; j < n; ++j) {
      apply_householder(refl.col(k) + k, work.col(j) + k, m - k);
    }
    rank = k + 1;
  }

  out.rank = rank;
  out.q = accumulate_q(refl, rank, rank);
  out.r = Matrix(rank == 0 ? 1 : rank, n);
  if (rank == 0) return out;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < std::min(rank, j + 1); ++i) {
      out.r(i, j) = work(i, j);
    }
  }
  return out;
}

Matrix orthonormal_complement(const Vector& v) {
  const std::size_t n = v.size();
  const auto& k = kernels::active();
  const double norm = std::sqrt(k.sum_sq(v.data(), n));
  if (std::fabs(norm - 1.0) > 1e-12) {
    throw DimensionError("orthonormal_complement: input is not unit norm");
  }
  // Householder basis containing v: H maps v to -sign(v0)*e1, and its
  // columns 2..N are an orthonormal basis of the complement of v.
  const double sign = (v[0] >= 0.0) ? 1.0 : -1.0;
  Vector u = v;
  u[0] += sign;
  const double unorm = std::sqrt(k.sum_sq(u.data(), n));
  k.scal(1.0 / unorm, u.data(), n);
  Matrix out(n, n - 1);
  for (std::size_t j = 1; j < n; ++j) {
    double* cj = out.col(j - 1);
    k.axpy(-2.0 * u[j], u.data(), cj, n);
    cj[j] += 1.0;
  }
  return out;
}

SymEig sym_eig_desc(const Matrix& s) {
  const std::size_t n = s.rows();
  if (s.cols() != n) {
    throw DimensionError("sym_eig_desc: matrix is not square");
  }
  const double norm_s = frobenius_norm(s);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (std::fabs(s(i, j) - s(j, i)) > 1e-12 * std::max(norm_s, 1e-300)) {
        throw DimensionError("sym_eig_desc: matrix is not symmetric");
      }
    }
  }

  const auto& kr = kernels::active();
  Matrix a = s;
  Matrix vec = Matrix::identity(n);
  const double tol = kSymEigOffTol * norm_s;
  double off = off_diagonal_norm(a);
  int sweep = 0;
  while (off > tol && sweep < kSymEigMaxSweeps) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double t = jacobi_tangent(a(p, p), a(q, q), apq);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;
        kr.rot(a.col(p), a.col(q), c, sn, n);
        for (std::size_t j = 0; j < n; ++j) {
          const double xp = a(p, j);
          const double xq = a(q, j);
          a(p, j) = c * xp - sn * xq;
          a(q, j) = sn * xp + c * xq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        kr.rot(vec.col(p), vec.col(q), c, sn, n);
      }
    }
    off = off_diagonal_norm(a);
    ++sweep;
  }
  if (off > tol) {
    throw NotConvergedError("sym_eig_desc: Jacobi sweeps exhausted", off);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i) > a(j, j);
  });
  SymEig out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = vec(i, order[j]);
  }
  return out;
}

Matrix top_left_singular_vectors(const Matrix& z, std::size_t r) {
  const std::size_t kdim = z.cols();
  if (r < 1 || r > std::min(z.rows(), kdim)) {
    throw DimensionError("top_left_singular_vectors: r out of range");
  }
  const SymEig eig = sym_eig_desc(multiply_tn(z, z));
  const double s0 = std::sqrt(std::max(eig.values[0], 0.0));
  Matrix out(z.rows(), r);
  for (std::size_t j = 0; j < r; ++j) {
    const double sj = std::sqrt(std::max(eig.values[j], 0.0));
    if (sj <= 0.0 || sj < 1e-12 * s0) {
      throw RankError("top_left_singular_vectors: singular value " +
                          std::to_string(j) + " below tolerance",
                      j);
    }
    Vector tj(kdim);
    for (std::size_t i = 0; i < kdim; ++i) tj[i] = eig.vectors(i, j);
    Vector uj = multiply(z, tj);
    kernels::active().scal(1.0 / sj, uj.data(), uj.size());
    for (std::size_t i = 0; i < z.rows(); ++i) out(i, j) = uj[i];
  }
  return out;
}

Vector least_squares_min_norm(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) {
    throw DimensionError("least_squares_min_norm: rhs length mismatch");
  }
  const std::size_t ncols = a.cols();
  const PivotedQR pqr = qr_factor_pivoted(a);
  Vector x(ncols, 0.0);
  if (pqr.rank == 0) return x;
  const Vector c = multiply_tn(pqr.q, b);
  Vector y;
  if (pqr.rank == ncols) {
    y = back_substitute(pqr.r, c);
  } else {
    // Complete orthogonal decomposition: factor the trapezoid's transpose,
    // [R11 R12]^T = Qt Rt, so the minimum-norm solution is Qt Rt^-T c.
    const QRFactors f = qr_factor(transpose(pqr.r));
    y = multiply(f.q, forward_substitute_t(f.r, c));
  }
  for (std::size_t i = 0; i < pqr.perm.size() && i < y.size(); ++i) {
    x[pqr.perm[i]] = y[i];
  }
  return x;
}

Vector solve(const Matrix& a, const Vector& b) {
  if (a.rows() != a.cols() || a.rows() != b.size()) {
    throw DimensionError("solve: need square matrix matching rhs");
  }
  const PivotedQR pqr = qr_factor_pivoted(a);
  if (pqr.rank < a.cols()) {
    throw SingularMatrixError("solve: pivot below tolerance at column " +
                              std::to_string(pqr.rank));
  }
  const Vector y = back_substitute(pqr.r, multiply_tn(pqr.q, b));
  Vector x(b.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[pqr.perm[i]] = y[i];
  return x;
}

Matrix orthogonal_projector(const Matrix& m) {
  const std::size_t n = m.rows();
  const PivotedQR pqr = qr_factor_pivoted(m);
  if (pqr.rank == 0) return Matrix(n, n);
  Matrix p = multiply(pqr.q, transpose(pqr.q));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const double v = 0.5 * (p(i, j) + p(j, i));
      p(i, j) = v;
      p(j, i) = v;
    }
  }
  return p;
}

Vector singular_values(const Matrix& c) {
  Matrix w = (c.rows() >= c.cols()) ? c : transpose(c);
  const std::size_t m = w.rows();
  const std::size_t n = w.cols();
  const auto& kr = kernels::active();
  if (n == 0 || m == 0) return {};
  for (int sweep = 0; sweep < kOneSidedMaxSweeps; ++sweep) {
    bool converged = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double gamma = kr.dot(w.col(i), w.col(j), m);
        if (gamma == 0.0) continue;
        const double alpha = kr.sum_sq(w.col(i), m);
        const double beta = kr.sum_sq(w.col(j), m);
        if (std::fabs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
        converged = false;
        const double t = jacobi_tangent(alpha, beta, gamma);
        const double cc = 1.0 / std::sqrt(1.0 + t * t);
        const double ss = t * cc;
        kr.rot(w.col(i), w.col(j), cc, ss, m);
      }
    }
    if (converged) break;
  }
  Vector s(n);
  for (std::size_t j = 0; j < n; ++j) {
    s[j] = std::sqrt(kr.sum_sq(w.col(j), m));
  }
  std::sort(s.begin(), s.end(), std::greater<double>());
  return s;
}

Vector principal_angles(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw DimensionError("principal_angles: ambient dimensions differ");
  }
  const PivotedQR qa = qr_factor_pivoted(a);
  const PivotedQR qb = qr_factor_pivoted(b);
  if (qa.rank == 0 || qb.rank == 0) return {};
  const Vector s = singular_values(multiply_tn(qa.q, qb.q));
  Vector angles(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    angles[i] = std::acos(std::clamp(s[i], 0.0, 1.0));
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

}  // namespace linalg
}  // namespace gscsim
