// src/matrix.cc

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

#include "gscsim/matrix.h"

#include <cmath>
#include <string>

#include "gscsim/errors.h"
#include "gscsim/kernels.h"

namespace gscsim {

namespace {

[[noreturn]] void shape_error(const char* what, std::size_t a, std::size_t b) {
  throw DimensionError(std::string(what) + ": " + std::to_string(a) +
                       " vs " + std::to_string(b));
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool Matrix::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) shape_error("multiply: inner dims", a.cols(), b.rows());
  const auto& k = kernels::active();
  Matrix c(a.rows(), b.cols());
  // c(:,j) = sum_l b(l,j) * a(:,l); every axpy runs on a contiguous column.
  for (std::size_t j = 0; j < b.cols(); ++j) {
    double* cj = c.col(j);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      k.axpy(b(l, j), a.col(l), cj, a.rows());
    }
  }
  return c;
}

Matrix multiply_tn(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) shape_error("multiply_tn: inner dims", a.rows(), b.rows());
  const auto& k = kernels::active();
  Matrix c(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < a.cols(); ++i) {
      c(i, j) = k.dot(a.col(i), b.col(j), a.rows());
    }
  }
  return c;
}

Vector multiply(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) shape_error("multiply: matvec dims", a.cols(), x.size());
  const auto& k = kernels::active();
  Vector y(a.rows(), 0.0);
  for (std::size_t l = 0; l < a.cols(); ++l) {
    k.axpy(x[l], a.col(l), y.data(), a.rows());
  }
  return y;
}

Vector multiply_tn(const Matrix& a, const Vector& x) {
  if (a.rows() != x.size()) shape_error("multiply_tn: matvec dims", a.rows(), x.size());
  const auto& k = kernels::active();
  Vector y(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) {
    y[i] = k.dot(a.col(i), x.data(), a.rows());
  }
  return y;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) t(j, i) = a(i, j);
  }
  return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    shape_error("operator+: shapes", a.size(), b.size());
  }
  Matrix c = a;
  const auto& k = kernels::active();
  k.axpy(1.0, b.data(), c.data(), c.size());
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    shape_error("operator-: shapes", a.size(), b.size());
  }
  Matrix c = a;
  const auto& k = kernels::active();
  k.axpy(-1.0, b.data(), c.data(), c.size());
  return c;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) shape_error("operator-: lengths", a.size(), b.size());
  Vector c = a;
  kernels::active().axpy(-1.0, b.data(), c.data(), c.size());
  return c;
}

double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) shape_error("dot: lengths", a.size(), b.size());
  return kernels::active().dot(a.data(), b.data(), a.size());
}

double norm2(const Vector& a) {
  return std::sqrt(kernels::active().sum_sq(a.data(), a.size()));
}

void axpy(double alpha, const Vector& x, Vector& y) {
  if (x.size() != y.size()) shape_error("axpy: lengths", x.size(), y.size());
  kernels::active().axpy(alpha, x.data(), y.data(), x.size());
}

void scale(double alpha, Vector& x) {
  kernels::active().scal(alpha, x.data(), x.size());
}

double frobenius_norm(const Matrix& a) {
  return std::sqrt(kernels::active().sum_sq(a.data(), a.size()));
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double v = std::fabs(a.data()[i]);
    if (v > m) m = v;
  }
  return m;
}

double max_abs(const Vector& a) {
  double m = 0.0;
  for (double v : a) {
    const double av = std::fabs(v);
    if (av > m) m = av;
  }
  return m;
}

}  // namespace gscsim
