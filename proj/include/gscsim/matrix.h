// gscsim/matrix.h

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

#ifndef GSCSIM_MATRIX_H_
#define GSCSIM_MATRIX_H_

#include <cstddef>
#include <vector>

namespace gscsim {

using Vector = std::vector<double>;

/// Dense real matrix, column-major.  Column-major is fixed project-wide:
/// the factorizations and the sampling code all work on contiguous
/// columns so the vector kernels apply directly.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[j * rows_ + i];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[j * rows_ + i];
  }

  double* col(std::size_t j) { return data_.data() + j * rows_; }
  const double* col(std::size_t j) const { return data_.data() + j * rows_; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::size_t size() const { return data_.size(); }

  bool all_finite() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

// Products.  _tn means the first operand enters transposed.
Matrix multiply(const Matrix& a, const Matrix& b);     // a * b
Matrix multiply_tn(const Matrix& a, const Matrix& b);  // a^T * b
Vector multiply(const Matrix& a, const Vector& x);     // a * x
Vector multiply_tn(const Matrix& a, const Vector& x);  // a^T * x
Matrix transpose(const Matrix& a);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Vector operator-(const Vector& a, const Vector& b);

double dot(const Vector& a, const Vector& b);
double norm2(const Vector& a);
void axpy(double alpha, const Vector& x, Vector& y);  // y += alpha*x
void scale(double alpha, Vector& x);

double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);
double max_abs(const Vector& a);

}  // namespace gscsim

#endif  // GSCSIM_MATRIX_H_
