// src/gsc.cc

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

#include "gscsim/gsc.h"

#include <utility>

#include "gscsim/linalg.h"

namespace gscsim {

ReducedWeights reduced_weights(const Matrix& z, const Psi& psi,
                               const Vector& d) {
  Matrix design = multiply_tn(z, psi.psi);  // K x R, rows are samples
  return ReducedWeights{linalg::least_squares_min_norm(design, d)};
}

FullFilter assemble_full_filter(const SoIBasis& soi, const Psi& psi,
                                const ReducedWeights& wa) {
  Vector aux = multiply(psi.psi, wa.w_a);
  Vector w = soi.v - multiply(soi.v_perp, aux);
  return FullFilter{std::move(w), psi.spec};
}

FullFilter closed_form_filter(const SoIBasis& soi, const Matrix& z,
                              const SketchMatrix& sketch, const Vector& d) {
  Matrix ztz = multiply_tn(z, z);
  Matrix p = linalg::orthogonal_projector(multiply(ztz, sketch.omega));
  Vector t = linalg::solve(ztz, multiply(p, d));
  Vector w = soi.v - multiply(soi.v_perp, multiply(z, t));
  ReducerSpec spec;
  spec.method = sketch.kind == SketchMatrix::Kind::kGaussian
                    ? ReducerMethod::kGaussianSketch
                    : ReducerMethod::kColumnSelect;
  spec.r = sketch.omega.cols();
  return FullFilter{std::move(w), spec};
}

FullFilter mn_filter(const SoIBasis& soi, const Matrix& z, const Vector& d) {
  Matrix ztz = multiply_tn(z, z);
  Vector t = linalg::solve(ztz, d);
  Vector w = soi.v - multiply(soi.v_perp, multiply(z, t));
  return FullFilter{std::move(w),
                    ReducerSpec{ReducerMethod::kMinNorm, 0}};
}

FullFilter clairvoyant_filter(const CovarianceModel& model,
                              const SoIBasis& soi, const Psi& psi) {
  // Reduced Wiener system with Sigma kept factored.  With B = v_perp^T Q
  // and C = B^T Psi:
  //   A = Psi^T Sigma_z Psi = C^T diag(lambda) C + sigma2 Psi^T Psi
  //   b = Psi^T (B diag(lambda) Q^T v + sigma2 v_perp^T v)
  const std::size_t j = model.lambda.size();
  Matrix b_mat = multiply_tn(soi.v_perp, model.q);
  Matrix c = multiply_tn(b_mat, psi.psi);
  Matrix c_scaled = c;
  for (std::size_t col = 0; col < c_scaled.cols(); ++col) {
    double* ptr = c_scaled.col(col);
    for (std::size_t row = 0; row < j; ++row) ptr[row] *= model.lambda[row];
  }
  Matrix a = multiply_tn(c, c_scaled);
  Matrix gram = multiply_tn(psi.psi, psi.psi);
  for (std::size_t i = 0; i < a.size(); ++i)
    a.data()[i] += model.sigma2 * gram.data()[i];

  Vector qtv = multiply_tn(model.q, soi.v);
  for (std::size_t i = 0; i < j; ++i) qtv[i] *= model.lambda[i];
  Vector r_zd = multiply(b_mat, qtv);
  axpy(model.sigma2, multiply_tn(soi.v_perp, soi.v), r_zd);

  Vector wa = linalg::solve(a, multiply_tn(psi.psi, r_zd));
  return assemble_full_filter(soi, psi, ReducedWeights{std::move(wa)});
}

}  // namespace gscsim
