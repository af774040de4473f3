// src/metrics.cc

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

#include "gscsim/metrics.h"

#include <cmath>

#include "gscsim/linalg.h"

namespace gscsim {

double optimal_snr(const CovarianceModel& model, const Vector& v) {
  Vector qtv = multiply_tn(model.q, v);
  double captured = 0.0;
  for (std::size_t i = 0; i < qtv.size(); ++i) {
    const double lam = model.lambda[i];
    captured += lam / (lam + model.sigma2) * qtv[i] * qtv[i];
  }
  return (dot(v, v) - captured) / model.sigma2;
}

namespace {

// w^T Sigma w = sum_j lambda_j (q_j^T w)^2 + sigma2 ||w||^2.
double quadratic_form(const CovarianceModel& model, const Vector& w) {
  Vector qtw = multiply_tn(model.q, w);
  double acc = 0.0;
  for (std::size_t i = 0; i < qtw.size(); ++i)
    acc += model.lambda[i] * qtw[i] * qtw[i];
  return acc + model.sigma2 * dot(w, w);
}

}  // namespace

LossSample snr_loss(const FullFilter& w, const Vector& v,
                    const CovarianceModel& model) {
  const double wv = dot(w.w, v);
  const double wsw = quadratic_form(model, w.w);
  const double opt = optimal_snr(model, v);
  LossSample sample;
  sample.loss = wv * wv / (wsw * opt);
  sample.loss_db = 10.0 * std::log10(sample.loss);
  sample.method = w.method;
  sample.r = w.method.r;
  return sample;
}

Vector interference_capture_angles(const CovarianceModel& model,
                                   const SoIBasis& soi, const Psi& psi) {
  Matrix b = multiply_tn(soi.v_perp, model.q);
  Vector angles = linalg::principal_angles(b, psi.psi);
  constexpr double kRadToDeg = 180.0 / 3.14159265358979323846;
  for (double& a : angles) a *= kRadToDeg;
  return angles;
}

}  // namespace gscsim
