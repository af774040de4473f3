// gscsim/metrics.h

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

// Filter quality against the true disturbance statistics.  Sigma enters
// only in factored form (Q, lambda, sigma2); nothing here assembles or
// inverts an N x N matrix.

#ifndef GSCSIM_METRICS_H_
#define GSCSIM_METRICS_H_

#include <cstddef>

#include "gscsim/gsc.h"
#include "gscsim/matrix.h"
#include "gscsim/reducers.h"
#include "gscsim/scenario.h"

namespace gscsim {

/// One Monte Carlo observation of the SNR loss.
struct LossSample {
  double loss = 0.0;     // in (0, 1], 1 = optimal
  double loss_db = 0.0;  // 10 log10(loss), <= 0
  ReducerSpec method;
  std::size_t trial_index = 0;
  std::size_t r = 0;  // reduced dimension in effect (0 for min-norm)
  std::size_t k = 0;  // training sample count in effect
};

/// v^T Sigma^-1 v through the matrix-inversion lemma:
/// sigma^-2 (v^T v - sum_j lambda_j/(lambda_j+sigma2) (q_j^T v)^2).
double optimal_snr(const CovarianceModel& model, const Vector& v);

/// loss = (w^T v)^2 / ((w^T Sigma w) (v^T Sigma^-1 v)), the realized
/// output SNR over the optimal one.  The general quotient is evaluated
/// even though assembled filters satisfy w^T v = 1, so the value is
/// invariant under rescaling of w.
LossSample snr_loss(const FullFilter& w, const Vector& v,
                    const CovarianceModel& model);

/// Principal angles between range(v_perp^T Q) and range(psi), in degrees,
/// ascending.  Small angles mean psi retains the removable part of the
/// interference; all zero for the clairvoyant psi.
Vector interference_capture_angles(const CovarianceModel& model,
                                   const SoIBasis& soi, const Psi& psi);

}  // namespace gscsim

#endif  // GSCSIM_METRICS_H_
