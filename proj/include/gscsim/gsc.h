// gscsim/gsc.h

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

// Sidelobe-canceler weight assembly.  Every filter here has the form
// w = v - v_perp * (auxiliary weights), which pins w^T v = 1 by
// construction; the variants differ in how the auxiliary weights are fit.

#ifndef GSCSIM_GSC_H_
#define GSCSIM_GSC_H_

#include "gscsim/matrix.h"
#include "gscsim/reducers.h"
#include "gscsim/scenario.h"

namespace gscsim {

struct ReducedWeights {
  Vector w_a;  // length R
};

struct FullFilter {
  Vector w;  // length N, satisfies w^T v = 1
  ReducerSpec method;
};

/// Least-squares fit of the reduced weights: minimizes
/// ||(Z^T Psi) w_a - d|| with the minimum-norm convention on rank
/// deficiency, so degenerate draws never abort a run.
ReducedWeights reduced_weights(const Matrix& z, const Psi& psi,
                               const Vector& d);

FullFilter assemble_full_filter(const SoIBasis& soi, const Psi& psi,
                                const ReducedWeights& wa);

/// The one-shot closed form w = v - v_perp Z (Z^T Z)^-1 P d, where P
/// projects onto range(Z^T Z Omega).  Algebraically identical to the
/// reduced_weights + assemble path; kept as an independent route for
/// cross-validation.  Throws SingularMatrixError when Z^T Z is singular.
FullFilter closed_form_filter(const SoIBasis& soi, const Matrix& z,
                              const SketchMatrix& sketch, const Vector& d);

/// Minimum-norm limit (R = K): w = v - v_perp Z (Z^T Z)^-1 d.  The
/// auxiliary vector is the smallest-norm solution of Z^T w = d.
FullFilter mn_filter(const SoIBasis& soi, const Matrix& z, const Vector& d);

/// Known-statistics weights for a given Psi: solves the reduced Wiener
/// system with Sigma applied in factored form (never assembled).
FullFilter clairvoyant_filter(const CovarianceModel& model,
                              const SoIBasis& soi, const Psi& psi);

}  // namespace gscsim

#endif  // GSCSIM_GSC_H_
