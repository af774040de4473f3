// gscsim/scenario.h

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

// Simulation scenario: a low-rank-plus-identity disturbance covariance in
// factored form, a unit signal-of-interest signature placed at a chosen
// angle from the interference subspace, and Gaussian training samples.
// All randomness flows through RngStream children with the substream
// indices below, so every object is reproducible from (seed, path).

#ifndef GSCSIM_SCENARIO_H_
#define GSCSIM_SCENARIO_H_

#include <cstddef>
#include <utility>

#include "gscsim/matrix.h"
#include "gscsim/rng.h"

namespace gscsim {

/// Fixed substream indices under a scenario/trial stream.
enum Substream : std::uint64_t {
  kSubCovariance = 0,   // interference eigenvectors (Stiefel draw)
  kSubEigenvalues = 1,  // interference powers
  kSubSoi = 2,          // signature placement
  kSubData = 3,         // training samples
  kSubOmega = 4,        // sketch matrices
};

struct ScenarioSpec {
  std::size_t n = 100;       // observation dimension
  std::size_t j = 10;        // interference rank
  std::size_t k = 20;        // training sample count
  double theta_deg = 75.0;   // angle between v and the interference subspace
  double eig_db_min = 15.0;  // interference power bounds, dB
  double eig_db_max = 25.0;
  double sigma2 = 1.0;       // white noise power

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Disturbance law Sigma = Q diag(lambda) Q^T + sigma2 I in factored form.
/// Sigma itself is never assembled outside of tests.
struct CovarianceModel {
  Matrix q;       // N x J, orthonormal columns
  Vector lambda;  // J interference powers, linear scale
  double sigma2 = 1.0;

  /// G = Q diag(sqrt(lambda)), so G G^T reproduces the low-rank term.
  Matrix g() const;
};

/// Unit signature and its semi-unitary complement.
struct SoIBasis {
  Vector v;       // length N, unit
  Matrix v_perp;  // N x (N-1)
};

/// Training matrix split into auxiliary and main channels.
struct TrainingData {
  Matrix x_t;  // N x K
  Matrix z;    // (N-1) x K, = v_perp^T x_t
  Vector d;    // length K,  = v^T x_t
};

/// Haar-uniform n x j matrix with orthonormal columns.
Matrix sample_stiefel(std::size_t n, std::size_t j, RngStream stream);

/// Powers 10^(u/10) with u uniform on [db_min, db_max], independent.
Vector draw_eigenvalues_db(std::size_t j, double db_min, double db_max,
                           RngStream stream);

/// Places a unit v with principal angle theta between span(v) and
/// range(q): v = cos(theta) u1 + sin(theta) u2 with u1 uniform in
/// range(q) and u2 uniform in its complement.
SoIBasis place_soi(const Matrix& q, double theta_deg, RngStream stream);

/// N x K samples with covariance Q diag(lambda) Q^T + sigma2 I, drawn as
/// Q diag(sqrt(lambda)) W1 + sigma W2 without forming Sigma.
Matrix sample_training(const CovarianceModel& model, std::size_t k,
                       RngStream stream);

TrainingData split_channels(const SoIBasis& soi, const Matrix& x_t);

/// Composes the Stiefel draw, the powers, and the signature placement
/// from the fixed substreams of `stream`.
std::pair<CovarianceModel, SoIBasis> make_covariance_model(
    const ScenarioSpec& spec, RngStream stream);

}  // namespace gscsim

#endif  // GSCSIM_SCENARIO_H_
