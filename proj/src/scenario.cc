// src/scenario.cc

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

#include "gscsim/scenario.h"

#include <cmath>
#include <string>

#include "gscsim/errors.h"
#include "gscsim/kernels.h"
#include "gscsim/linalg.h"

namespace gscsim {

namespace {

constexpr double kDegToRad = 0.017453292519943295;

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

// Unit vector uniform in range(q); redrawn in the (probability-zero)
// event that the Gaussian lands numerically on the origin.
Vector uniform_unit_in_range(const Matrix& q, Rng& rng) {
  for (;;) {
    Vector g(q.cols());
    rng.fill_normal(g.data(), g.size());
    Vector u = multiply(q, g);
    const double nrm = norm2(u);
    if (nrm > 1e-8) {
      scale(1.0 / nrm, u);
      return u;
    }
  }
}

// Unit vector uniform in the orthogonal complement of range(q).
Vector uniform_unit_in_complement(const Matrix& q, Rng& rng) {
  for (;;) {
    Vector g(q.rows());
    rng.fill_normal(g.data(), g.size());
    const Vector proj = multiply(q, multiply_tn(q, g));
    axpy(-1.0, proj, g);
    const double nrm = norm2(g);
    if (nrm > 1e-8) {
      scale(1.0 / nrm, g);
      return g;
    }
  }
}

}  // namespace

void ScenarioSpec::validate() const {
  require(j >= 1 && j < n, "j must satisfy 1 <= j < n");
  require(k >= j && k < n, "k must satisfy j <= k < n");
  require(theta_deg >= 0.0 && theta_deg <= 90.0,
          "theta-deg must be in [0,90]");
  require(eig_db_min <= eig_db_max, "eig-db-min must not exceed eig-db-max");
  require(sigma2 > 0.0, "sigma2 must be positive");
}

Matrix CovarianceModel::g() const {
  Matrix out = q;
  for (std::size_t j = 0; j < out.cols(); ++j) {
    kernels::active().scal(std::sqrt(lambda[j]), out.col(j), out.rows());
  }
  return out;
}

Matrix sample_stiefel(std::size_t n, std::size_t j, RngStream stream) {
  if (j > n) throw DimensionError("sample_stiefel: j > n");
  Rng rng = stream.engine();
  Matrix g(n, j);
  rng.fill_normal(g.data(), g.size());
  // Thin QR with nonnegative r diagonal makes the draw Haar-uniform.
  return linalg::qr_factor(g).q;
}

Vector draw_eigenvalues_db(std::size_t j, double db_min, double db_max,
                           RngStream stream) {
  if (db_min > db_max) {
    throw ConfigError("draw_eigenvalues_db: db_min > db_max");
  }
  Rng rng = stream.engine();
  Vector lambda(j);
  for (double& l : lambda) {
    l = std::pow(10.0, rng.uniform(db_min, db_max) / 10.0);
  }
  return lambda;
}

SoIBasis place_soi(const Matrix& q, double theta_deg, RngStream stream) {
  if (theta_deg < 0.0 || theta_deg > 90.0) {
    throw ConfigError("theta-deg must be in [0,90]");
  }
  if (q.cols() >= q.rows()) {
    throw DimensionError("place_soi: interference rank must be below n");
  }
  Rng rng = stream.engine();
  const Vector u1 = uniform_unit_in_range(q, rng);
  const Vector u2 = uniform_unit_in_complement(q, rng);
  const double theta = theta_deg * kDegToRad;
  Vector v = u1;
  scale(std::cos(theta), v);
  axpy(std::sin(theta), u2, v);
  scale(1.0 / norm2(v), v);

  SoIBasis out;
  out.v_perp = linalg::orthonormal_complement(v);
  out.v = std::move(v);
  return out;
}

Matrix sample_training(const CovarianceModel& model, std::size_t k,
                       RngStream stream) {
  if (k < 1) throw ConfigError("sample_training: k must be >= 1");
  const std::size_t n = model.q.rows();
  const std::size_t j = model.q.cols();
  Rng rng = stream.engine();
  // Draw order is fixed: the J x K low-rank block first, then the N x K
  // white block, both filled column-major.
  Matrix w1(j, k);
  rng.fill_normal(w1.data(), w1.size());
  for (std::size_t c = 0; c < j; ++c) {
    const double root = std::sqrt(model.lambda[c]);
    for (std::size_t col = 0; col < k; ++col) w1(c, col) *= root;
  }
  Matrix x = multiply(model.q, w1);
  Matrix w2(n, k);
  rng.fill_normal(w2.data(), w2.size());
  kernels::active().axpy(std::sqrt(model.sigma2), w2.data(), x.data(),
                         x.size());
  return x;
}

TrainingData split_channels(const SoIBasis& soi, const Matrix& x_t) {
  if (x_t.rows() != soi.v.size()) {
    throw DimensionError("split_channels: sample dimension mismatch");
  }
  TrainingData out;
  out.z = multiply_tn(soi.v_perp, x_t);
  out.d = Vector(x_t.cols());
  for (std::size_t c = 0; c < x_t.cols(); ++c) {
    out.d[c] = kernels::active().dot(soi.v.data(), x_t.col(c), x_t.rows());
  }
  out.x_t = x_t;
  return out;
}

std::pair<CovarianceModel, SoIBasis> make_covariance_model(
    const ScenarioSpec& spec, RngStream stream) {
  spec.validate();
  CovarianceModel model;
  model.q = sample_stiefel(spec.n, spec.j, stream.child(kSubCovariance));
  model.lambda = draw_eigenvalues_db(spec.j, spec.eig_db_min, spec.eig_db_max,
                                     stream.child(kSubEigenvalues));
  model.sigma2 = spec.sigma2;
  SoIBasis soi = place_soi(model.q, spec.theta_deg, stream.child(kSubSoi));
  return {std::move(model), std::move(soi)};
}

}  // namespace gscsim
