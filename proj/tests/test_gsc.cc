// tests/test_gsc.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <tuple>
#include <vector>

#include "gscsim/gsc.h"
#include "gscsim/linalg.h"
#include "gscsim/matrix.h"
#include "gscsim/metrics.h"
#include "gscsim/reducers.h"
#include "gscsim/scenario.h"
#include "test_util.h"

using namespace gscsim;
using testutil::naive_multiply;
using testutil::naive_solve;
using testutil::naive_transpose;
using testutil::random_matrix;
using testutil::random_vector;

namespace {

struct Instance {
  CovarianceModel model;
  SoIBasis soi;
  TrainingData data;
};

Instance make_instance(std::size_t n, std::size_t j, std::size_t k,
                       std::uint64_t seed) {
  ScenarioSpec spec;
  spec.n = n;
  spec.j = j;
  spec.k = k;
  RngStream s(seed);
  auto [model, soi] = make_covariance_model(spec, s);
  Matrix x = sample_training(model, k, s.child(kSubData));
  return Instance{model, soi, split_channels(soi, x)};
}

double max_abs_diff_vec(const Vector& a, const Vector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("zero main channel gives zero weights and w = v") {
  Instance ins = make_instance(15, 3, 8, 31);
  Psi psi = pc_psi(ins.data.z, 4);
  Vector zero(ins.data.d.size(), 0.0);
  ReducedWeights wa = reduced_weights(ins.data.z, psi, zero);
  for (double x : wa.w_a) CHECK(std::fabs(x) < 1e-14);
  FullFilter f = assemble_full_filter(ins.soi, psi, wa);
  CHECK(max_abs_diff_vec(f.w, ins.soi.v) < 1e-14);
  CHECK(f.method.method == ReducerMethod::kPrincipalComponent);
  CHECK(f.method.r == 4);
}

TEST_CASE("scalar reduction matches the analytic least squares") {
  // With R = 1 the fit is w_a = <Psi^T Z row, d> / ||Z^T psi||^2.
  Instance ins = make_instance(10, 2, 6, 32);
  Psi psi = pc_psi(ins.data.z, 1);
  Vector zt_psi = multiply_tn(ins.data.z, Vector(psi.psi.col(0),
                                                 psi.psi.col(0) + 9));
  double num = dot(zt_psi, ins.data.d);
  double den = dot(zt_psi, zt_psi);
  ReducedWeights wa = reduced_weights(ins.data.z, psi, ins.data.d);
  REQUIRE(wa.w_a.size() == 1);
  CHECK(wa.w_a[0] == doctest::Approx(num / den).epsilon(1e-12));
}

TEST_CASE("reduced weights solve the normal equations") {
  for (std::uint64_t seed : {33u, 34u, 35u}) {
    Instance ins = make_instance(30, 4, 12, seed);
    for (std::size_t r : {2u, 5u, 8u}) {
      SketchMatrix sk =
          make_gaussian_sketch(12, r, RngStream(seed).child(kSubOmega));
      Psi psi = sketch_psi(ins.data.z, sk,
                           ReducerSpec{ReducerMethod::kGaussianSketch, r});
      ReducedWeights wa = reduced_weights(ins.data.z, psi, ins.data.d);
      // (Psi^T Z Z^T Psi) w_a = Psi^T Z d via dense elimination.
      Matrix design = multiply_tn(ins.data.z, psi.psi);  // K x R
      Matrix gram = naive_multiply(naive_transpose(design), design);
      Vector rhs(r, 0.0);
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t s2 = 0; s2 < 12; ++s2)
          rhs[c] += design(s2, c) * ins.data.d[s2];
      Vector want = naive_solve(gram, rhs);
      CHECK(max_abs_diff_vec(wa.w_a, want) < 1e-9);
    }
  }
}

TEST_CASE("assembled filter satisfies the distortionless constraint") {
  for (std::uint64_t seed : {36u, 37u}) {
    Instance ins = make_instance(40, 6, 14, seed);
    for (std::size_t r : {1u, 4u, 9u}) {
      SketchMatrix sk =
          make_gaussian_sketch(14, r, RngStream(seed).child(kSubOmega));
      Psi psi = sketch_psi(ins.data.z, sk,
                           ReducerSpec{ReducerMethod::kGaussianSketch, r});
      FullFilter f = assemble_full_filter(
          ins.soi, psi, reduced_weights(ins.data.z, psi, ins.data.d));
      CHECK(std::fabs(dot(f.w, ins.soi.v) - 1.0) < 1e-10);
      // ||w||^2 = 1 + ||Psi w_a||^2 because v and range(v_perp) are
      // orthogonal and v_perp has orthonormal columns.
      ReducedWeights wa = reduced_weights(ins.data.z, psi, ins.data.d);
      Vector psi_wa = multiply(psi.psi, wa.w_a);
      CHECK(dot(f.w, f.w) ==
            doctest::Approx(1.0 + dot(psi_wa, psi_wa)).epsilon(1e-10));
    }
  }
}

TEST_CASE("closed form agrees with the reduced-fit path") {
  // The projector route and the least-squares route are algebraically
  // identical; check numerical agreement on random instances.
  const std::tuple<std::size_t, std::size_t, std::size_t> shapes[] = {
      {12, 2, 6}, {30, 5, 12}, {60, 10, 20}};
  for (const auto& [n, j, k] : shapes) {
    for (std::uint64_t rep = 0; rep < 10; ++rep) {
      Instance ins = make_instance(n, j, k, 400 + rep * 3 + n);
      const std::size_t r = j;
      RngStream os = RngStream(500 + rep + n).child(kSubOmega);
      for (bool gaussian : {true, false}) {
        SketchMatrix sk = gaussian
                              ? make_gaussian_sketch(k, r, os.child(0))
                              : make_column_select_sketch(k, r, os.child(1));
        ReducerSpec spec{gaussian ? ReducerMethod::kGaussianSketch
                                  : ReducerMethod::kColumnSelect,
                         r};
        Psi psi = sketch_psi(ins.data.z, sk, spec);
        FullFilter lsq = assemble_full_filter(
            ins.soi, psi, reduced_weights(ins.data.z, psi, ins.data.d));
        FullFilter direct =
            closed_form_filter(ins.soi, ins.data.z, sk, ins.data.d);
        CHECK(max_abs_diff_vec(lsq.w, direct.w) < 1e-9);
        CHECK(direct.method.method == spec.method);
        CHECK(direct.method.r == r);
      }
    }
  }
}

TEST_CASE("identity sketch reduces the closed form to minimum norm") {
  Instance ins = make_instance(25, 4, 10, 41);
  SketchMatrix sk;
  sk.omega = Matrix::identity(10);
  sk.kind = SketchMatrix::Kind::kSelection;
  FullFilter direct = closed_form_filter(ins.soi, ins.data.z, sk, ins.data.d);
  FullFilter mn = mn_filter(ins.soi, ins.data.z, ins.data.d);
  CHECK(max_abs_diff_vec(direct.w, mn.w) < 1e-10);
  CHECK(mn.method.method == ReducerMethod::kMinNorm);
  CHECK(mn.method.r == 0);
}

TEST_CASE("full-width sketches collapse to the minimum-norm filter") {
  // Any invertible Omega with R = K spans all of R^K, so the projector
  // becomes the identity and the filter no longer depends on Omega.
  for (std::uint64_t seed : {42u, 43u, 44u}) {
    Instance ins = make_instance(50, 8, 16, seed);
    FullFilter mn = mn_filter(ins.soi, ins.data.z, ins.data.d);
    SketchMatrix g =
        make_gaussian_sketch(16, 16, RngStream(seed).child(kSubOmega));
    SketchMatrix c =
        make_column_select_sketch(16, 16, RngStream(seed + 70).child(1));
    FullFilter fg = closed_form_filter(ins.soi, ins.data.z, g, ins.data.d);
    FullFilter fc = closed_form_filter(ins.soi, ins.data.z, c, ins.data.d);
    CHECK(max_abs_diff_vec(fg.w, mn.w) < 1e-8);
    CHECK(max_abs_diff_vec(fc.w, mn.w) < 1e-8);
  }
}

TEST_CASE("filter depends on Omega only through its column span") {
  Instance ins = make_instance(30, 5, 12, 45);
  SketchMatrix sk =
      make_gaussian_sketch(12, 5, RngStream(45).child(kSubOmega));
  FullFilter base = closed_form_filter(ins.soi, ins.data.z, sk, ins.data.d);
  // Right-multiply Omega by a well-conditioned invertible T.
  Matrix t = random_matrix(5, 5, 99);
  for (std::size_t i = 0; i < 5; ++i) t(i, i) += 4.0;
  SketchMatrix mixed = sk;
  mixed.omega = multiply(sk.omega, t);
  FullFilter same = closed_form_filter(ins.soi, ins.data.z, mixed, ins.data.d);
  CHECK(max_abs_diff_vec(base.w, same.w) < 1e-8);
}

TEST_CASE("minimum-norm filter meets the data constraint minimally") {
  Instance ins = make_instance(40, 6, 15, 46);
  FullFilter mn = mn_filter(ins.soi, ins.data.z, ins.data.d);
  // w = v - v_perp u with Z^T u = d exactly (K < N-1 keeps Z full rank).
  Vector v_minus_w = ins.soi.v;
  axpy(-1.0, mn.w, v_minus_w);
  Vector u = multiply_tn(ins.soi.v_perp, v_minus_w);
  Vector residual = multiply_tn(ins.data.z, u);
  double dnorm = norm2(ins.data.d);
  for (std::size_t i = 0; i < residual.size(); ++i)
    CHECK(std::fabs(residual[i] - ins.data.d[i]) < 1e-9 * dnorm);
  // Minimality: u lies in range(Z), so perturbing along any direction
  // orthogonal to range(Z) can only grow the norm.
  linalg::PivotedQR f = linalg::qr_factor_pivoted(ins.data.z);
  Vector y = random_vector(u.size(), 77);
  // Project y onto the orthogonal complement of range(Z).
  Vector qty = multiply_tn(f.q, y);
  Vector in_range = multiply(f.q, qty);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= in_range[i];
  CHECK(std::fabs(dot(u, y)) < 1e-8 * norm2(u) * (norm2(y) + 1.0));
  for (double eps : {0.1, -0.1}) {
    Vector pert = u;
    axpy(eps, y, pert);
    CHECK(dot(pert, pert) >= dot(u, u) - 1e-10);
  }
}

TEST_CASE("clairvoyant filter ignores absent interference") {
  // With lambda = 0 the disturbance is white, the cross term vanishes,
  // and the quiescent filter is already optimal.
  ScenarioSpec spec;
  spec.n = 20;
  spec.j = 2;
  spec.k = 6;
  RngStream s(47);
  auto [model, soi] = make_covariance_model(spec, s);
  model.lambda[0] = 0.0;
  model.lambda[1] = 0.0;
  Matrix x = sample_training(model, 6, s.child(kSubData));
  TrainingData data = split_channels(soi, x);
  // pc columns are orthonormal, so Psi^T Psi is well conditioned.
  Psi psi = pc_psi(data.z, 3);
  FullFilter f = clairvoyant_filter(model, soi, psi);
  CHECK(max_abs_diff_vec(f.w, soi.v) < 1e-12);
}

TEST_CASE("clairvoyant filter is blind to out-of-span reductions") {
  // If range(Psi) is orthogonal to v_perp^T Q, the reduced channels
  // carry no interference and no noise correlated with it, so the
  // optimal reduced weights are zero.
  ScenarioSpec spec;
  spec.n = 8;
  spec.j = 2;
  spec.k = 4;
  auto [model, soi] = make_covariance_model(spec, RngStream(48));
  Matrix b = multiply_tn(soi.v_perp, model.q);  // 7 x 2
  // Build a 7 x 5 orthonormal basis orthogonal to range(b).
  Matrix p = linalg::orthogonal_projector(b);
  Matrix raw = random_matrix(7, 5, 101);
  Matrix in_span = multiply(p, raw);
  for (std::size_t i = 0; i < raw.size(); ++i)
    raw.data()[i] -= in_span.data()[i];
  Matrix comp = linalg::qr_factor(raw).q;
  Psi psi;
  psi.psi = comp;
  psi.spec = ReducerSpec{ReducerMethod::kClairvoyant, comp.cols()};
  FullFilter f = clairvoyant_filter(model, soi, psi);
  CHECK(max_abs_diff_vec(f.w, soi.v) < 1e-10);
}

TEST_CASE("clairvoyant filter with the clairvoyant basis is optimal") {
  for (std::uint64_t seed : {49u, 50u, 51u}) {
    ScenarioSpec spec;
    spec.n = 50;
    spec.j = 5;
    spec.k = 10;
    auto [model, soi] = make_covariance_model(spec, RngStream(seed));
    Psi psi = clairvoyant_psi(model, soi);
    FullFilter f = clairvoyant_filter(model, soi, psi);
    LossSample s = snr_loss(f, soi.v, model);
    CHECK(std::fabs(s.loss - 1.0) < 1e-10);
    CHECK(std::fabs(dot(f.w, soi.v) - 1.0) < 1e-12);
  }
}
