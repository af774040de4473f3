// tests/test_experiments.cc

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
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gscsim/errors.h"
#include "gscsim/experiments.h"
#include "gscsim/metrics.h"
#include "gscsim/reducers.h"

using namespace gscsim;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.scenario.n = 30;
  c.scenario.j = 4;
  c.scenario.k = 8;
  c.methods = {ReducerSpec{ReducerMethod::kGaussianSketch, 4},
               ReducerSpec{ReducerMethod::kColumnSelect, 4},
               ReducerSpec{ReducerMethod::kMinNorm, 0}};
  c.trials = 40;
  c.master_seed = 777;
  return c;
}

bool rows_identical(const std::vector<ResultRow>& a,
                    const std::vector<ResultRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].sample.loss != b[i].sample.loss) return false;
    if (a[i].sample.loss_db != b[i].sample.loss_db) return false;
    if (a[i].sample.method.method != b[i].sample.method.method) return false;
    if (a[i].sample.method.r != b[i].sample.method.r) return false;
    if (a[i].sample.trial_index != b[i].sample.trial_index) return false;
    if (a[i].sweep_value != b[i].sweep_value) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("reruns are bit-identical and workers do not change results") {
  ExperimentConfig c = small_config();
  ExperimentResult r1 = loss_distribution(c);
  ExperimentResult r2 = loss_distribution(c);
  CHECK(rows_identical(r1.rows, r2.rows));

  ExperimentConfig c3 = c;
  c3.workers = 3;
  ExperimentResult r3 = loss_distribution(c3);
  CHECK(rows_identical(r1.rows, r3.rows));

  // Different seed, different numbers.
  ExperimentConfig c4 = c;
  c4.master_seed = 778;
  ExperimentResult r4 = loss_distribution(c4);
  CHECK_FALSE(rows_identical(r1.rows, r4.rows));
}

TEST_CASE("rows arrive in canonical (method, sweep, trial) order") {
  ExperimentConfig c = small_config();
  ExperimentResult r = loss_distribution(c);
  // Configured methods plus the appended clairvoyant control.
  REQUIRE(r.rows.size() == c.trials * (c.methods.size() + 1));
  CHECK(r.skipped == 0);
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    const ResultRow& prev = r.rows[i - 1];
    const ResultRow& cur = r.rows[i];
    const int mp = static_cast<int>(prev.sample.method.method);
    const int mc = static_cast<int>(cur.sample.method.method);
    const bool ordered =
        mp < mc ||
        (mp == mc && (prev.sweep_value < cur.sweep_value ||
                      (prev.sweep_value == cur.sweep_value &&
                       prev.sample.trial_index < cur.sample.trial_index)));
    CHECK(ordered);
  }
  // Every trial index appears once per method.
  std::map<int, std::set<std::size_t>> seen;
  for (const ResultRow& row : r.rows)
    seen[static_cast<int>(row.sample.method.method)].insert(
        row.sample.trial_index);
  for (const auto& [m, s] : seen) CHECK(s.size() == c.trials);
}

TEST_CASE("aggregates recompute exactly from the raw rows") {
  ExperimentConfig c = small_config();
  ExperimentResult r = loss_distribution(c);
  // One aggregate line per configured method plus the control.
  REQUIRE(r.aggregates.size() == c.methods.size() + 1);
  for (const AggregateRow& agg : r.aggregates) {
    double mean = 0.0, mean_db = 0.0;
    std::size_t count = 0;
    for (const ResultRow& row : r.rows) {
      if (row.sample.method.method != agg.method.method) continue;
      if (row.sweep_value != agg.sweep_value) continue;
      mean += row.sample.loss;
      mean_db += row.sample.loss_db;
      ++count;
    }
    REQUIRE(count == agg.count);
    mean /= static_cast<double>(count);
    mean_db /= static_cast<double>(count);
    double var = 0.0;
    for (const ResultRow& row : r.rows) {
      if (row.sample.method.method != agg.method.method) continue;
      if (row.sweep_value != agg.sweep_value) continue;
      var += (row.sample.loss - mean) * (row.sample.loss - mean);
    }
    var /= static_cast<double>(count - 1);
    CHECK(agg.mean_loss == doctest::Approx(mean).epsilon(1e-12));
    CHECK(agg.mean_loss_db == doctest::Approx(mean_db).epsilon(1e-12));
    CHECK(agg.stderr_loss ==
          doctest::Approx(std::sqrt(var / static_cast<double>(count)))
              .epsilon(1e-12));
  }
}

TEST_CASE("run_trial on a full-width sketch matches the min-norm filter") {
  ScenarioSpec spec;
  spec.n = 30;
  spec.j = 4;
  spec.k = 8;
  RngStream trial = RngStream(900).child(0).child(1);
  auto [model, soi] = make_covariance_model(spec, trial);
  ScenarioRealization rz{model, soi};
  LossSample a = run_trial(
      rz, ReducerSpec{ReducerMethod::kGaussianSketch, spec.k}, spec, trial);
  LossSample b =
      run_trial(rz, ReducerSpec{ReducerMethod::kMinNorm, 0}, spec, trial);
  CHECK(std::fabs(a.loss - b.loss) < 1e-10);
  CHECK(a.k == spec.k);
  CHECK(b.r == 0);
}

TEST_CASE("clairvoyant control is lossless on every draw") {
  ExperimentConfig c = small_config();
  c.methods = {ReducerSpec{ReducerMethod::kClairvoyant, 0}};
  c.trials = 25;
  ExperimentResult r = loss_distribution(c);
  REQUIRE(r.rows.size() == 25);
  for (const ResultRow& row : r.rows) {
    CHECK(std::fabs(row.sample.loss - 1.0) < 1e-9);
    CHECK(row.sample.method.r == c.scenario.j);
  }
  REQUIRE(r.aggregates.size() == 1);
  CHECK(std::fabs(r.aggregates[0].mean_loss - 1.0) < 1e-9);
}

TEST_CASE("omega study emits one row per sketch plus a control") {
  ExperimentConfig c = small_config();
  c.methods = {ReducerSpec{ReducerMethod::kGaussianSketch, 4},
               ReducerSpec{ReducerMethod::kColumnSelect, 4}};
  c.trials = 6;               // Omega draws per family
  c.inner_realizations = 5;   // training redraws per Omega
  ExperimentResult r = omega_study(c);
  // 6 gaussian + 6 select + 1 clairvoyant control.
  REQUIRE(r.rows.size() == 13);
  std::size_t gaussian = 0, select = 0, control = 0;
  for (const ResultRow& row : r.rows) {
    switch (row.sample.method.method) {
      case ReducerMethod::kGaussianSketch: {
        ++gaussian;
        CHECK(row.sweep_value >= 1.0);
        CHECK(row.sweep_value <= 6.0);
        break;
      }
      case ReducerMethod::kColumnSelect: {
        ++select;
        break;
      }
      case ReducerMethod::kClairvoyant: {
        ++control;
        CHECK(std::fabs(row.sample.loss - 1.0) < 1e-9);
        break;
      }
      default:
        FAIL("unexpected method in omega study");
    }
    // Per-row dB convention holds for averaged rows too.
    CHECK(row.sample.loss_db ==
          doctest::Approx(10.0 * std::log10(row.sample.loss))
              .epsilon(1e-12));
  }
  CHECK(gaussian == 6);
  CHECK(select == 6);
  CHECK(control == 1);
  // Aggregates collapse over Omega: one line per family plus control.
  REQUIRE(r.aggregates.size() == 3);
  for (const AggregateRow& agg : r.aggregates) CHECK(agg.sweep_value == 0.0);

  // The study fixes one scenario: reruns with more inner realizations
  // shift each row but keep the same Omega count.
  ExperimentConfig c2 = c;
  c2.inner_realizations = 7;
  ExperimentResult r2 = omega_study(c2);
  CHECK(r2.rows.size() == 13);
  CHECK_FALSE(rows_identical(r.rows, r2.rows));
}

TEST_CASE("omega study rejects reference methods") {
  ExperimentConfig c = small_config();
  c.methods = {ReducerSpec{ReducerMethod::kMinNorm, 0}};
  CHECK_THROWS_AS(omega_study(c), ConfigError);
}

TEST_CASE("sweep over R pairs trials and carries the references") {
  ExperimentConfig c = small_config();
  // The per-method r is a placeholder here; the sweep overrides it with
  // each swept value in turn.
  c.methods = {ReducerSpec{ReducerMethod::kGaussianSketch, 4},
               ReducerSpec{ReducerMethod::kColumnSelect, 4}};
  c.trials = 12;
  const std::vector<std::size_t> r_values = {2, 4, 6};
  ExperimentResult r = sweep_r(c, r_values);
  CHECK(r.skipped == 0);
  // Swept methods appear once per (r, trial); references once per trial.
  std::map<std::pair<int, double>, std::set<std::size_t>> cells;
  for (const ResultRow& row : r.rows)
    cells[{static_cast<int>(row.sample.method.method), row.sweep_value}]
        .insert(row.sample.trial_index);
  for (std::size_t rv : r_values) {
    const auto g = cells.find(
        {static_cast<int>(ReducerMethod::kGaussianSketch),
         static_cast<double>(rv)});
    REQUIRE(g != cells.end());
    CHECK(g->second.size() == c.trials);
    const auto s = cells.find(
        {static_cast<int>(ReducerMethod::kColumnSelect),
         static_cast<double>(rv)});
    REQUIRE(s != cells.end());
    CHECK(s->second.size() == c.trials);
  }
  CHECK(cells[{static_cast<int>(ReducerMethod::kMinNorm), 0.0}].size() ==
        c.trials);
  CHECK(cells[{static_cast<int>(ReducerMethod::kClairvoyant), 0.0}].size() ==
        c.trials);
  // The stamped r matches the sweep coordinate.
  for (const ResultRow& row : r.rows) {
    if (row.sample.method.method == ReducerMethod::kGaussianSketch ||
        row.sample.method.method == ReducerMethod::kColumnSelect) {
      CHECK(static_cast<double>(row.sample.r) == row.sweep_value);
    }
  }
  // R = K reproduces the min-norm reference trial by trial.
  ExperimentConfig c8 = c;
  ExperimentResult r8 = sweep_r(c8, {8});
  std::map<std::size_t, double> gauss_at_k, mn_ref;
  for (const ResultRow& row : r8.rows) {
    if (row.sample.method.method == ReducerMethod::kGaussianSketch)
      gauss_at_k[row.sample.trial_index] = row.sample.loss;
    if (row.sample.method.method == ReducerMethod::kMinNorm)
      mn_ref[row.sample.trial_index] = row.sample.loss;
  }
  REQUIRE(gauss_at_k.size() == c.trials);
  for (const auto& [t, loss] : gauss_at_k)
    CHECK(std::fabs(loss - mn_ref.at(t)) < 1e-9);
}

TEST_CASE("sweep over K stamps the sample count and validates bounds") {
  ExperimentConfig c = small_config();
  c.methods = {ReducerSpec{ReducerMethod::kGaussianSketch, 4},
               ReducerSpec{ReducerMethod::kMinNorm, 0}};
  c.trials = 10;
  const std::vector<std::size_t> k_values = {6, 10, 14};
  ExperimentResult r = sweep_k(c, k_values);
  CHECK(r.skipped == 0);
  std::set<double> sweeps;
  for (const ResultRow& row : r.rows) {
    sweeps.insert(row.sweep_value);
    CHECK(static_cast<double>(row.sample.k) == row.sweep_value);
    if (row.sample.method.method == ReducerMethod::kGaussianSketch)
      CHECK(row.sample.r == 4);
  }
  CHECK(sweeps == std::set<double>{6.0, 10.0, 14.0});
  // Two configured methods plus the control per (K, trial).
  CHECK(r.rows.size() == k_values.size() * c.trials * 3);

  // K below max(R, J) or at/above N is rejected.
  CHECK_THROWS_AS(sweep_k(c, std::vector<std::size_t>{3}), ConfigError);
  CHECK_THROWS_AS(sweep_k(c, std::vector<std::size_t>{30}), ConfigError);
}

TEST_CASE("config validation rejects bad combinations") {
  ExperimentConfig c = small_config();
  c.trials = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = small_config();
  c.methods.clear();
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = small_config();
  c.scenario.k = 2;  // < j
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = small_config();
  c.methods = {ReducerSpec{ReducerMethod::kGaussianSketch, 9}};  // r > k
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = small_config();
  c.inner_realizations = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}
