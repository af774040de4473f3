// gscsim/experiments.h

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

// Seeded Monte Carlo drivers for the four bundled studies: sketch
// sensitivity to the draw of Omega, the SNR-loss distribution, and the
// sweeps over the reduced dimension R and the sample count K.
//
// Determinism contract: every random object is addressed as
// root(seed).child(experiment).child(slot).child(substream), where slot 0
// holds a scenario shared by all trials and slot 1+t belongs to trial t.
// Workers only race for task indices; each task writes its private slot,
// and rows are sorted into (method, sweep value, trial) order before
// aggregation, so results are bit-identical for any worker count.

#ifndef GSCSIM_EXPERIMENTS_H_
#define GSCSIM_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gscsim/metrics.h"
#include "gscsim/reducers.h"
#include "gscsim/rng.h"
#include "gscsim/scenario.h"

namespace gscsim {

struct ExperimentConfig {
  ScenarioSpec scenario;
  std::vector<ReducerSpec> methods;
  std::size_t trials = 2000;
  std::size_t inner_realizations = 100;  // omega study only
  bool redraw_scenario_per_trial = true;
  std::uint64_t master_seed = 1;
  std::size_t workers = 1;

  /// Throws ConfigError on an invalid combination.
  void validate() const;
};

/// One draw of the disturbance statistics and the signature placement.
struct ScenarioRealization {
  CovarianceModel model;
  SoIBasis soi;
};

/// Raw output row.  sweep_value is the x-coordinate of the study: the
/// 1-based Omega index for the sensitivity study, R for the R-sweep, K
/// for the K-sweep, 0 otherwise (and 0 for sweep-independent reference
/// methods inside a sweep).
struct ResultRow {
  LossSample sample;
  double sweep_value = 0.0;
};

struct AggregateRow {
  ReducerSpec method;
  double sweep_value = 0.0;
  double mean_loss = 0.0;
  double mean_loss_db = 0.0;  // arithmetic mean of the per-row dB values
  double stderr_loss = 0.0;   // sample stddev of loss / sqrt(count)
  std::size_t count = 0;
};

struct ExperimentResult {
  std::string experiment;
  ScenarioSpec scenario;
  std::uint64_t master_seed = 0;
  std::vector<ResultRow> rows;        // (method, sweep value, trial) order
  std::vector<AggregateRow> aggregates;
  std::size_t skipped = 0;            // method evaluations lost to errors
  double elapsed_seconds = 0.0;
};

/// Samples training data from the trial stream, builds the method's
/// filter, and scores it against the true statistics.  trial_index in
/// the returned sample is left 0 for the caller to fill.
LossSample run_trial(const ScenarioRealization& realization,
                     const ReducerSpec& method, const ScenarioSpec& spec,
                     RngStream trial_stream);

/// Runs exactly config.methods for config.trials trials; no sweep, no
/// control row.  Meant for quick looks at individual samples.
ExperimentResult run_single(const ExperimentConfig& config);

/// Fixes one scenario, then scores `trials` Gaussian sketches followed by
/// `trials` column selections, each Omega held fixed while the loss is
/// averaged over inner_realizations fresh training draws.  One row per
/// Omega, sweep_value = 1-based Omega index.
ExperimentResult omega_study(const ExperimentConfig& config);

/// Raw per-trial losses for the configured methods, scenario redrawn
/// every trial by default.
ExperimentResult loss_distribution(const ExperimentConfig& config);

/// Mean loss versus reduced dimension R.  Within a trial every R value
/// and method shares the same training data, and nested sketches are
/// drawn with common prefixes, so the R-points are paired.  The
/// minimum-norm reference and the clairvoyant control appear once per
/// trial at sweep_value 0.
ExperimentResult sweep_r(const ExperimentConfig& config,
                         const std::vector<std::size_t>& r_values);

/// Mean loss versus training sample count K at the methods' fixed R.
ExperimentResult sweep_k(const ExperimentConfig& config,
                         const std::vector<std::size_t>& k_values);

}  // namespace gscsim

#endif  // GSCSIM_EXPERIMENTS_H_
