// src/experiments.cc

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

#include "gscsim/experiments.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <thread>
#include <utility>

#include "gscsim/errors.h"
#include "gscsim/gsc.h"

namespace gscsim {
namespace {

// Fixed child indices under the root stream; part of the determinism
// contract, so renumbering breaks seed reproducibility.
enum ExperimentId : std::uint64_t {
  kExpSingle = 0,
  kExpOmega = 1,
  kExpDistribution = 2,
  kExpSweepR = 3,
  kExpSweepK = 4,
};

// Child 0 of an experiment stream holds the shared scenario; trial t
// lives at child 1 + t.
constexpr std::uint64_t kSharedScenarioSlot = 0;

bool method_uses_r(ReducerMethod m) {
  return m == ReducerMethod::kGaussianSketch ||
         m == ReducerMethod::kColumnSelect ||
         m == ReducerMethod::kPrincipalComponent;
}

using Clock = std::chrono::steady_clock;

ScenarioRealization make_realization(const ScenarioSpec& spec,
                                     RngStream stream) {
  auto [model, soi] = make_covariance_model(spec, stream);
  return ScenarioRealization{std::move(model), std::move(soi)};
}

FullFilter build_filter(const ScenarioRealization& real,
                        const TrainingData& data, RngStream omega_stream,
                        const ReducerSpec& method) {
  switch (method.method) {
    case ReducerMethod::kGaussianSketch: {
      SketchMatrix sk = make_gaussian_sketch(data.z.cols(), method.r,
                                             omega_stream.child(0));
      Psi psi = sketch_psi(data.z, sk, method);
      return assemble_full_filter(real.soi, psi,
                                  reduced_weights(data.z, psi, data.d));
    }
    case ReducerMethod::kColumnSelect: {
      SketchMatrix sk = make_column_select_sketch(data.z.cols(), method.r,
                                                  omega_stream.child(1));
      Psi psi = sketch_psi(data.z, sk, method);
      return assemble_full_filter(real.soi, psi,
                                  reduced_weights(data.z, psi, data.d));
    }
    case ReducerMethod::kPrincipalComponent: {
      Psi psi = pc_psi(data.z, method.r);
      return assemble_full_filter(real.soi, psi,
                                  reduced_weights(data.z, psi, data.d));
    }
    case ReducerMethod::kMinNorm:
      return mn_filter(real.soi, data.z, data.d);
    case ReducerMethod::kClairvoyant: {
      Psi psi = clairvoyant_psi(real.model, real.soi);
      return clairvoyant_filter(real.model, real.soi, psi);
    }
  }
  throw ConfigError("unhandled reducer method");
}

LossSample eval_method(const ScenarioRealization& real,
                       const TrainingData& data, RngStream omega_stream,
                       const ReducerSpec& method, const ScenarioSpec& spec) {
  FullFilter w = build_filter(real, data, omega_stream, method);
  LossSample s = snr_loss(w, real.soi.v, real.model);
  s.k = spec.k;
  return s;
}

// Per-task output; tasks never share slots, so no locking.
struct TrialSlot {
  std::vector<ResultRow> rows;
  std::size_t skipped = 0;
};

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body) {
  const std::size_t n_threads =
      std::min(std::max<std::size_t>(workers, 1), count);
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (std::size_t t = 0; t < n_threads; ++t) {
    pool.emplace_back([&body, &next, count] {
      for (std::size_t i = next.fetch_add(1); i < count;
           i = next.fetch_add(1)) {
        body(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

void run_methods_for_trial(const ScenarioRealization& real,
                           const ScenarioSpec& spec,
                           const std::vector<ReducerSpec>& methods,
                           RngStream trial_stream, std::size_t trial_index,
                           double sweep_value, TrialSlot* slot) {
  TrainingData data = split_channels(
      real.soi, sample_training(real.model, spec.k,
                                trial_stream.child(kSubData)));
  RngStream omega_stream = trial_stream.child(kSubOmega);
  for (const ReducerSpec& m : methods) {
    try {
      LossSample s = eval_method(real, data, omega_stream, m, spec);
      s.trial_index = trial_index;
      slot->rows.push_back(ResultRow{s, sweep_value});
    } catch (const Error&) {
      ++slot->skipped;
    }
  }
}

// Canonical order; aggregation then walks groups in a fixed sequence, so
// sums are reproducible independent of which worker produced which row.
void sort_rows(std::vector<ResultRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ResultRow& a, const ResultRow& b) {
                     const int ma = static_cast<int>(a.sample.method.method);
                     const int mb = static_cast<int>(b.sample.method.method);
                     if (ma != mb) return ma < mb;
                     if (a.sweep_value != b.sweep_value)
                       return a.sweep_value < b.sweep_value;
                     return a.sample.trial_index < b.sample.trial_index;
                   });
}

std::vector<AggregateRow> build_aggregates(const std::vector<ResultRow>& rows,
                                           bool group_by_sweep) {
  std::vector<AggregateRow> aggs;
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t end = i;
    while (end < rows.size() &&
           rows[end].sample.method.method == rows[i].sample.method.method &&
           (!group_by_sweep || rows[end].sweep_value == rows[i].sweep_value)) {
      ++end;
    }
    const std::size_t n = end - i;
    double sum = 0.0;
    double sum_db = 0.0;
    for (std::size_t t = i; t < end; ++t) {
      sum += rows[t].sample.loss;
      sum_db += rows[t].sample.loss_db;
    }
    AggregateRow a;
    a.method = rows[i].sample.method;
    a.sweep_value = group_by_sweep ? rows[i].sweep_value : 0.0;
    a.count = n;
    a.mean_loss = sum / static_cast<double>(n);
    a.mean_loss_db = sum_db / static_cast<double>(n);
    if (n > 1) {
      double ss = 0.0;
      for (std::size_t t = i; t < end; ++t) {
        const double dev = rows[t].sample.loss - a.mean_loss;
        ss += dev * dev;
      }
      a.stderr_loss = std::sqrt(ss / static_cast<double>(n - 1) /
                                static_cast<double>(n));
    }
    aggs.push_back(a);
    i = end;
  }
  return aggs;
}

ExperimentResult finish(std::string name, const ExperimentConfig& config,
                        std::vector<TrialSlot> slots, bool group_by_sweep,
                        Clock::time_point start) {
  ExperimentResult res;
  res.experiment = std::move(name);
  res.scenario = config.scenario;
  res.master_seed = config.master_seed;
  for (TrialSlot& slot : slots) {
    res.skipped += slot.skipped;
    for (ResultRow& row : slot.rows) res.rows.push_back(std::move(row));
  }
  sort_rows(res.rows);
  res.aggregates = build_aggregates(res.rows, group_by_sweep);
  res.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

std::vector<ReducerSpec> with_control(std::vector<ReducerSpec> methods) {
  const bool has = std::any_of(methods.begin(), methods.end(),
                               [](const ReducerSpec& m) {
                                 return m.method == ReducerMethod::kClairvoyant;
                               });
  if (!has) methods.push_back(ReducerSpec{ReducerMethod::kClairvoyant, 0});
  return methods;
}

// Common shape of `single` and `distribution`: a flat trial loop with
// sweep_value 0 everywhere.
ExperimentResult run_flat(const ExperimentConfig& config,
                          std::uint64_t experiment_id, std::string name,
                          const std::vector<ReducerSpec>& methods) {
  const Clock::time_point start = Clock::now();
  RngStream exp_stream =
      RngStream(config.master_seed).child(experiment_id);
  std::optional<ScenarioRealization> shared;
  if (!config.redraw_scenario_per_trial) {
    shared = make_realization(config.scenario,
                              exp_stream.child(kSharedScenarioSlot));
  }
  std::vector<TrialSlot> slots(config.trials);
  parallel_for(config.trials, config.workers, [&](std::size_t t) {
    RngStream trial_stream = exp_stream.child(1 + t);
    std::optional<ScenarioRealization> local;
    const ScenarioRealization* real = shared ? &*shared : nullptr;
    if (!real) {
      local = make_realization(config.scenario, trial_stream);
      real = &*local;
    }
    run_methods_for_trial(*real, config.scenario, methods, trial_stream, t,
                          0.0, &slots[t]);
  });
  return finish(std::move(name), config, std::move(slots),
                /*group_by_sweep=*/true, start);
}

}  // namespace

void ExperimentConfig::validate() const {
  scenario.validate();
  if (methods.empty()) throw ConfigError("methods must be non-empty");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (inner_realizations < 1) throw ConfigError("inner must be at least 1");
  for (const ReducerSpec& m : methods) {
    if (method_uses_r(m.method) && (m.r < 1 || m.r > scenario.k))
      throw ConfigError("r must satisfy 1 <= r <= k");
  }
}

LossSample run_trial(const ScenarioRealization& realization,
                     const ReducerSpec& method, const ScenarioSpec& spec,
                     RngStream trial_stream) {
  TrainingData data = split_channels(
      realization.soi, sample_training(realization.model, spec.k,
                                       trial_stream.child(kSubData)));
  return eval_method(realization, data, trial_stream.child(kSubOmega), method,
                     spec);
}

ExperimentResult run_single(const ExperimentConfig& config) {
  config.validate();
  return run_flat(config, kExpSingle, "single", config.methods);
}

ExperimentResult omega_study(const ExperimentConfig& config) {
  config.validate();
  std::optional<ReducerSpec> gauss;
  std::optional<ReducerSpec> select;
  for (const ReducerSpec& m : config.methods) {
    if (m.method == ReducerMethod::kGaussianSketch) {
      gauss = m;
    } else if (m.method == ReducerMethod::kColumnSelect) {
      select = m;
    } else {
      throw ConfigError("omega-study supports methods gaussian and select");
    }
  }

  const Clock::time_point start = Clock::now();
  RngStream exp_stream = RngStream(config.master_seed).child(kExpOmega);
  const ScenarioRealization shared = make_realization(
      config.scenario, exp_stream.child(kSharedScenarioSlot));

  // One task per Omega, Gaussian family first; the task index is also the
  // 0-based Omega index.
  struct OmegaTask {
    ReducerSpec spec;
    bool gaussian = true;
  };
  std::vector<OmegaTask> tasks;
  if (gauss) {
    for (std::size_t t = 0; t < config.trials; ++t)
      tasks.push_back(OmegaTask{*gauss, true});
  }
  if (select) {
    for (std::size_t t = 0; t < config.trials; ++t)
      tasks.push_back(OmegaTask{*select, false});
  }

  std::vector<TrialSlot> slots(tasks.size());
  parallel_for(tasks.size(), config.workers, [&](std::size_t idx) {
    const OmegaTask& task = tasks[idx];
    RngStream omega_trial = exp_stream.child(1 + idx);
    try {
      RngStream draw = omega_trial.child(kSubOmega);
      const SketchMatrix sk =
          task.gaussian
              ? make_gaussian_sketch(config.scenario.k, task.spec.r,
                                     draw.child(0))
              : make_column_select_sketch(config.scenario.k, task.spec.r,
                                          draw.child(1));
      RngStream data_parent = omega_trial.child(kSubData);
      double sum = 0.0;
      for (std::size_t i = 0; i < config.inner_realizations; ++i) {
        TrainingData data = split_channels(
            shared.soi, sample_training(shared.model, config.scenario.k,
                                        data_parent.child(i)));
        Psi psi = sketch_psi(data.z, sk, task.spec);
        FullFilter w = assemble_full_filter(
            shared.soi, psi, reduced_weights(data.z, psi, data.d));
        sum += snr_loss(w, shared.soi.v, shared.model).loss;
      }
      LossSample s;
      s.loss = sum / static_cast<double>(config.inner_realizations);
      s.loss_db = 10.0 * std::log10(s.loss);
      s.method = task.spec;
      s.trial_index = idx;
      s.r = task.spec.r;
      s.k = config.scenario.k;
      slots[idx].rows.push_back(ResultRow{s, static_cast<double>(1 + idx)});
    } catch (const Error&) {
      ++slots[idx].skipped;
    }
  });

  // Clairvoyant control on the shared scenario.
  TrialSlot control;
  try {
    Psi psi = clairvoyant_psi(shared.model, shared.soi);
    FullFilter w = clairvoyant_filter(shared.model, shared.soi, psi);
    LossSample s = snr_loss(w, shared.soi.v, shared.model);
    s.k = config.scenario.k;
    control.rows.push_back(ResultRow{s, 0.0});
  } catch (const Error&) {
    ++control.skipped;
  }
  slots.push_back(std::move(control));

  return finish("omega-study", config, std::move(slots),
                /*group_by_sweep=*/false, start);
}

ExperimentResult loss_distribution(const ExperimentConfig& config) {
  config.validate();
  return run_flat(config, kExpDistribution, "distribution",
                  with_control(config.methods));
}

ExperimentResult sweep_r(const ExperimentConfig& config,
                         const std::vector<std::size_t>& r_values) {
  config.validate();
  if (r_values.empty()) throw ConfigError("r-values must be non-empty");
  for (std::size_t r : r_values) {
    if (r < 1 || r > config.scenario.k)
      throw ConfigError("r-values must lie in [1, k]");
  }
  std::vector<ReducerSpec> swept;
  for (const ReducerSpec& m : config.methods) {
    if (method_uses_r(m.method)) swept.push_back(m);
  }
  const std::vector<ReducerSpec> references = {
      ReducerSpec{ReducerMethod::kMinNorm, 0},
      ReducerSpec{ReducerMethod::kClairvoyant, 0}};

  const Clock::time_point start = Clock::now();
  RngStream exp_stream = RngStream(config.master_seed).child(kExpSweepR);
  std::optional<ScenarioRealization> shared;
  if (!config.redraw_scenario_per_trial) {
    shared = make_realization(config.scenario,
                              exp_stream.child(kSharedScenarioSlot));
  }

  std::vector<TrialSlot> slots(config.trials);
  parallel_for(config.trials, config.workers, [&](std::size_t t) {
    RngStream trial_stream = exp_stream.child(1 + t);
    std::optional<ScenarioRealization> local;
    const ScenarioRealization* real = shared ? &*shared : nullptr;
    if (!real) {
      local = make_realization(config.scenario, trial_stream);
      real = &*local;
    }
    TrialSlot& slot = slots[t];
    TrainingData data = split_channels(
        real->soi, sample_training(real->model, config.scenario.k,
                                   trial_stream.child(kSubData)));
    RngStream omega_stream = trial_stream.child(kSubOmega);
    // All R points share this trial's data, and sketches drawn from the
    // restarted omega stream are nested across R, so the sweep is paired.
    for (const ReducerSpec& base : swept) {
      for (std::size_t r : r_values) {
        ReducerSpec m = base;
        m.r = r;
        try {
          LossSample s =
              eval_method(*real, data, omega_stream, m, config.scenario);
          s.trial_index = t;
          slot.rows.push_back(ResultRow{s, static_cast<double>(r)});
        } catch (const Error&) {
          ++slot.skipped;
        }
      }
    }
    for (const ReducerSpec& m : references) {
      try {
        LossSample s =
            eval_method(*real, data, omega_stream, m, config.scenario);
        s.trial_index = t;
        slot.rows.push_back(ResultRow{s, 0.0});
      } catch (const Error&) {
        ++slot.skipped;
      }
    }
  });
  return finish("sweep-r", config, std::move(slots),
                /*group_by_sweep=*/true, start);
}

ExperimentResult sweep_k(const ExperimentConfig& config,
                         const std::vector<std::size_t>& k_values) {
  config.validate();
  if (k_values.empty()) throw ConfigError("k-values must be non-empty");
  std::size_t r_max = 0;
  for (const ReducerSpec& m : config.methods) {
    if (method_uses_r(m.method)) r_max = std::max(r_max, m.r);
  }
  const std::size_t k_lo = std::max(r_max, config.scenario.j);
  for (std::size_t k : k_values) {
    if (k < k_lo || k >= config.scenario.n)
      throw ConfigError("k-values must lie in [max(r, j), n-1]");
  }
  const std::vector<ReducerSpec> methods = with_control(config.methods);

  const Clock::time_point start = Clock::now();
  RngStream exp_stream = RngStream(config.master_seed).child(kExpSweepK);
  std::optional<ScenarioRealization> shared;
  if (!config.redraw_scenario_per_trial) {
    shared = make_realization(config.scenario,
                              exp_stream.child(kSharedScenarioSlot));
  }

  const std::size_t task_count = k_values.size() * config.trials;
  std::vector<TrialSlot> slots(task_count);
  parallel_for(task_count, config.workers, [&](std::size_t idx) {
    const std::size_t ki = idx / config.trials;
    const std::size_t t = idx % config.trials;
    ScenarioSpec spec_k = config.scenario;
    spec_k.k = k_values[ki];
    RngStream trial_stream = exp_stream.child(1 + ki).child(1 + t);
    std::optional<ScenarioRealization> local;
    const ScenarioRealization* real = shared ? &*shared : nullptr;
    if (!real) {
      local = make_realization(spec_k, trial_stream);
      real = &*local;
    }
    run_methods_for_trial(*real, spec_k, methods, trial_stream, t,
                          static_cast<double>(spec_k.k), &slots[idx]);
  });
  return finish("sweep-k", config, std::move(slots),
                /*group_by_sweep=*/true, start);
}

}  // namespace gscsim
