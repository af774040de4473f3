// tools/gscsim_main.cc

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

// gscsim: Monte Carlo studies of partially adaptive sidelobe-canceler
// filters built from randomized dimension reduction.
//
// Subcommands: single, omega-study, distribution, sweep-r, sweep-k.
// Unset values fall back to the bundled study defaults: N=100, J=10,
// K=2J, R=J, theta=75 deg, interference powers uniform on [15,25] dB,
// unit noise.  Exit codes: 0 success, 1 usage error, 2 runtime error.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gscsim/errors.h"
#include "gscsim/experiments.h"
#include "gscsim/results_io.h"

namespace {

using gscsim::ConfigError;

struct CliValues {
  // 0 / empty mean "not set"; resolved after flag and config merging.
  std::size_t n = 100;
  std::size_t j = 10;
  std::size_t k = 0;  // default 2J
  std::size_t r = 0;  // default J
  double theta_deg = 75.0;
  double eig_db_min = 15.0;
  double eig_db_max = 25.0;
  double sigma2 = 1.0;
  std::size_t trials = 0;  // default depends on the subcommand
  std::size_t inner = 100;
  std::uint64_t seed = 1;
  std::string methods;
  std::string r_values;
  std::string k_values;
  bool fix_scenario = false;
  std::string out;
  std::string format = "csv";
  bool emit_raw = true;
  std::size_t workers = 1;
  std::string config_file;
};

void add_common_options(CLI::App* sub, CliValues* v) {
  sub->add_option("--n", v->n, "observation dimension N");
  sub->add_option("--j", v->j, "interference rank J");
  sub->add_option("--k", v->k, "training sample count K (default 2J)");
  sub->add_option("--r", v->r, "reduced dimension R (default J)");
  sub->add_option("--theta-deg", v->theta_deg,
                  "angle between the signature and the interference "
                  "subspace, degrees");
  sub->add_option("--eig-db-min", v->eig_db_min,
                  "interference power lower bound, dB");
  sub->add_option("--eig-db-max", v->eig_db_max,
                  "interference power upper bound, dB");
  sub->add_option("--sigma2", v->sigma2, "white noise power");
  sub->add_option("--trials", v->trials, "Monte Carlo trials");
  sub->add_option("--inner", v->inner,
                  "training redraws per Omega (omega-study)");
  sub->add_option("--seed", v->seed, "master seed");
  sub->add_option("--methods", v->methods,
                  "comma list of gaussian|select|pc|mn|clairvoyant");
  sub->add_option("--r-values", v->r_values,
                  "comma list of R values (sweep-r)");
  sub->add_option("--k-values", v->k_values,
                  "comma list of K values (sweep-k)");
  sub->add_flag("--fix-scenario", v->fix_scenario,
                "share one scenario draw across all trials");
  sub->add_option("--out", v->out, "output path (default <subcommand>.<fmt>)");
  sub->add_option("--format", v->format, "csv or json");
  sub->add_option("--emit-raw", v->emit_raw,
                  "write raw per-trial rows (true/false)");
  sub->add_option("--workers", v->workers, "worker threads");
  sub->add_option("--config", v->config_file,
                  "JSON config file; explicit flags take precedence");
}

// Applies config-file values for every flag the command line left unset.
void merge_config_file(const CLI::App& sub, CliValues* v) {
  std::ifstream in(v->config_file);
  if (!in) throw ConfigError("cannot open config file: " + v->config_file);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("invalid config file: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw ConfigError("config file must hold an object");

  auto unset = [&sub](const std::string& flag) {
    const CLI::Option* opt = sub.get_option_no_throw(flag);
    return opt != nullptr && opt->count() == 0;
  };
  auto as_list = [](const nlohmann::json& val) {
    if (val.is_string()) return val.get<std::string>();
    if (val.is_array()) {
      std::string joined;
      for (const auto& item : val.items()) {
        if (!joined.empty()) joined += ',';
        joined += item.value().is_string() ? item.value().get<std::string>()
                                           : item.value().dump();
      }
      return joined;
    }
    throw ConfigError("config list values must be strings or arrays");
  };

  for (const auto& item : doc.items()) {
    const std::string& key = item.key();
    const nlohmann::json& val = item.value();
    try {
      if (key == "n" && unset("--n")) v->n = val.get<std::size_t>();
      else if (key == "j" && unset("--j")) v->j = val.get<std::size_t>();
      else if (key == "k" && unset("--k")) v->k = val.get<std::size_t>();
      else if (key == "r" && unset("--r")) v->r = val.get<std::size_t>();
      else if (key == "theta_deg" && unset("--theta-deg"))
        v->theta_deg = val.get<double>();
      else if (key == "eig_db_min" && unset("--eig-db-min"))
        v->eig_db_min = val.get<double>();
      else if (key == "eig_db_max" && unset("--eig-db-max"))
        v->eig_db_max = val.get<double>();
      else if (key == "sigma2" && unset("--sigma2"))
        v->sigma2 = val.get<double>();
      else if (key == "trials" && unset("--trials"))
        v->trials = val.get<std::size_t>();
      else if (key == "inner" && unset("--inner"))
        v->inner = val.get<std::size_t>();
      else if (key == "seed" && unset("--seed"))
        v->seed = val.get<std::uint64_t>();
      else if (key == "methods" && unset("--methods"))
        v->methods = as_list(val);
      else if (key == "r_values" && unset("--r-values"))
        v->r_values = as_list(val);
      else if (key == "k_values" && unset("--k-values"))
        v->k_values = as_list(val);
      else if (key == "fix_scenario" && unset("--fix-scenario"))
        v->fix_scenario = val.get<bool>();
      else if (key == "out" && unset("--out"))
        v->out = val.get<std::string>();
      else if (key == "format" && unset("--format"))
        v->format = val.get<std::string>();
      else if (key == "emit_raw" && unset("--emit-raw"))
        v->emit_raw = val.get<bool>();
      else if (key == "workers" && unset("--workers"))
        v->workers = val.get<std::size_t>();
      else if (key == "n" || key == "j" || key == "k" || key == "r" ||
               key == "theta_deg" || key == "eig_db_min" ||
               key == "eig_db_max" || key == "sigma2" || key == "trials" ||
               key == "inner" || key == "seed" || key == "methods" ||
               key == "r_values" || key == "k_values" ||
               key == "fix_scenario" || key == "out" || key == "format" ||
               key == "emit_raw" || key == "workers") {
        // Known key overridden by an explicit flag: nothing to do.
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    } catch (const nlohmann::json::exception&) {
      throw ConfigError("config key '" + key + "' has the wrong type");
    }
  }
}

std::vector<std::size_t> parse_size_list(const std::string& text,
                                         const std::string& flag) {
  std::vector<std::size_t> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos);
    try {
      std::size_t used = 0;
      const unsigned long long parsed = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      values.push_back(static_cast<std::size_t>(parsed));
    } catch (const std::exception&) {
      throw ConfigError(flag + " expects comma-separated integers, got '" +
                        item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

std::vector<gscsim::ReducerSpec> parse_methods(const std::string& text,
                                               std::size_t r) {
  std::vector<gscsim::ReducerSpec> methods;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos);
    gscsim::ReducerSpec spec;
    spec.method = gscsim::parse_method(item);  // throws ConfigError
    switch (spec.method) {
      case gscsim::ReducerMethod::kGaussianSketch:
      case gscsim::ReducerMethod::kColumnSelect:
      case gscsim::ReducerMethod::kPrincipalComponent:
        spec.r = r;
        break;
      default:
        spec.r = 0;
        break;
    }
    methods.push_back(spec);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return methods;
}

std::vector<std::size_t> default_r_values(std::size_t k) {
  std::vector<std::size_t> values;
  for (std::size_t r = 2; r <= k; r += 2) values.push_back(r);
  return values;
}

std::vector<std::size_t> default_k_values(std::size_t j) {
  std::vector<std::size_t> values;
  for (std::size_t k = j + 2; k <= 4 * j; k += 2) values.push_back(k);
  return values;
}

void print_summary(const gscsim::ExperimentResult& res) {
  std::printf("experiment: %s  seed: %llu  skipped: %zu  elapsed: %.2f s\n",
              res.experiment.c_str(),
              static_cast<unsigned long long>(res.master_seed), res.skipped,
              res.elapsed_seconds);
  std::printf("%-12s %10s %14s %12s %12s %8s\n", "method", "sweep",
              "mean_loss", "mean_db", "stderr", "count");
  for (const gscsim::AggregateRow& a : res.aggregates) {
    std::printf("%-12s %10g %14.8f %12.4f %12.3e %8zu\n",
                gscsim::method_name(a.method.method).c_str(), a.sweep_value,
                a.mean_loss, a.mean_loss_db, a.stderr_loss, a.count);
  }
}

void print_raw_rows(const gscsim::ExperimentResult& res) {
  for (const gscsim::ResultRow& row : res.rows) {
    std::printf("%-12s trial %zu  loss %.10f  (%.4f dB)\n",
                gscsim::method_name(row.sample.method.method).c_str(),
                row.sample.trial_index, row.sample.loss, row.sample.loss_db);
  }
}

int run(const std::string& subcommand, const CLI::App& sub, CliValues v) {
  if (!v.config_file.empty()) merge_config_file(sub, &v);

  // Resolve study defaults after both flag and config merging.
  if (v.k == 0) v.k = 2 * v.j;
  if (v.r == 0) v.r = v.j;
  if (v.trials == 0) {
    if (subcommand == "single") v.trials = 1;
    else if (subcommand == "omega-study") v.trials = 100;
    else v.trials = 2000;
  }
  if (v.methods.empty()) {
    if (subcommand == "omega-study") v.methods = "gaussian,select";
    else if (subcommand == "single") v.methods = "gaussian";
    else if (subcommand == "sweep-k") v.methods = "gaussian,select,pc,mn";
    else v.methods = "gaussian,select,pc";
  }
  if (v.out.empty())
    v.out = subcommand + (v.format == "json" ? ".json" : ".csv");

  gscsim::ExperimentConfig config;
  config.scenario.n = v.n;
  config.scenario.j = v.j;
  config.scenario.k = v.k;
  config.scenario.theta_deg = v.theta_deg;
  config.scenario.eig_db_min = v.eig_db_min;
  config.scenario.eig_db_max = v.eig_db_max;
  config.scenario.sigma2 = v.sigma2;
  config.methods = parse_methods(v.methods, v.r);
  config.trials = v.trials;
  config.inner_realizations = v.inner;
  config.redraw_scenario_per_trial = !v.fix_scenario;
  config.master_seed = v.seed;
  config.workers = v.workers == 0 ? 1 : v.workers;
  const gscsim::OutputFormat format = gscsim::parse_format(v.format);

  gscsim::ExperimentResult result;
  if (subcommand == "single") {
    result = gscsim::run_single(config);
  } else if (subcommand == "omega-study") {
    result = gscsim::omega_study(config);
  } else if (subcommand == "distribution") {
    result = gscsim::loss_distribution(config);
  } else if (subcommand == "sweep-r") {
    const std::vector<std::size_t> r_values =
        v.r_values.empty() ? default_r_values(v.k)
                           : parse_size_list(v.r_values, "--r-values");
    result = gscsim::sweep_r(config, r_values);
  } else {
    const std::vector<std::size_t> k_values =
        v.k_values.empty() ? default_k_values(v.j)
                           : parse_size_list(v.k_values, "--k-values");
    result = gscsim::sweep_k(config, k_values);
  }

  gscsim::write_results(result, v.out, format, v.emit_raw);
  if (subcommand == "single") print_raw_rows(result);
  print_summary(result);
  if (format == gscsim::OutputFormat::kCsv) {
    std::printf("wrote %s and %s\n", v.out.c_str(),
                gscsim::aggregate_path(v.out).c_str());
  } else {
    std::printf("wrote %s\n", v.out.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Monte Carlo harness for partially adaptive sidelobe-canceler "
      "filters with randomized dimension reduction"};
  app.require_subcommand(1);
  CliValues values;
  const char* names[] = {"single", "omega-study", "distribution", "sweep-r",
                         "sweep-k"};
  const char* descriptions[] = {
      "run the configured methods and print each loss sample",
      "hold the scenario fixed and score many Omega draws",
      "raw SNR-loss samples over random scenarios",
      "mean SNR loss versus reduced dimension R",
      "mean SNR loss versus training sample count K"};
  for (std::size_t i = 0; i < 5; ++i) {
    add_common_options(app.add_subcommand(names[i], descriptions[i]),
                       &values);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const CLI::App* sub = app.get_subcommands().front();
  try {
    return run(sub->get_name(), *sub, values);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
