// src/results_io.cc

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

#include "gscsim/results_io.h"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "gscsim/errors.h"

namespace gscsim {
namespace {

constexpr const char* kRawHeader =
    "experiment,method,n,j,k,r,theta_deg,sweep_value,trial_index,loss,"
    "loss_db,seed";
constexpr const char* kAggHeader =
    "experiment,method,sweep_value,mean_loss,mean_loss_db,stderr_loss,count";

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // binary: no newline mangling
  if (!out) throw Error("cannot open output file: " + path);
  return out;
}

void close_or_throw(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw Error("write failed: " + path);
}

void write_raw_csv(const ExperimentResult& res, const std::string& path,
                   bool emit_raw) {
  std::ofstream out = open_or_throw(path);
  out << kRawHeader << '\n';
  if (emit_raw) {
    for (const ResultRow& row : res.rows) {
      const LossSample& s = row.sample;
      out << res.experiment << ',' << method_name(s.method.method) << ','
          << res.scenario.n << ',' << res.scenario.j << ',' << s.k << ','
          << s.r << ',' << format_double(res.scenario.theta_deg) << ','
          << format_double(row.sweep_value) << ',' << s.trial_index << ','
          << format_double(s.loss) << ',' << format_double(s.loss_db) << ','
          << res.master_seed << '\n';
    }
  }
  close_or_throw(out, path);
}

void write_agg_csv(const ExperimentResult& res, const std::string& path) {
  std::ofstream out = open_or_throw(path);
  out << kAggHeader << '\n';
  for (const AggregateRow& a : res.aggregates) {
    out << res.experiment << ',' << method_name(a.method.method) << ','
        << format_double(a.sweep_value) << ',' << format_double(a.mean_loss)
        << ',' << format_double(a.mean_loss_db) << ','
        << format_double(a.stderr_loss) << ',' << a.count << '\n';
  }
  close_or_throw(out, path);
}

void write_json(const ExperimentResult& res, const std::string& path,
                bool emit_raw) {
  nlohmann::ordered_json doc;
  doc["experiment"] = res.experiment;
  doc["seed"] = res.master_seed;
  doc["scenario"] = {{"n", res.scenario.n},
                     {"j", res.scenario.j},
                     {"k", res.scenario.k},
                     {"theta_deg", res.scenario.theta_deg},
                     {"eig_db_min", res.scenario.eig_db_min},
                     {"eig_db_max", res.scenario.eig_db_max},
                     {"sigma2", res.scenario.sigma2}};
  // No timing fields: identical (config, seed) must serialize to
  // identical bytes.
  doc["skipped"] = res.skipped;
  doc["rows"] = nlohmann::ordered_json::array();
  if (emit_raw) {
    for (const ResultRow& row : res.rows) {
      const LossSample& s = row.sample;
      doc["rows"].push_back({{"experiment", res.experiment},
                             {"method", method_name(s.method.method)},
                             {"n", res.scenario.n},
                             {"j", res.scenario.j},
                             {"k", s.k},
                             {"r", s.r},
                             {"theta_deg", res.scenario.theta_deg},
                             {"sweep_value", row.sweep_value},
                             {"trial_index", s.trial_index},
                             {"loss", s.loss},
                             {"loss_db", s.loss_db},
                             {"seed", res.master_seed}});
    }
  }
  doc["aggregates"] = nlohmann::ordered_json::array();
  for (const AggregateRow& a : res.aggregates) {
    doc["aggregates"].push_back({{"experiment", res.experiment},
                                 {"method", method_name(a.method.method)},
                                 {"sweep_value", a.sweep_value},
                                 {"mean_loss", a.mean_loss},
                                 {"mean_loss_db", a.mean_loss_db},
                                 {"stderr_loss", a.stderr_loss},
                                 {"count", a.count}});
  }
  std::ofstream out = open_or_throw(path);
  out << doc.dump(2) << '\n';
  close_or_throw(out, path);
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw ConfigError("unknown format '" + name + "' (expected csv|json)");
}

std::string aggregate_path(const std::string& path) {
  const std::size_t slash = path.find_last_of('/');
  const std::size_t dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + "_agg";
  return path.substr(0, dot) + "_agg" + path.substr(dot);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_results(const ExperimentResult& result, const std::string& path,
                   OutputFormat format, bool emit_raw) {
  if (format == OutputFormat::kJson) {
    write_json(result, path, emit_raw);
    return;
  }
  write_raw_csv(result, path, emit_raw);
  write_agg_csv(result, aggregate_path(path));
}

}  // namespace gscsim
