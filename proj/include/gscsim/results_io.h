// gscsim/results_io.h

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

// Result serialization.  CSV is the primary artifact: a raw per-sample
// file plus an `_agg` companion with the per-group means.  Numbers are
// written with 17 significant digits so doubles round-trip exactly, and
// rows are emitted in the result's canonical order, which makes output
// files byte-identical for identical (config, seed).

#ifndef GSCSIM_RESULTS_IO_H_
#define GSCSIM_RESULTS_IO_H_

#include <string>

#include "gscsim/experiments.h"

namespace gscsim {

enum class OutputFormat { kCsv, kJson };

/// "csv" or "json"; throws ConfigError otherwise.
OutputFormat parse_format(const std::string& name);

/// Companion aggregate path: `_agg` inserted before the extension
/// ("out.csv" -> "out_agg.csv", "out" -> "out_agg").
std::string aggregate_path(const std::string& path);

/// Shortest exact decimal: %.17g.
std::string format_double(double v);

/// CSV: writes the raw file at `path` (header always; rows only when
/// emit_raw) and the aggregate file at aggregate_path(path).
/// JSON: writes a single file at `path` mirroring the same records.
/// Throws Error on I/O failure.
void write_results(const ExperimentResult& result, const std::string& path,
                   OutputFormat format, bool emit_raw);

}  // namespace gscsim

#endif  // GSCSIM_RESULTS_IO_H_
