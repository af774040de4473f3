// src/reducers.cc

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

#include "gscsim/reducers.h"

#include <cmath>
#include <numeric>
#include <utility>

#include "gscsim/errors.h"
#include "gscsim/linalg.h"

namespace gscsim {

std::string method_name(ReducerMethod m) {
  switch (m) {
    case ReducerMethod::kGaussianSketch:
      return "gaussian";
    case ReducerMethod::kColumnSelect:
      return "select";
    case ReducerMethod::kPrincipalComponent:
      return "pc";
    case ReducerMethod::kMinNorm:
      return "mn";
    case ReducerMethod::kClairvoyant:
      return "clairvoyant";
  }
  return "unknown";
}

ReducerMethod parse_method(const std::string& name) {
  if (name == "gaussian") return ReducerMethod::kGaussianSketch;
  if (name == "select") return ReducerMethod::kColumnSelect;
  if (name == "pc") return ReducerMethod::kPrincipalComponent;
  if (name == "mn") return ReducerMethod::kMinNorm;
  if (name == "clairvoyant") return ReducerMethod::kClairvoyant;
  throw ConfigError("unknown method '" + name +
                    "' (expected gaussian|select|pc|mn|clairvoyant)");
}

SketchMatrix make_gaussian_sketch(std::size_t k, std::size_t r,
                                  RngStream stream) {
  if (r < 1 || r > k) throw ConfigError("gaussian sketch: need 1 <= r <= k");
  Rng rng = stream.engine();
  SketchMatrix out;
  out.kind = SketchMatrix::Kind::kGaussian;
  out.omega = Matrix(k, r);
  rng.fill_normal(out.omega.data(), out.omega.size());
  return out;
}

SketchMatrix make_column_select_sketch(std::size_t k, std::size_t r,
                                       RngStream stream) {
  if (r < 1 || r > k) throw ConfigError("column select: need 1 <= r <= k");
  Rng rng = stream.engine();
  // Partial Fisher-Yates: the first r entries are the chosen indices, and
  // a longer draw from the same stream keeps them as its prefix.
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t swap_with = i + rng.uniform_below(k - i);
    std::swap(idx[i], idx[swap_with]);
  }
  SketchMatrix out;
  out.kind = SketchMatrix::Kind::kSelection;
  out.selected_indices.assign(idx.begin(), idx.begin() + r);
  out.omega = Matrix(k, r);
  for (std::size_t c = 0; c < r; ++c) {
    out.omega(out.selected_indices[c], c) = 1.0;
  }
  return out;
}

Psi sketch_psi(const Matrix& z, const SketchMatrix& sketch,
               const ReducerSpec& spec) {
  Psi out;
  out.psi = multiply(z, sketch.omega);
  out.spec = spec;
  out.sketch = sketch;
  return out;
}

Psi pc_psi(const Matrix& z, std::size_t r) {
  Psi out;
  out.psi = linalg::top_left_singular_vectors(z, r);
  for (std::size_t j = 0; j < out.psi.cols(); ++j) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < out.psi.rows(); ++i) {
      const double a = std::fabs(out.psi(i, j));
      if (a > best) {
        best = a;
        arg = i;
      }
    }
    if (out.psi(arg, j) < 0.0) {
      for (std::size_t i = 0; i < out.psi.rows(); ++i) {
        out.psi(i, j) = -out.psi(i, j);
      }
    }
  }
  out.spec = {ReducerMethod::kPrincipalComponent, r};
  return out;
}

Psi clairvoyant_psi(const CovarianceModel& model, const SoIBasis& soi) {
  Psi out;
  out.psi = multiply_tn(soi.v_perp, model.g());
  out.spec = {ReducerMethod::kClairvoyant, model.q.cols()};
  return out;
}

}  // namespace gscsim
