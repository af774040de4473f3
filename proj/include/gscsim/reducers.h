// gscsim/reducers.h

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

// Construction of the dimension-reducing matrix Psi ((N-1) x R): random
// Gaussian sketch Psi = Z*Omega, random column selection, principal
// components of Z, and the known-statistics interference basis.

#ifndef GSCSIM_REDUCERS_H_
#define GSCSIM_REDUCERS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gscsim/matrix.h"
#include "gscsim/rng.h"
#include "gscsim/scenario.h"

namespace gscsim {

enum class ReducerMethod {
  kGaussianSketch,
  kColumnSelect,
  kPrincipalComponent,
  kMinNorm,
  kClairvoyant,
};

/// Short stable label used in CSV output and on the command line.
std::string method_name(ReducerMethod m);
ReducerMethod parse_method(const std::string& name);  // throws ConfigError

struct ReducerSpec {
  ReducerMethod method = ReducerMethod::kGaussianSketch;
  std::size_t r = 0;  // reduced dimension; 0 for min-norm (where R = K)
};

/// The K x R matrix Omega that turns Z into Psi = Z * Omega.
struct SketchMatrix {
  enum class Kind { kGaussian, kSelection };
  Matrix omega;
  Kind kind = Kind::kGaussian;
  // Selection kind only: column c of omega has its single 1 in row
  // selected_indices[c]; indices are distinct, 0-based.
  std::vector<std::size_t> selected_indices;
};

struct Psi {
  Matrix psi;  // (N-1) x R
  ReducerSpec spec;
  std::optional<SketchMatrix> sketch;
};

SketchMatrix make_gaussian_sketch(std::size_t k, std::size_t r,
                                  RngStream stream);

/// R distinct indices uniform without replacement; drawing more columns
/// from the same stream extends the same index sequence, so R and R' > R
/// draws share a prefix.
SketchMatrix make_column_select_sketch(std::size_t k, std::size_t r,
                                       RngStream stream);

Psi sketch_psi(const Matrix& z, const SketchMatrix& sketch,
               const ReducerSpec& spec);

/// Leading r left singular vectors of z, sign-fixed so the largest-
/// magnitude entry of each column is positive.
Psi pc_psi(const Matrix& z, std::size_t r);

/// Psi = v_perp^T G for the known covariance factor G = Q sqrt(Lambda);
/// R equals the interference rank.
Psi clairvoyant_psi(const CovarianceModel& model, const SoIBasis& soi);

}  // namespace gscsim

#endif  // GSCSIM_REDUCERS_H_
