// gscsim/kernels.h

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

#ifndef GSCSIM_KERNELS_H_
#define GSCSIM_KERNELS_H_

#include <cstddef>

namespace gscsim {
namespace kernels {

/// Table of the low-level vector kernels everything else is built on.
/// Each backend (scalar, avx2, neon) fills one of these.  The rotation
/// convention is  x' = c*x - s*y,  y' = s*x + c*y.
struct Ops {
  const char* name;
  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*sum_sq)(const double* x, std::size_t n);
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  void (*scal)(double a, double* x, std::size_t n);
  void (*rot)(double* x, double* y, double c, double s, std::size_t n);
};

/// Portable reference implementation, always available.
const Ops& scalar_ops();

/// Best SIMD backend that was compiled in and is supported by the running
/// CPU, or nullptr if there is none.
const Ops* simd_ops();

/// Backend used by the rest of the library.  Chosen once on first use:
/// the SIMD backend when available, otherwise scalar.  The environment
/// variable GSCSIM_KERNELS (values: scalar, avx2, neon) overrides the
/// choice; an unavailable request falls back to scalar.
const Ops& active();

}  // namespace kernels
}  // namespace gscsim

#endif  // GSCSIM_KERNELS_H_
