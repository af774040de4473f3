// src/kernels.cc

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

#include "gscsim/kernels.h"

#include <cstdlib>
#include <cstring>

namespace gscsim {
namespace kernels {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double sum_sq_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scal_scalar(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void rot_scalar(double* x, double* y, double c, double s, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

const Ops kScalarOps = {
    "scalar", dot_scalar, sum_sq_scalar, axpy_scalar, scal_scalar, rot_scalar,
};

const Ops* select_active() {
  const char* req = std::getenv("GSCSIM_KERNELS");
  if (req != nullptr) {
    if (std::strcmp(req, "scalar") == 0) return &kScalarOps;
    const Ops* simd = simd_ops();
    if (simd != nullptr && std::strcmp(req, simd->name) == 0) return simd;
    return &kScalarOps;  // unknown or unavailable backend requested
  }
  const Ops* simd = simd_ops();
  return simd != nullptr ? simd : &kScalarOps;
}

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

#if defined(GSCSIM_HAVE_AVX2_KERNELS)
const Ops* avx2_ops_if_supported();  // defined in kernels_avx2.cc
#endif
#if defined(GSCSIM_HAVE_NEON_KERNELS)
const Ops* neon_ops();  // defined in kernels_neon.cc
#endif

const Ops* simd_ops() {
#if defined(GSCSIM_HAVE_AVX2_KERNELS)
  return avx2_ops_if_supported();
#elif defined(GSCSIM_HAVE_NEON_KERNELS)
  return neon_ops();
#else
  return nullptr;
#endif
}

const Ops& active() {
  static const Ops* selected = select_active();
  return *selected;
}

}  // namespace kernels
}  // namespace gscsim
