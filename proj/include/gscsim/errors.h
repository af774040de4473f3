// gscsim/errors.h

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

#ifndef GSCSIM_ERRORS_H_
#define GSCSIM_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gscsim {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Incompatible matrix/vector shapes or an invalid size argument.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// An iterative method ran out of its iteration budget; carries the
/// residual it stopped at.
class NotConvergedError : public Error {
 public:
  NotConvergedError(const std::string& msg, double residual)
      : Error(msg), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

/// A requested rank exceeds the numerical rank; carries the first
/// deficient index.
class RankError : public Error {
 public:
  RankError(const std::string& msg, std::size_t index)
      : Error(msg), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(const std::string& msg) : Error(msg) {}
};

/// Invalid scenario or run configuration (bad flag value, violated bound).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace gscsim

#endif  // GSCSIM_ERRORS_H_
