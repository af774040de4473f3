// gscsim/rng.h

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

#ifndef GSCSIM_RNG_H_
#define GSCSIM_RNG_H_

#include <cstdint>
#include <initializer_list>

namespace gscsim {

class Rng;

/// Immutable handle for a random stream addressed by (master seed, path).
/// A path is the sequence of child indices taken from the root, e.g.
/// stream(seed).child(experiment).child(trial).child(substream).  Streams
/// with different paths are statistically independent; the same
/// (seed, path) always yields the bit-identical sequence.  Derivation is
/// pure value arithmetic, so streams can be handed to worker threads
/// freely.
class RngStream {
 public:
  explicit RngStream(std::uint64_t master_seed);
  RngStream(std::uint64_t master_seed,
            std::initializer_list<std::uint64_t> path);

  RngStream child(std::uint64_t index) const;

  /// Derived 64-bit stream key (a hash of seed and path).
  std::uint64_t key() const { return key_; }

  /// Stateful generator positioned at the start of this stream.
  Rng engine() const;

 private:
  explicit RngStream(std::uint64_t key, int) : key_(key) {}
  std::uint64_t key_;
};

/// xoshiro256++ generator with explicit, platform-independent integer
/// streams.  Gaussians come from Box-Muller on the raw bits, so a given
/// stream reproduces bit-identically on any IEEE double platform with
/// the same libm.
class Rng {
 public:
  explicit Rng(std::uint64_t key);

  std::uint64_t next_u64();
  std::uint64_t uniform_below(std::uint64_t n);  // [0, n)

  double uniform01();                    // [0, 1)
  double uniform(double lo, double hi);  // [lo, hi)
  double normal();                       // standard normal

  void fill_normal(double* dst, std::size_t n);

 private:
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gscsim

#endif  // GSCSIM_RNG_H_
