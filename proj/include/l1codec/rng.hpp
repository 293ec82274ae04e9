// Copyright 2026 The l1codec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef L1CODEC_RNG_HPP_
#define L1CODEC_RNG_HPP_

#include <cstdint>
#include <vector>

#include "l1codec/linalg.hpp"

namespace l1codec {

// (master_seed, stream_index) fully determines every sampled value.
// Distinct stream indices give statistically independent streams, so trials
// can be dealt out to workers in any order without changing the results.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

// Counter-based SplitMix64 stream. Output i is the SplitMix64 finalizer
// applied to key + (i+1)*gamma, with the key derived from the seed pair.
// Gaussians come from inverting the normal CDF (Wichura's AS241), so the
// sequence is identical on every platform and independent of the C++
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(SeedSpec seed);

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53 random bits.
  double next_u01();

  // Standard normal draw by inversion.
  double next_normal();

  // Unbiased uniform draw from {0, ..., n-1}; n must be positive.
  std::uint64_t next_below(std::uint64_t n);

  // log-uniform magnitude on [lo, hi], 0 < lo < hi.
  double next_log_uniform(double lo, double hi);

  // +1 or -1 with equal probability.
  int next_sign();

  // Sorted sample of `count` distinct indices from {0, ..., population-1}.
  std::vector<int> sample_subset(int population, int count);

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

// Derives an unrelated seed family from `base`; `salt` selects the member.
// Used when an operation needs its own internal sub-streams without
// colliding with stream indices handed out by the caller.
SeedSpec subseed(SeedSpec base, std::uint64_t salt);

// Percent point function of the standard normal (AS241, double precision).
double inverse_normal_cdf(double p);

// rows x cols matrix of i.i.d. standard normals from the seeded stream.
RealMatrix sample_gaussian_matrix(int rows, int cols, SeedSpec seed);

RealVector sample_gaussian_vector(int dim, SeedSpec seed);

// Haar-distributed m x n orthonormal frame: the Q factor of a Gaussian
// matrix under the positive-diagonal QR convention.
RealMatrix sample_haar_orthonormal(int m, int n, SeedSpec seed);

}  // namespace l1codec

#endif  // L1CODEC_RNG_HPP_
