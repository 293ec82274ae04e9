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

#ifndef L1CODEC_CODEC_HPP_
#define L1CODEC_CODEC_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "l1codec/bp.hpp"
#include "l1codec/rng.hpp"

namespace l1codec {

struct CodeParams {
  int m = 0;  // codeword length
  int n = 0;  // message length, n < m
  int r = 0;  // number of corrupted coordinates the code must survive

  int redundancy() const { return m - n; }               // R
  double error_fraction() const { return static_cast<double>(r) / m; }
  void validate() const;
};

// Encoder Q with orthonormal columns alongside the complement of its range;
// decoding and certification share the one sampled subspace pair.
struct Codec {
  CodeParams params;
  SeedSpec seed;
  RealMatrix q;              // m x n
  SubspaceBasis range;       // span(q)
  SubspaceBasis complement;  // m x R, orthogonal to the range
};

Codec make_codec(const CodeParams& params, SeedSpec seed);

// y = Qx; an isometry.
RealVector encode(const Codec& codec, const RealVector& x);

struct Corruption {
  std::vector<int> support;  // distinct coordinates of the codeword
  RealVector values;         // added on the support, any magnitude
};

RealVector corrupt(const RealVector& y, const Corruption& corruption);

struct DecodeOutcome {
  RealVector x_hat;  // n
  RealVector u;      // m, the l1 projection onto the code range
  double objective = 0.0;
  bool unique = true;
};

// l1-projects y_prime onto the code range and inverts the encoder.
DecodeOutcome decode(const Codec& codec, const RealVector& y_prime);

// Same minimization as decode; the name marks call sites that feed it
// codewords carrying extra small-l1 noise on top of coordinate corruption.
DecodeOutcome robust_decode(const Codec& codec, const RealVector& y_double_prime);

struct RobustBound {
  double error_l1 = 0.0;  // ||u - y||_1
  double budget = 0.0;    // 4 ||h||_1
  bool within = false;
};

// Evaluated by harnesses that know the clean codeword y and the noise h.
RobustBound robustness_bound(const DecodeOutcome& outcome, const RealVector& y,
                             const RealVector& h);

// Codeword coefficients rounded to the grid step 1/(10m), stored as exact
// integer levels.
struct QuantizedWord {
  std::vector<std::int64_t> levels;
  double grid_step = 0.0;
};

// Encodes x in {1..alphabet_size}^n and quantizes. The per-coordinate
// rounding error is at most 1/(20m), so the l1 distortion never exceeds
// 1/20. Requires m <= 2n (the quantized path's parameter regime) and
// alphabet membership (OutOfAlphabet otherwise).
QuantizedWord quantized_encode(const Codec& codec, const std::vector<int>& x,
                               int alphabet_size);

RealVector dequantize(const QuantizedWord& word);

// Decodes a possibly level-corrupted quantized word and rounds the message
// coefficients to integers.
std::vector<int> quantized_decode(const Codec& codec, const QuantizedWord& word);

// Compact reproducible form: parameters and seed only; matrices are
// regenerated deterministically on load.
std::string codec_to_json(const Codec& codec);
Codec codec_from_json(const std::string& text);

}  // namespace l1codec

#endif  // L1CODEC_CODEC_HPP_
