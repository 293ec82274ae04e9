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

#include "l1codec/codec.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

#include "l1codec/errors.hpp"

namespace l1codec {

void CodeParams::validate() const {
  if (!(m > n && n >= 1 && r >= 0 && m - n >= 1)) {
    throw DimensionMismatch("CodeParams: need m > n >= 1, r >= 0");
  }
  if (r >= m) {
    throw DimensionMismatch("CodeParams: r must be below m");
  }
}

Codec make_codec(const CodeParams& params, SeedSpec seed) {
  params.validate();
  Codec codec;
  codec.params = params;
  codec.seed = seed;
  codec.q = sample_haar_orthonormal(params.m, params.n, seed);
  codec.range = SubspaceBasis(codec.q);
  codec.complement = SubspaceBasis(complement_basis(codec.q));
  return codec;
}

RealVector encode(const Codec& codec, const RealVector& x) {
  if (x.size() != codec.params.n) {
    throw DimensionMismatch("encode: message length");
  }
  require_finite(x, "encode: x");
  return codec.q * x;
}

RealVector corrupt(const RealVector& y, const Corruption& corruption) {
  if (static_cast<Eigen::Index>(corruption.support.size()) !=
      corruption.values.size()) {
    throw DimensionMismatch("corrupt: support/values length");
  }
  std::set<int> seen;
  RealVector out = y;
  for (std::size_t t = 0; t < corruption.support.size(); ++t) {
    const int i = corruption.support[t];
    if (i < 0 || i >= y.size()) {
      throw IndexOutOfRange("corrupt: support index outside codeword");
    }
    if (!seen.insert(i).second) {
      throw IndexOutOfRange("corrupt: duplicate support index");
    }
    out[i] += corruption.values[t];
  }
  return out;
}

DecodeOutcome decode(const Codec& codec, const RealVector& y_prime) {
  if (y_prime.size() != codec.params.m) {
    throw DimensionMismatch("decode: received word length");
  }
  const BpDecodeResult bp = decode_l1(codec.range, y_prime);
  DecodeOutcome out;
  out.u = bp.u;
  out.x_hat = codec.q.transpose() * bp.u;
  out.objective = bp.objective;
  out.unique = bp.unique;
  return out;
}

DecodeOutcome robust_decode(const Codec& codec,
                            const RealVector& y_double_prime) {
  return decode(codec, y_double_prime);
}

RobustBound robustness_bound(const DecodeOutcome& outcome, const RealVector& y,
                             const RealVector& h) {
  RobustBound rb;
  rb.error_l1 = norm_l1(outcome.u - y);
  rb.budget = 4.0 * norm_l1(h);
  rb.within = rb.error_l1 <= rb.budget;
  return rb;
}

QuantizedWord quantized_encode(const Codec& codec, const std::vector<int>& x,
                               int alphabet_size) {
  const int m = codec.params.m;
  const int n = codec.params.n;
  if (m > 2 * n) {
    throw DimensionMismatch("quantized_encode: quantized path needs m <= 2n");
  }
  if (static_cast<int>(x.size()) != n) {
    throw DimensionMismatch("quantized_encode: message length");
  }
  RealVector xv(n);
  for (int i = 0; i < n; ++i) {
    // Symbols live in {1..p}; 0 is also accepted so the zero word stays
    // encodable.
    if (x[i] < 0 || x[i] > alphabet_size) {
      throw OutOfAlphabet("quantized_encode: symbol outside {1..p}");
    }
    xv[i] = static_cast<double>(x[i]);
  }
  const RealVector y = codec.q * xv;
  QuantizedWord word;
  word.grid_step = 1.0 / (10.0 * m);
  word.levels.resize(m);
  for (int i = 0; i < m; ++i) {
    // Half-away-from-zero rounding keeps each coordinate within half a step.
    word.levels[i] = std::llround(y[i] * 10.0 * m);
  }
  return word;
}

RealVector dequantize(const QuantizedWord& word) {
  RealVector y(static_cast<Eigen::Index>(word.levels.size()));
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    y[i] = static_cast<double>(word.levels[i]) * word.grid_step;
  }
  return y;
}

std::vector<int> quantized_decode(const Codec& codec,
                                  const QuantizedWord& word) {
  if (codec.params.m > 2 * codec.params.n) {
    throw DimensionMismatch("quantized_decode: quantized path needs m <= 2n");
  }
  if (static_cast<int>(word.levels.size()) != codec.params.m) {
    throw DimensionMismatch("quantized_decode: word length");
  }
  const DecodeOutcome out = decode(codec, dequantize(word));
  std::vector<int> x(codec.params.n);
  for (int i = 0; i < codec.params.n; ++i) {
    x[i] = static_cast<int>(std::llround(out.x_hat[i]));
  }
  return x;
}

std::string codec_to_json(const Codec& codec) {
  nlohmann::json j;
  j["m"] = codec.params.m;
  j["n"] = codec.params.n;
  j["r"] = codec.params.r;
  j["seed"] = {{"master", codec.seed.master_seed},
               {"stream", codec.seed.stream_index}};
  return j.dump();
}

Codec codec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("codec_from_json: ") + e.what());
  }
  try {
    CodeParams params;
    params.m = j.at("m").get<int>();
    params.n = j.at("n").get<int>();
    params.r = j.at("r").get<int>();
    SeedSpec seed;
    seed.master_seed = j.at("seed").at("master").get<std::uint64_t>();
    seed.stream_index = j.at("seed").at("stream").get<std::uint64_t>();
    return make_codec(params, seed);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("codec_from_json: missing field: ") + e.what());
  }
}

}  // namespace l1codec
