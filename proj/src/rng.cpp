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

#include "l1codec/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace l1codec {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kStreamGamma = 0xD1B54A32D192ED03ull;

constexpr std::uint64_t sm_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr std::uint64_t stream_key(SeedSpec s) {
  return sm_finalize(sm_finalize(s.master_seed + kGamma) +
                     s.stream_index * kStreamGamma);
}

}  // namespace

Rng::Rng(SeedSpec seed) : key_(stream_key(seed)) {}

std::uint64_t Rng::next_u64() {
  counter_ += 1;
  return sm_finalize(key_ + counter_ * kGamma);
}

double Rng::next_u01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::next_normal() {
  // Shift to the bin center so the argument is strictly inside (0, 1).
  const double u =
      (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  return inverse_normal_cdf(u);
}

std::uint64_t Rng::next_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::next_below: n must be > 0");
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t x = next_u64();
    if (x >= threshold) return x % n;
  }
}

double Rng::next_log_uniform(double lo, double hi) {
  if (!(0.0 < lo && lo < hi)) {
    throw std::invalid_argument("Rng::next_log_uniform: need 0 < lo < hi");
  }
  const double t = next_u01();
  return std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)));
}

int Rng::next_sign() { return (next_u64() & 1u) ? 1 : -1; }

std::vector<int> Rng::sample_subset(int population, int count) {
  if (count < 0 || count > population) {
    throw std::invalid_argument("Rng::sample_subset: bad count");
  }
  // Floyd's algorithm: distinct without building the full population.
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int j = population - count; j < population; ++j) {
    const int t = static_cast<int>(next_below(static_cast<std::uint64_t>(j) + 1));
    if (std::find(out.begin(), out.end(), t) != out.end()) {
      out.push_back(j);
    } else {
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SeedSpec subseed(SeedSpec base, std::uint64_t salt) {
  return SeedSpec{stream_key(base), salt};
}

double inverse_normal_cdf(double p) {
  // Wichura (1988), algorithm AS241, PPND16. Accurate to ~1e-16 relative
  // over (0, 1).
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("inverse_normal_cdf: p outside (0, 1)");
  }
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                 6.7265770927008700853e+4) *
                    r +
                4.5921953931549871457e+4) *
                   r +
               1.3731693765509461125e+4) *
                  r +
              1.9715909503065514427e+3) *
                 r +
             1.3314166789178437745e+2) *
                r +
            3.3871328727963666080e+0) /
           (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                 3.9307895800092710610e+4) *
                    r +
                2.1213794301586595867e+4) *
                   r +
               5.3941960214247511077e+3) *
                  r +
              6.8718700749205790830e+2) *
                 r +
             4.2313330701600911252e+1) *
                r +
            1.0);
  }
  double r = (q < 0.0) ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value =
        (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) *
                 r +
             1.27045825245236838258e+0) *
                r +
            3.64784832476320460504e+0) *
               r +
           5.76949722146069140550e+0) *
              r +
          4.63033784615654529590e+0) *
             r +
         1.42343711074968357734e+0) /
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) *
                 r +
             1.48103976427480074590e-1) *
                r +
            6.89767334985100004550e-1) *
               r +
           1.67638483018380384940e+0) *
              r +
          2.05319162663775882187e+0) *
             r +
         1.0);
  } else {
    r -= 5.0;
    value =
        (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) *
                 r +
             2.65321895265761230930e-2) *
                r +
            2.96560571828504891230e-1) *
               r +
           1.78482653991729133580e+0) *
              r +
          5.46378491116411436990e+0) *
             r +
         6.65790464350110377720e+0) /
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) *
                 r +
             7.86869131145613259100e-4) *
                r +
            1.48753612908506148525e-2) *
               r +
           1.36929880922735805310e-1) *
              r +
          5.99832206555887937690e-1) *
             r +
         1.0);
  }
  return (q < 0.0) ? -value : value;
}

RealMatrix sample_gaussian_matrix(int rows, int cols, SeedSpec seed) {
  if (rows < 1 || cols < 1) {
    throw DimensionMismatch("sample_gaussian_matrix: sizes must be >= 1");
  }
  Rng rng(seed);
  RealMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      m(i, j) = rng.next_normal();
    }
  }
  return m;
}

RealVector sample_gaussian_vector(int dim, SeedSpec seed) {
  if (dim < 1) {
    throw DimensionMismatch("sample_gaussian_vector: dim must be >= 1");
  }
  Rng rng(seed);
  RealVector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.next_normal();
  return v;
}

RealMatrix sample_haar_orthonormal(int m, int n, SeedSpec seed) {
  if (!(1 <= n && n <= m)) {
    throw DimensionMismatch("sample_haar_orthonormal: need 1 <= n <= m");
  }
  return qr_orthonormalize(sample_gaussian_matrix(m, n, seed)).q;
}

}  // namespace l1codec
