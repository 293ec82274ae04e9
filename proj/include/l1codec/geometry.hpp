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

#ifndef L1CODEC_GEOMETRY_HPP_
#define L1CODEC_GEOMETRY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "l1codec/codec.hpp"
#include "l1codec/parallel.hpp"

namespace l1codec {

// One (m-r)-dimensional facet of the unit cube: r coordinates pinned to
// +-1, named by the support set and its sign pattern.
struct Facet {
  std::vector<int> support;  // strictly increasing
  std::vector<int> signs;    // each +1 or -1, aligned with support
};

enum class CertificateClass { Strict, Boundary, None };

// Margin separating the three classes around t* = 1.
inline constexpr double kStrictMargin = 1e-7;

struct CertificateOutcome {
  double t_star = 0.0;  // +inf when the pinned coordinates are unreachable
  RealVector w;         // the achieving vector in span(E)
  CertificateClass cls = CertificateClass::None;
};

// Smallest box radius certificate: min t over w in span(E) with w pinned to
// the facet's signs on its support and |w_j| <= t elsewhere. t* < 1 means E
// pierces the open facet, witnessing that every corruption carrying this
// support and sign pattern is corrected by the l1 decoder.
CertificateOutcome min_inf_certificate(const SubspaceBasis& e, const Facet& f,
                                       const SimplexOptions& options = {});

// True iff min over v in span(Y) of ||z/||z||_1 + v||_1 >= 1 - tol.
bool verify_separation(const SubspaceBasis& y, const RealVector& z,
                       double tol = 1e-8);

// 2^r * C(m, r); saturates at uint64 max.
std::uint64_t facet_count(int m, int r);

// All facets with |support| = r: supports in colexicographic order, signs
// in binary order (bit b of the sign code flips support[b] to -1).
std::vector<Facet> enumerate_facets(int m, int r);

Facet facet_at(int m, int r, std::uint64_t index);

struct FacetSweepResult {
  std::uint64_t strict = 0;
  std::uint64_t boundary = 0;
  std::uint64_t none = 0;
  double worst_t = 0.0;  // max t* seen (+inf when any facet is unreachable)
  std::uint64_t max_count = 0;

  std::uint64_t intersected() const { return strict + boundary; }
  std::uint64_t total() const { return strict + boundary + none; }
};

struct SampledFacets {
  std::uint64_t count = 0;
  SeedSpec seed;
};

inline constexpr std::uint64_t kExhaustiveFacetBudget = 100000;

// Certificate per facet, exhaustively or over a seeded sample. Facet work
// items run in parallel and are merged by enumeration index. Exhaustive
// mode throws TooLarge above kExhaustiveFacetBudget facets.
FacetSweepResult facet_intersection_count(
    const SubspaceBasis& e, int r,
    parallel::Backend backend = parallel::Backend::OpenMp,
    const std::optional<SampledFacets>& sampled = std::nullopt);

struct UniformCertificate {
  bool all_strict = false;
  double worst_t = 0.0;
  std::uint64_t none_count = 0;
};

// Exhaustive facet sweep on the codec's complement subspace: the executable
// witness that one sampled code corrects every support and sign pattern of
// size r simultaneously.
UniformCertificate certify_uniform(
    const Codec& codec, parallel::Backend backend = parallel::Backend::OpenMp);

struct ProjectionIdentitySides {
  double lhs = 0.0;       // projection norm onto E intersect lin(F)
  double rhs = 0.0;       // sqrt(r / (r + D^2)) * ||theta||_2
  double distance = 0.0;  // D, from the facet center to E intersect aff(F)
};

// Evaluates both sides of the similar-triangles identity relating the
// distance from a facet center theta = (0,...,0,1,...,1) to E intersect
// aff(F) and the projection of theta onto E intersect lin(F). The two sides
// come from independent constructions (constrained least squares vs. an
// explicit orthonormal basis of the intersection). Throws
// DegenerateIntersection when E misses aff(F).
ProjectionIdentitySides projection_identity_sides(const RealMatrix& e, int r);

// Samples a Haar R-dimensional subspace and evaluates the identity.
ProjectionIdentitySides projection_identity_check(int m, int r, int subspace_dim,
                                                  SeedSpec seed);

struct ProjectionLengthStats {
  double mean_sq_ratio = 0.0;  // mean of ||P_G theta||^2 / ||theta||^2
  double std_dev = 0.0;
};

// Monte Carlo over random k-dimensional subspaces of R^d; the squared
// projected length of a fixed unit vector has mean exactly k/d.
ProjectionLengthStats projection_length_stats(int d, int k, int trials,
                                              SeedSpec seed);

}  // namespace l1codec

#endif  // L1CODEC_GEOMETRY_HPP_
