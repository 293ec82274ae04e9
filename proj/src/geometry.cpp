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

#include "l1codec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "l1codec/errors.hpp"

namespace l1codec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_facet(const Facet& f, int m) {
  if (f.support.size() != f.signs.size()) {
    throw DimensionMismatch("Facet: support/sign length");
  }
  for (std::size_t i = 0; i < f.support.size(); ++i) {
    if (f.support[i] < 0 || f.support[i] >= m) {
      throw IndexOutOfRange("Facet: support index outside ambient space");
    }
    if (i > 0 && f.support[i] <= f.support[i - 1]) {
      throw IndexOutOfRange("Facet: support must be strictly increasing");
    }
    if (f.signs[i] != 1 && f.signs[i] != -1) {
      throw IndexOutOfRange("Facet: signs must be +1 or -1");
    }
  }
}

CertificateClass classify(double t_star) {
  if (t_star <= 1.0 - kStrictMargin) return CertificateClass::Strict;
  if (t_star >= 1.0 + kStrictMargin) return CertificateClass::None;
  return CertificateClass::Boundary;
}

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

// Columns of v spanning the kernel of a (rows may be zero).
RealMatrix kernel_basis(const RealMatrix& a, double rel_tol = 1e-10) {
  const Eigen::Index cols = a.cols();
  if (a.rows() == 0) return RealMatrix::Identity(cols, cols);
  Eigen::JacobiSVD<RealMatrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? sv[0] * rel_tol : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > cutoff) ++rank;
  }
  return svd.matrixV().rightCols(cols - rank);
}

}  // namespace

CertificateOutcome min_inf_certificate(const SubspaceBasis& e, const Facet& f,
                                       const SimplexOptions& options) {
  const int m = e.ambient_dim();
  const int dim = e.dim();
  const int r = static_cast<int>(f.support.size());
  validate_facet(f, m);
  if (dim < 1) {
    throw DimensionMismatch("min_inf_certificate: empty subspace");
  }

  CertificateOutcome out;
  if (r == 0) {
    out.t_star = 0.0;
    out.w = RealVector::Zero(m);
    out.cls = CertificateClass::Strict;
    return out;
  }

  RealMatrix e_on(r, dim);
  RealVector s(r);
  for (int i = 0; i < r; ++i) {
    e_on.row(i) = e.basis.row(f.support[i]);
    s[i] = static_cast<double>(f.signs[i]);
  }

  // The pinned coordinates must be reachable within span(E) at all.
  const RealVector probe = e_on.colPivHouseholderQr().solve(s);
  if (norm_linf(e_on * probe - s) > 1e-8) {
    out.t_star = kInf;
    out.w = RealVector::Zero(m);
    out.cls = CertificateClass::None;
    return out;
  }

  // min t over (xi+, xi-, t, p, q) >= 0 with
  //   E_I (xi+ - xi-) = s
  //   +-E_j (xi+ - xi-) - t + slack = 0   for every off-support j.
  const int off = m - r;
  const int cols = 2 * dim + 1 + 2 * off;
  const int rows = r + 2 * off;
  StandardLp lp;
  lp.a.setZero(rows, cols);
  lp.b.setZero(rows);
  lp.c.setZero(cols);
  lp.c[2 * dim] = 1.0;

  for (int i = 0; i < r; ++i) {
    lp.a.block(i, 0, 1, dim) = e_on.row(i);
    lp.a.block(i, dim, 1, dim) = -e_on.row(i);
    lp.b[i] = s[i];
  }
  int row = r;
  int slack = 2 * dim + 1;
  std::vector<char> pinned(m, 0);
  for (int i : f.support) pinned[i] = 1;
  for (int j = 0; j < m; ++j) {
    if (pinned[j]) continue;
    lp.a.block(row, 0, 1, dim) = e.basis.row(j);
    lp.a.block(row, dim, 1, dim) = -e.basis.row(j);
    lp.a(row, 2 * dim) = -1.0;
    lp.a(row, slack) = 1.0;
    ++row;
    lp.a.block(row, 0, 1, dim) = -e.basis.row(j);
    lp.a.block(row, dim, 1, dim) = e.basis.row(j);
    lp.a(row, 2 * dim) = -1.0;
    lp.a(row, slack + off) = 1.0;
    ++row;
    ++slack;
  }

  const LpOutcome sol = solve_standard(lp, options);
  if (sol.status != LpStatus::Optimal) {
    out.t_star = kInf;
    out.w = RealVector::Zero(m);
    out.cls = CertificateClass::None;
    return out;
  }
  const RealVector xi = sol.x.head(dim) - sol.x.segment(dim, dim);
  out.w = e.basis * xi;
  out.t_star = sol.objective;
  out.cls = classify(out.t_star);
  return out;
}

bool verify_separation(const SubspaceBasis& y, const RealVector& z,
                       double tol) {
  if (z.size() != y.ambient_dim()) {
    throw DimensionMismatch("verify_separation: z dimension");
  }
  const double l1 = norm_l1(z);
  if (l1 <= 0.0) {
    throw std::invalid_argument("verify_separation: z must be nonzero");
  }
  const BpDecodeResult res = decode_l1(y, z / l1);
  return res.objective >= 1.0 - tol;
}

std::uint64_t facet_count(int m, int r) {
  if (r < 0 || r > m) return 0;
  const std::uint64_t combos = binomial_u64(m, r);
  if (r >= 64) return std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t signs = std::uint64_t{1} << r;
  if (combos > std::numeric_limits<std::uint64_t>::max() / signs) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return combos * signs;
}

Facet facet_at(int m, int r, std::uint64_t index) {
  const std::uint64_t sign_block = std::uint64_t{1} << r;
  const std::uint64_t support_rank = index / sign_block;
  const std::uint64_t sign_code = index % sign_block;

  // Combinatorial number system, colexicographic order.
  Facet f;
  f.support.resize(r);
  f.signs.resize(r);
  std::uint64_t rem = support_rank;
  for (int i = r; i >= 1; --i) {
    int c = i - 1;
    std::uint64_t binom = 0;  // C(c, i) with c = i-1
    for (;;) {
      // C(c+1, i) from C(c, i)
      const std::uint64_t next =
          (c + 1 == i) ? 1 : binom * (c + 1) / (c + 1 - i);
      if (next > rem || c + 1 >= m) break;
      binom = next;
      ++c;
    }
    f.support[i - 1] = c;
    rem -= binom;
  }
  for (int b = 0; b < r; ++b) {
    f.signs[b] = (sign_code >> b) & 1u ? -1 : 1;
  }
  return f;
}

std::vector<Facet> enumerate_facets(int m, int r) {
  const std::uint64_t total = facet_count(m, r);
  std::vector<Facet> out;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(facet_at(m, r, i));
  return out;
}

FacetSweepResult facet_intersection_count(
    const SubspaceBasis& e, int r, parallel::Backend backend,
    const std::optional<SampledFacets>& sampled) {
  const int m = e.ambient_dim();
  if (r < 0 || r >= m) {
    throw DimensionMismatch("facet_intersection_count: need 0 <= r < m");
  }
  FacetSweepResult result;
  result.max_count = facet_count(m, r);

  std::uint64_t items;
  if (sampled.has_value()) {
    items = sampled->count;
  } else {
    if (result.max_count > kExhaustiveFacetBudget) {
      throw TooLarge("facet_intersection_count: exhaustive budget exceeded");
    }
    items = result.max_count;
  }

  std::vector<CertificateClass> cls(items, CertificateClass::None);
  std::vector<double> t_star(items, 0.0);
  parallel::for_each_index(
      static_cast<std::int64_t>(items), backend, [&](std::int64_t slot) {
        Facet f;
        if (sampled.has_value()) {
          Rng rng(subseed(sampled->seed, static_cast<std::uint64_t>(slot)));
          f.support = rng.sample_subset(m, r);
          f.signs.resize(r);
          for (int b = 0; b < r; ++b) f.signs[b] = rng.next_sign();
        } else {
          f = facet_at(m, r, static_cast<std::uint64_t>(slot));
        }
        const CertificateOutcome cert = min_inf_certificate(e, f);
        cls[slot] = cert.cls;
        t_star[slot] = cert.t_star;
      });

  for (std::uint64_t i = 0; i < items; ++i) {
    switch (cls[i]) {
      case CertificateClass::Strict:
        ++result.strict;
        break;
      case CertificateClass::Boundary:
        ++result.boundary;
        break;
      case CertificateClass::None:
        ++result.none;
        break;
    }
    result.worst_t = std::max(result.worst_t, t_star[i]);
  }
  return result;
}

UniformCertificate certify_uniform(const Codec& codec,
                                   parallel::Backend backend) {
  const FacetSweepResult sweep =
      facet_intersection_count(codec.complement, codec.params.r, backend);
  UniformCertificate cert;
  cert.all_strict = sweep.strict == sweep.total();
  cert.worst_t = sweep.worst_t;
  cert.none_count = sweep.none;
  return cert;
}

ProjectionIdentitySides projection_identity_sides(const RealMatrix& e, int r) {
  const int m = static_cast<int>(e.rows());
  const int dim = static_cast<int>(e.cols());
  if (r < 1 || r > m || dim < 1) {
    throw DimensionMismatch("projection_identity_sides: bad sizes");
  }

  RealVector theta = RealVector::Zero(m);
  theta.tail(r).setOnes();
  const double theta_norm = std::sqrt(static_cast<double>(r));

  const RealMatrix e_tail = e.bottomRows(r);

  // lhs: orthonormal basis of E intersect lin(F). With K spanning the
  // kernel of the equal-tail constraints, E*K already has orthonormal
  // columns.
  RealMatrix diffs(std::max(r - 1, 0), dim);
  for (int i = 1; i < r; ++i) {
    diffs.row(i - 1) = e_tail.row(i) - e_tail.row(0);
  }
  const RealMatrix k_lin = kernel_basis(diffs);
  double lhs = 0.0;
  if (k_lin.cols() > 0) {
    lhs = ((e * k_lin).transpose() * theta).norm();
  }

  // rhs: distance from theta to E intersect aff(F) by constrained least
  // squares over xi with E_tail xi = 1.
  Eigen::JacobiSVD<RealMatrix> svd(e_tail,
                                   Eigen::ComputeThinU | Eigen::ComputeFullV);
  const RealVector ones = RealVector::Ones(r);
  const RealVector xi0 = svd.solve(ones);
  if (norm_linf(e_tail * xi0 - ones) > 1e-8) {
    throw DegenerateIntersection(
        "projection_identity_sides: subspace misses the facet's affine span");
  }
  const RealMatrix k_aff = kernel_basis(e_tail);
  RealVector closest = e * xi0;
  if (k_aff.cols() > 0) {
    const RealMatrix span = e * k_aff;
    const RealVector eta = span.colPivHouseholderQr().solve(theta - closest);
    closest += span * eta;
  }
  const double distance = (closest - theta).norm();

  ProjectionIdentitySides sides;
  sides.lhs = lhs;
  sides.distance = distance;
  sides.rhs = std::sqrt(static_cast<double>(r) /
                        (static_cast<double>(r) + distance * distance)) *
              theta_norm;
  return sides;
}

ProjectionIdentitySides projection_identity_check(int m, int r,
                                                  int subspace_dim,
                                                  SeedSpec seed) {
  if (!(r >= 1 && subspace_dim > r && subspace_dim < m)) {
    throw DimensionMismatch("projection_identity_check: need r < R < m");
  }
  const RealMatrix e = sample_haar_orthonormal(m, subspace_dim, seed);
  return projection_identity_sides(e, r);
}

ProjectionLengthStats projection_length_stats(int d, int k, int trials,
                                              SeedSpec seed) {
  if (!(1 <= k && k <= d)) {
    throw DimensionMismatch("projection_length_stats: need 1 <= k <= d");
  }
  if (trials < 1) {
    throw DimensionMismatch("projection_length_stats: trials must be >= 1");
  }
  // theta = e_1; the squared projection norm is the squared first row of G.
  std::vector<double> ratios(trials);
  for (int t = 0; t < trials; ++t) {
    const RealMatrix g =
        sample_haar_orthonormal(d, k, subseed(seed, static_cast<std::uint64_t>(t)));
    ratios[t] = g.row(0).squaredNorm();
  }
  double mean = 0.0;
  for (double v : ratios) mean += v;
  mean /= trials;
  double var = 0.0;
  for (double v : ratios) var += (v - mean) * (v - mean);
  var = trials > 1 ? var / (trials - 1) : 0.0;
  return {mean, std::sqrt(var)};
}

}  // namespace l1codec
