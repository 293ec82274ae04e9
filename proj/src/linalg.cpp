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

#include "l1codec/linalg.hpp"

#include <cmath>
#include <string>

namespace l1codec {

bool all_finite(const RealMatrix& m) { return m.allFinite(); }

void require_finite(const RealMatrix& m, const char* what) {
  if (!m.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": non-finite entries");
  }
}

double norm(const RealVector& v, NormP p) {
  switch (p) {
    case NormP::One:
      return norm_l1(v);
    case NormP::Two:
      return norm_l2(v);
    case NormP::Inf:
      return norm_linf(v);
  }
  return 0.0;  // unreachable
}

QrFactors qr_orthonormalize(const RealMatrix& m, double rank_tol) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  if (rows < cols) {
    throw DimensionMismatch("qr_orthonormalize: rows < cols");
  }
  require_finite(m, "qr_orthonormalize");
  if (cols == 0) {
    return {RealMatrix(rows, 0), RealMatrix(0, 0)};
  }

  Eigen::HouseholderQR<RealMatrix> qr(m);
  RealMatrix q = qr.householderQ() * RealMatrix::Identity(rows, cols);
  RealMatrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();

  // Flip signs so every diagonal entry of R is positive.
  for (Eigen::Index j = 0; j < cols; ++j) {
    if (r(j, j) < 0.0) {
      r.row(j) = -r.row(j);
      q.col(j) = -q.col(j);
    }
  }

  double dmax = 0.0;
  double dmin = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < cols; ++j) {
    const double d = std::abs(r(j, j));
    dmax = std::max(dmax, d);
    dmin = std::min(dmin, d);
  }
  if (!(dmin > rank_tol * dmax) || dmax == 0.0) {
    throw RankDeficient("qr_orthonormalize: numerically rank-deficient input");
  }
  return {std::move(q), std::move(r)};
}

bool is_orthonormal(const RealMatrix& b, double tol) {
  if (b.cols() == 0) return true;
  const RealMatrix gram = b.transpose() * b;
  return max_abs(gram - RealMatrix::Identity(b.cols(), b.cols())) <= tol;
}

RealMatrix complement_basis(const RealMatrix& b, double ortho_tol) {
  const Eigen::Index m = b.rows();
  const Eigen::Index n = b.cols();
  if (n > m) {
    throw DimensionMismatch("complement_basis: more columns than rows");
  }
  if (!is_orthonormal(b, ortho_tol)) {
    throw NotOrthonormal("complement_basis: input columns not orthonormal");
  }
  if (n == m) {
    return RealMatrix(m, 0);
  }
  if (n == 0) {
    return RealMatrix::Identity(m, m);
  }
  // The trailing columns of the full Householder Q span the complement.
  Eigen::HouseholderQR<RealMatrix> qr(b);
  RealMatrix full = qr.householderQ() * RealMatrix::Identity(m, m);
  return full.rightCols(m - n);
}

}  // namespace l1codec
