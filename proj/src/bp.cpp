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

#include "l1codec/bp.hpp"

#include <utility>

#include "l1codec/errors.hpp"

namespace l1codec {

SubspaceBasis::SubspaceBasis(RealMatrix b, double tol) : basis(std::move(b)) {
  require_finite(basis, "SubspaceBasis");
  if (!is_orthonormal(basis, tol)) {
    throw NotOrthonormal("SubspaceBasis: columns not orthonormal");
  }
}

StandardLp reduce_decode_to_lp(const SubspaceBasis& subspace,
                               const RealVector& y_prime) {
  const int m = subspace.ambient_dim();
  const int n = subspace.dim();
  if (y_prime.size() != m) {
    throw DimensionMismatch("reduce_decode_to_lp: y_prime dimension");
  }
  require_finite(y_prime, "reduce_decode_to_lp: y_prime");

  StandardLp lp;
  lp.a.setZero(m, 2 * n + 2 * m);
  lp.a.leftCols(n) = subspace.basis;
  lp.a.middleCols(n, n) = -subspace.basis;
  lp.a.middleCols(2 * n, m) = RealMatrix::Identity(m, m);
  lp.a.middleCols(2 * n + m, m) = -RealMatrix::Identity(m, m);
  lp.b = y_prime;
  lp.c.setZero(2 * n + 2 * m);
  lp.c.tail(2 * m).setOnes();
  return lp;
}

BpDecodeResult decode_l1(const SubspaceBasis& subspace,
                         const RealVector& y_prime,
                         const SimplexOptions& options) {
  const int n = subspace.dim();
  const StandardLp lp = reduce_decode_to_lp(subspace, y_prime);
  const LpOutcome out = solve_standard(lp, options);
  if (out.status != LpStatus::Optimal) {
    // The constraint system is always satisfiable (e absorbs y_prime) and
    // the objective is bounded below by zero.
    throw IterationLimit("decode_l1: solver failed on a feasible instance");
  }
  BpDecodeResult res;
  const RealVector coeff = out.x.head(n) - out.x.segment(n, n);
  res.u = subspace.basis * coeff;
  res.residual = y_prime - res.u;
  res.objective = out.objective;
  res.unique = !out.degenerate_optimum;
  return res;
}

StandardLp reduce_sense_to_lp(const SenseProblem& p) {
  const int rows = static_cast<int>(p.a.rows());
  const int m = static_cast<int>(p.a.cols());
  if (p.b.size() != rows) {
    throw DimensionMismatch("reduce_sense_to_lp: measurement count");
  }
  require_finite(p.a, "reduce_sense_to_lp: a");
  require_finite(p.b, "reduce_sense_to_lp: b");

  StandardLp lp;
  lp.a.resize(rows, 2 * m);
  lp.a.leftCols(m) = p.a;
  lp.a.rightCols(m) = -p.a;
  lp.b = p.b;
  lp.c = RealVector::Ones(2 * m);
  return lp;
}

SenseResult sense_l1(const SenseProblem& p, const SimplexOptions& options) {
  const int m = static_cast<int>(p.a.cols());
  const StandardLp lp = reduce_sense_to_lp(p);
  const LpOutcome out = solve_standard(lp, options);
  if (out.status != LpStatus::Optimal) {
    throw IterationLimit("sense_l1: measurements inconsistent or solver stalled");
  }
  SenseResult res;
  res.g = out.x.head(m) - out.x.tail(m);
  res.unique = !out.degenerate_optimum;
  return res;
}

SubspaceBasis nullspace_basis(const RealMatrix& a) {
  const auto rowspace = qr_orthonormalize(a.transpose());
  return SubspaceBasis(complement_basis(rowspace.q));
}

}  // namespace l1codec
