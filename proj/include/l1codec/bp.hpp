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

#ifndef L1CODEC_BP_HPP_
#define L1CODEC_BP_HPP_

#include "l1codec/linalg.hpp"
#include "l1codec/lp.hpp"

namespace l1codec {

// An n-dimensional subspace of R^m held as an m x n matrix with
// orthonormal columns. n = 0 (the zero subspace) is allowed.
struct SubspaceBasis {
  RealMatrix basis;

  SubspaceBasis() = default;
  // Throws NotOrthonormal when basis'basis deviates from I by more than tol.
  explicit SubspaceBasis(RealMatrix b, double tol = 1e-8);

  int ambient_dim() const { return static_cast<int>(basis.rows()); }
  int dim() const { return static_cast<int>(basis.cols()); }
};

// Nearest point of the subspace in l1 distance, plus what fell out of the
// LP solve.
struct BpDecodeResult {
  RealVector u;         // point of the subspace
  RealVector residual;  // y_prime - u
  double objective = 0.0;
  bool unique = true;   // false when the LP flagged a possible tie
};

// Split-variable LP for  min_{u in span(B)} ||u - y_prime||_1:
// unknowns (a+, a-, e+, e-) >= 0, constraints B(a+ - a-) + (e+ - e-) =
// y_prime, objective sum(e+ + e-). Columns are laid out in that order.
StandardLp reduce_decode_to_lp(const SubspaceBasis& subspace,
                               const RealVector& y_prime);

BpDecodeResult decode_l1(const SubspaceBasis& subspace,
                         const RealVector& y_prime,
                         const SimplexOptions& options = {});

// R measurements <f, X_k> of an unknown m-vector.
struct SenseProblem {
  RealMatrix a;  // R x m measurement rows
  RealVector b;  // R
};

// min ||g||_1 subject to a g = b with g split as g+ - g-.
StandardLp reduce_sense_to_lp(const SenseProblem& p);

struct SenseResult {
  RealVector g;
  bool unique = true;
};

SenseResult sense_l1(const SenseProblem& p, const SimplexOptions& options = {});

// Orthonormal basis of the nullspace of a (rows independent); the subspace
// the sensing constraints carve out, used to cross the two problem forms.
SubspaceBasis nullspace_basis(const RealMatrix& a);

}  // namespace l1codec

#endif  // L1CODEC_BP_HPP_
