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

#ifndef L1CODEC_LINALG_HPP_
#define L1CODEC_LINALG_HPP_

#include <Eigen/Dense>

#include "l1codec/errors.hpp"

namespace l1codec {

// Dense 64-bit carriers used throughout the library.
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

bool all_finite(const RealMatrix& m);

// Throws std::invalid_argument naming `what` if any entry is NaN/Inf.
void require_finite(const RealMatrix& m, const char* what);

enum class NormP { One, Two, Inf };

double norm(const RealVector& v, NormP p);

inline double norm_l1(const RealVector& v) { return v.lpNorm<1>(); }
inline double norm_l2(const RealVector& v) { return v.norm(); }
inline double norm_linf(const RealVector& v) {
  return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
}

inline double max_abs(const RealMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

struct QrFactors {
  RealMatrix q;  // rows x cols, orthonormal columns
  RealMatrix r;  // cols x cols, upper triangular, positive diagonal
};

// Thin QR with the sign convention that the R diagonal is strictly positive.
// Requires rows >= cols and numerical full column rank: the smallest
// |R(i,i)| must exceed rank_tol times the largest, else RankDeficient.
QrFactors qr_orthonormalize(const RealMatrix& m, double rank_tol = 1e-10);

// Returns an orthonormal basis of the orthogonal complement of span(b).
// b must have orthonormal columns within ortho_tol (NotOrthonormal).
RealMatrix complement_basis(const RealMatrix& b, double ortho_tol = 1e-8);

bool is_orthonormal(const RealMatrix& b, double tol = 1e-8);

}  // namespace l1codec

#endif  // L1CODEC_LINALG_HPP_
