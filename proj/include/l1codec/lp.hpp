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

#ifndef L1CODEC_LP_HPP_
#define L1CODEC_LP_HPP_

#include <cstdint>
#include <vector>

#include "l1codec/linalg.hpp"

namespace l1codec {

// min c'x  subject to  a x = b, x >= 0.
struct StandardLp {
  RealMatrix a;  // k x n, k <= n
  RealVector b;  // k
  RealVector c;  // n

  Eigen::Index rows() const { return a.rows(); }
  Eigen::Index cols() const { return a.cols(); }

  // Throws DimensionMismatch on inconsistent sizes or k > n, and
  // std::invalid_argument on non-finite data.
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  RealVector x;            // n, meaningful iff Optimal
  double objective = 0.0;  // c'x at the returned point
  RealVector dual;         // k, zero rows for constraints found redundant
  // True when some nonbasic reduced cost sits within opt_tol of zero at the
  // optimum, i.e. the minimizer may not be unique.
  bool degenerate_optimum = false;
  long pivots = 0;
};

struct SimplexOptions {
  double feas_tol = 1e-9;
  double opt_tol = 1e-9;
  long dantzig_pivots = -1;  // < 0 means 10 * rows
  long max_pivots = -1;      // < 0 means 50 * (rows + cols)
};

// Two-phase dense simplex. Phase 1 adds unit-cost artificial variables to
// rows not already covered by a unit column and drives them to zero.
// Pivoting is Dantzig's rule for the first `dantzig_pivots` iterations and
// Bland's rule afterwards, so termination is guaranteed on degenerate
// instances. Exceeding `max_pivots` throws IterationLimit rather than
// returning a possibly-wrong answer.
LpOutcome solve_standard(const StandardLp& lp, const SimplexOptions& options = {});

struct BasicSolution {
  std::vector<int> basis;  // column indices, size k
  RealVector x;            // n
  double objective = 0.0;
};

// Brute-force oracle: every size-k column subset with a nonsingular basis
// matrix, solved and kept when feasible (x >= -feas_tol). The minimum
// objective over the list is the LP optimum when one exists. Throws
// TooLarge when C(n, k) exceeds max_bases.
std::vector<BasicSolution> enumerate_basic_solutions(
    const StandardLp& lp, double feas_tol = 1e-9,
    std::uint64_t max_bases = 1000000);

// Smallest objective in `list`, or +inf when the list is empty.
double min_enumerated_objective(const std::vector<BasicSolution>& list);

}  // namespace l1codec

#endif  // L1CODEC_LP_HPP_
