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

#include "l1codec/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "l1codec/errors.hpp"

namespace l1codec {

namespace {

constexpr double kPivotTol = 1e-9;

// Dense simplex working state over the extended column set
// [original columns | artificial columns].
class Simplex {
 public:
  Simplex(const StandardLp& lp, const SimplexOptions& opt) : opt_(opt) {
    k_ = static_cast<int>(lp.rows());
    n_ = static_cast<int>(lp.cols());
    if (opt_.dantzig_pivots < 0) opt_.dantzig_pivots = 10L * k_;
    if (opt_.max_pivots < 0) opt_.max_pivots = 50L * (k_ + n_);

    a_ = lp.a;
    b_ = lp.b;
    c_ = lp.c;
    row_sign_.assign(k_, 1);
    live_row_.resize(k_);
    std::iota(live_row_.begin(), live_row_.end(), 0);
    for (int i = 0; i < k_; ++i) {
      if (b_[i] < 0.0) {
        a_.row(i) = -a_.row(i);
        b_[i] = -b_[i];
        row_sign_[i] = -1;
      }
    }
    b_scale_ = 1.0 + norm_linf(b_);
  }

  LpOutcome run() {
    crash_basis();
    if (n_art_ > 0) {
      run_phase(/*phase1=*/true);
      const double infeas = phase1_objective();
      if (infeas > opt_.feas_tol * b_scale_) {
        LpOutcome out;
        out.status = LpStatus::Infeasible;
        out.pivots = pivots_;
        return out;
      }
      expel_artificials();
    }
    const bool bounded = run_phase(/*phase1=*/false);
    LpOutcome out;
    out.pivots = pivots_;
    if (!bounded) {
      out.status = LpStatus::Unbounded;
      return out;
    }
    out.status = LpStatus::Optimal;
    out.x = RealVector::Zero(n_);
    for (int i = 0; i < rows(); ++i) {
      if (basis_[i] < n_) out.x[basis_[i]] = std::max(x_b_[i], 0.0);
    }
    out.objective = c_.dot(out.x);
    // Duals in the original row order and orientation.
    RealVector y = dual_vector(/*phase1=*/false);
    out.dual = RealVector::Zero(k_);
    for (int i = 0; i < rows(); ++i) {
      out.dual[live_row_[i]] = row_sign_[live_row_[i]] * y[i];
    }
    out.degenerate_optimum = has_zero_reduced_cost(y, out.objective);
    return out;
  }

 private:
  int rows() const { return static_cast<int>(b_.size()); }
  int ext_cols() const { return n_ + n_art_; }
  bool is_artificial(int j) const { return j >= n_; }

  Eigen::VectorXd column(int j) const {
    if (!is_artificial(j)) return a_.col(j);
    Eigen::VectorXd e = Eigen::VectorXd::Zero(rows());
    e[art_row_[j - n_]] = 1.0;
    return e;
  }

  double cost(int j, bool phase1) const {
    if (phase1) return is_artificial(j) ? 1.0 : 0.0;
    return is_artificial(j) ? 0.0 : c_[j];
  }

  // Initial basis: per row an unused column whose single nonzero sits in
  // that row with positive sign, otherwise a fresh artificial.
  void crash_basis() {
    const int k = rows();
    basis_.assign(k, -1);
    std::vector<int> nnz(n_, 0);
    std::vector<int> nz_row(n_, -1);
    for (int j = 0; j < n_; ++j) {
      for (int i = 0; i < k; ++i) {
        if (a_(i, j) != 0.0) {
          ++nnz[j];
          nz_row[j] = i;
        }
      }
    }
    std::vector<char> used(n_, 0);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (!used[j] && nnz[j] == 1 && nz_row[j] == i && a_(i, j) > 0.0) {
          basis_[i] = j;
          used[j] = 1;
          break;
        }
      }
    }
    art_row_.clear();
    for (int i = 0; i < k; ++i) {
      if (basis_[i] < 0) {
        basis_[i] = n_ + static_cast<int>(art_row_.size());
        art_row_.push_back(i);
      }
    }
    n_art_ = static_cast<int>(art_row_.size());
    in_basis_.assign(ext_cols(), 0);
    for (int j : basis_) in_basis_[j] = 1;
    refactor();
  }

  void refactor() {
    const int k = rows();
    RealMatrix bmat(k, k);
    for (int i = 0; i < k; ++i) bmat.col(i) = column(basis_[i]);
    binv_ = bmat.partialPivLu().inverse();
    x_b_.noalias() = binv_ * b_;
    for (int i = 0; i < k; ++i) {
      if (x_b_[i] < 0.0 && x_b_[i] > -opt_.feas_tol) x_b_[i] = 0.0;
    }
    pivots_since_refactor_ = 0;
  }

  RealVector dual_vector(bool phase1) const {
    RealVector c_b(rows());
    for (int i = 0; i < rows(); ++i) c_b[i] = cost(basis_[i], phase1);
    return binv_.transpose() * c_b;
  }

  double phase1_objective() const {
    double s = 0.0;
    for (int i = 0; i < rows(); ++i) {
      if (is_artificial(basis_[i])) s += std::max(x_b_[i], 0.0);
    }
    return s;
  }

  // One simplex phase. Returns false iff unbounded (phase 2 only).
  // Stopping decisions are only accepted on a fresh factorization, so
  // accumulated update error can never certify a wrong answer.
  bool run_phase(bool phase1) {
    refactor();
    for (;;) {
      const RealVector y = dual_vector(phase1);
      const int enter = pick_entering(y, phase1);
      if (enter < 0) {
        if (pivots_since_refactor_ == 0) return true;
        refactor();
        continue;
      }
      const RealVector d = binv_ * a_.col(enter);
      const int leave = pick_leaving(d);
      if (leave < 0) {
        if (pivots_since_refactor_ != 0) {
          refactor();
          continue;
        }
        if (phase1) {
          throw IterationLimit("simplex: phase-1 direction unbounded");
        }
        return false;
      }
      pivot(enter, leave, d);
      if (++pivots_ > opt_.max_pivots) {
        throw IterationLimit("simplex: pivot cap exceeded");
      }
      if (pivots_since_refactor_ >= 64) refactor();
    }
  }

  // Dantzig's rule early on, Bland's rule once pivots_ passes the switch
  // point. Artificial columns never enter.
  int pick_entering(const RealVector& y, bool phase1) const {
    const bool bland = pivots_ >= opt_.dantzig_pivots;
    int best = -1;
    double best_rc = -opt_.opt_tol;
    for (int j = 0; j < n_; ++j) {
      if (in_basis_[j]) continue;
      const double rc = cost(j, phase1) - y.dot(a_.col(j));
      if (rc < best_rc) {
        if (bland) return j;
        best_rc = rc;
        best = j;
      }
    }
    return best;
  }

  int pick_leaving(const RealVector& d) const {
    const bool bland = pivots_ >= opt_.dantzig_pivots;
    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < rows(); ++i) {
      if (d[i] <= kPivotTol) continue;
      const double ratio = std::max(x_b_[i], 0.0) / d[i];
      if (ratio < best_ratio - 1e-12) {
        best_ratio = ratio;
        leave = i;
      } else if (ratio <= best_ratio + 1e-12 && leave >= 0) {
        if (bland) {
          if (basis_[i] < basis_[leave]) leave = i;
        } else {
          // Break ties toward artificials, then larger pivots.
          const bool art_i = is_artificial(basis_[i]);
          const bool art_l = is_artificial(basis_[leave]);
          if (art_i != art_l ? art_i : std::abs(d[i]) > std::abs(d[leave])) {
            leave = i;
          }
        }
      }
    }
    return leave;
  }

  void pivot(int enter, int leave, const RealVector& d) {
    const double theta = std::max(x_b_[leave], 0.0) / d[leave];
    x_b_ -= theta * d;
    x_b_[leave] = theta;
    for (int i = 0; i < rows(); ++i) {
      if (x_b_[i] < 0.0 && x_b_[i] > -opt_.feas_tol) x_b_[i] = 0.0;
    }
    const RealVector pr = binv_.row(leave) / d[leave];
    binv_.noalias() -= d * pr.transpose();
    binv_.row(leave) = pr;
    in_basis_[basis_[leave]] = 0;
    in_basis_[enter] = 1;
    basis_[leave] = enter;
    ++pivots_since_refactor_;
  }

  // After phase 1: pivot zero-valued artificials out of the basis; rows
  // that admit no pivot are redundant and get dropped.
  void expel_artificials() {
    std::vector<int> dead;
    for (int i = 0; i < rows(); ++i) {
      if (!is_artificial(basis_[i])) continue;
      int enter = -1;
      double best = 1e-7;
      const RealVector bi = binv_.row(i);
      for (int j = 0; j < n_; ++j) {
        if (in_basis_[j]) continue;
        const double v = std::abs(bi.dot(a_.col(j)));
        if (v > best) {
          best = v;
          enter = j;
        }
      }
      if (enter >= 0) {
        const RealVector d = binv_ * a_.col(enter);
        pivot(enter, i, d);
      } else {
        dead.push_back(i);
      }
    }
    if (dead.empty()) return;

    std::vector<char> is_dead(rows(), 0);
    for (int i : dead) is_dead[i] = 1;
    const int new_k = rows() - static_cast<int>(dead.size());
    RealMatrix a2(new_k, n_);
    RealVector b2(new_k);
    std::vector<int> live2, basis2;
    live2.reserve(new_k);
    basis2.reserve(new_k);
    int t = 0;
    for (int i = 0; i < rows(); ++i) {
      if (is_dead[i]) continue;
      a2.row(t) = a_.row(i);
      b2[t] = b_[i];
      live2.push_back(live_row_[i]);
      basis2.push_back(basis_[i]);
      ++t;
    }
    a_ = std::move(a2);
    b_ = std::move(b2);
    live_row_ = std::move(live2);
    basis_ = std::move(basis2);
    // Only dead rows held artificial basics, so none survive the removal.
    art_row_.clear();
    n_art_ = 0;
    for (int bj : basis_) {
      if (bj >= n_) throw IterationLimit("simplex: artificial stuck in basis");
    }
    in_basis_.assign(n_, 0);
    for (int bj : basis_) in_basis_[bj] = 1;
    refactor();
  }

  bool has_zero_reduced_cost(const RealVector& y, double objective) const {
    const double tol = opt_.opt_tol * (1.0 + std::abs(objective));
    for (int j = 0; j < n_; ++j) {
      if (in_basis_[j]) continue;
      const double rc = c_[j] - y.dot(a_.col(j));
      if (std::abs(rc) <= tol) return true;
    }
    return false;
  }

  SimplexOptions opt_;
  int k_ = 0;
  int n_ = 0;
  int n_art_ = 0;
  RealMatrix a_;
  RealVector b_, c_;
  double b_scale_ = 1.0;
  std::vector<int> row_sign_;
  std::vector<int> live_row_;  // current row -> original row
  std::vector<int> basis_;
  std::vector<int> art_row_;
  std::vector<char> in_basis_;
  RealMatrix binv_;
  RealVector x_b_;
  long pivots_ = 0;
  int pivots_since_refactor_ = 0;
};

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

void StandardLp::validate() const {
  if (a.rows() != b.size() || a.cols() != c.size()) {
    throw DimensionMismatch("StandardLp: inconsistent dimensions");
  }
  if (a.rows() > a.cols()) {
    throw DimensionMismatch("StandardLp: more constraints than variables");
  }
  if (a.rows() < 1) {
    throw DimensionMismatch("StandardLp: empty constraint system");
  }
  require_finite(a, "StandardLp.a");
  require_finite(b, "StandardLp.b");
  require_finite(c, "StandardLp.c");
}

LpOutcome solve_standard(const StandardLp& lp, const SimplexOptions& options) {
  lp.validate();
  Simplex solver(lp, options);
  return solver.run();
}

std::vector<BasicSolution> enumerate_basic_solutions(const StandardLp& lp,
                                                     double feas_tol,
                                                     std::uint64_t max_bases) {
  lp.validate();
  const int k = static_cast<int>(lp.rows());
  const int n = static_cast<int>(lp.cols());
  if (binomial_capped(n, k, max_bases) > max_bases) {
    throw TooLarge("enumerate_basic_solutions: too many bases");
  }

  std::vector<BasicSolution> out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  RealMatrix bmat(k, k);
  for (;;) {
    for (int i = 0; i < k; ++i) bmat.col(i) = lp.a.col(idx[i]);
    Eigen::FullPivLU<RealMatrix> lu(bmat);
    if (lu.isInvertible()) {
      const RealVector x_b = lu.solve(lp.b);
      if ((x_b.array() >= -feas_tol).all()) {
        BasicSolution s;
        s.basis = idx;
        s.x = RealVector::Zero(n);
        for (int i = 0; i < k; ++i) s.x[idx[i]] = x_b[i];
        s.objective = lp.c.dot(s.x);
        out.push_back(std::move(s));
      }
    }
    // Next size-k combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

double min_enumerated_objective(const std::vector<BasicSolution>& list) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : list) best = std::min(best, s.objective);
  return best;
}

}  // namespace l1codec
