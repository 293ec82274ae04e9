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

// End-to-end acceptance suite. Each criterion prints one pass/fail line;
// the process exits nonzero when any criterion fails. Run a single
// criterion with --criterion N.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "l1codec/experiments.hpp"
#include "l1codec/geometry.hpp"
#include "oracles.hpp"

using namespace l1codec;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

// --- criterion 1: simplex vs brute-force enumeration -----------------------

Outcome lp_corpus_agreement() {
  const auto start = Clock::now();
  int feasible = 0;
  for (int t = 0; t < 500; ++t) {
    const SeedSpec seed{101, static_cast<std::uint64_t>(t)};
    const int k = 1 + t % 3;
    const int n = k + 1 + (t / 3) % (6 - k);
    StandardLp lp;
    lp.a = sample_gaussian_matrix(k, n, seed);
    lp.b = sample_gaussian_vector(k, subseed(seed, 1));
    lp.c = sample_gaussian_vector(n, subseed(seed, 2)).cwiseAbs();
    LpOutcome out;
    try {
      out = solve_standard(lp);
    } catch (const IterationLimit&) {
      return {false, fmt("iteration limit on instance %d", t)};
    }
    const auto list = enumerate_basic_solutions(lp);
    if (out.status == LpStatus::Optimal) {
      ++feasible;
      if (list.empty() ||
          std::abs(out.objective - min_enumerated_objective(list)) > 1e-8) {
        return {false, fmt("objective mismatch on instance %d", t)};
      }
    } else if (!list.empty()) {
      return {false, fmt("solver missed a feasible instance %d", t)};
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 10.0) return {false, fmt("too slow: %.1f s", elapsed)};
  return {true, fmt("500 instances, %d feasible, %.2f s", feasible, elapsed)};
}

// --- criterion 2: the worked three-coordinate decode ------------------------

Outcome worked_decode_instance() {
  RealVector col = RealVector::Ones(3) / std::sqrt(3.0);
  RealVector received(3);
  received << 3, 1, 1;
  const BpDecodeResult res = decode_l1(SubspaceBasis(RealMatrix(col)), received);
  const RealVector expected = RealVector::Ones(3);
  const double dev = norm_linf(res.u - expected);
  return {dev <= 1e-8, fmt("|u - (1,1,1)|_inf = %.2e", dev)};
}

// --- criterion 3: certificates predict decoding ------------------------------

Outcome certificate_decoding_equivalence() {
  int strict_count = 0, none_count = 0, boundary_count = 0;
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t tag = static_cast<std::uint64_t>(t);
    Rng shape({301, tag});
    const int m = 6 + static_cast<int>(shape.next_below(7));  // 6..12
    const int r = 1 + static_cast<int>(shape.next_below(2));
    const int n = 1 + static_cast<int>(shape.next_below(static_cast<std::uint64_t>(m - r - 1)));
    const Codec codec = make_codec({m, n, r}, {302, tag});

    Facet facet;
    facet.support = shape.sample_subset(m, r);
    facet.signs.resize(r);
    for (int i = 0; i < r; ++i) facet.signs[i] = shape.next_sign();

    const CertificateOutcome cert = min_inf_certificate(codec.complement, facet);
    const RealVector x = sample_gaussian_vector(n, {303, tag});
    const RealVector y = encode(codec, x);

    if (cert.cls == CertificateClass::Strict) {
      ++strict_count;
      Rng mag({304, tag});
      for (int k = 0; k < 20; ++k) {
        Corruption corruption;
        corruption.support = facet.support;
        corruption.values.resize(r);
        for (int i = 0; i < r; ++i) {
          corruption.values[i] = facet.signs[i] * mag.next_log_uniform(1e-3, 1e6);
        }
        const DecodeOutcome out = decode(codec, corrupt(y, corruption));
        if (norm_linf(out.x_hat - x) > 1e-6) {
          return {false, fmt("strict certificate failed to decode, instance %d", t)};
        }
      }
    } else if (cert.cls == CertificateClass::None) {
      ++none_count;
      // Line search over magnitudes along the facet's sign pattern, then
      // along the witness direction from the separation LP.
      std::vector<RealVector> directions;
      RealVector uniform = RealVector::Zero(m);
      for (int i = 0; i < r; ++i) uniform[facet.support[i]] = facet.signs[i];
      directions.push_back(uniform);
      if (const auto z = oracles::find_failing_direction(codec.range, facet)) {
        directions.push_back(*z);
      }
      bool found = false;
      for (const RealVector& dir : directions) {
        for (double lambda : {1e-2, 1.0, 1e2, 1e4, 1e6}) {
          Corruption corruption;
          corruption.support = facet.support;
          corruption.values.resize(r);
          for (int i = 0; i < r; ++i) {
            corruption.values[i] = lambda * dir[facet.support[i]];
          }
          const DecodeOutcome out = decode(codec, corrupt(y, corruption));
          if (norm_linf(out.x_hat - x) > 1e-6) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) {
        return {false, fmt("no failing magnitude found for a missed facet, instance %d", t)};
      }
    } else {
      ++boundary_count;
    }
  }
  return {true, fmt("200 instances: %d strict, %d none, %d boundary, 0 mismatches",
                    strict_count, none_count, boundary_count)};
}

// --- criterion 4: phase transition at desk scale -----------------------------

Outcome phase_transition_sweep() {
  const auto start = Clock::now();
  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::Phase;
  cfg.m_list = {100};
  cfg.r_list = {5};
  cfg.R_list = {10, 20, 30, 40, 50, 60, 70, 80, 90};
  cfg.trials = 200;
  cfg.master_seed = 404;
  const SummaryTable table = run_experiment(cfg);

  std::vector<double> rates;
  double rate_at_60 = -1.0;
  for (const SummaryRow& row : table.rows) {
    if (row.metric != "success_rate") continue;
    rates.push_back(row.value);
    if (row.R == 60) rate_at_60 = row.value;
  }
  for (std::size_t i = 1; i < rates.size(); ++i) {
    if (rates[i] < rates[i - 1]) {
      return {false, fmt("rate decreased between R cells %zu and %zu (%.3f -> %.3f)",
                         i - 1, i, rates[i - 1], rates[i])};
    }
  }
  const double elapsed = seconds_since(start);
  if (rate_at_60 < 0.99) return {false, fmt("rate at R=60 is %.3f", rate_at_60)};
  if (elapsed > 600.0) return {false, fmt("too slow: %.0f s", elapsed)};
  return {true, fmt("non-decreasing rates, %.3f at R=60, %.0f s", rate_at_60, elapsed)};
}

// --- criterion 5: thin redundancy never certifies; log regime loses ----------

Outcome necessity_thresholds() {
  for (int t = 0; t < 100; ++t) {
    const Codec codec = make_codec({10, 7, 2}, {505, static_cast<std::uint64_t>(t)});
    if (certify_uniform(codec).all_strict) {
      return {false, fmt("R < 2r codec certified at trial %d", t)};
    }
  }

  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::Necessity;
  cfg.m_list = {64};
  cfg.r_list = {1};
  const int r_log = static_cast<int>(std::ceil(std::log2(64.0)));
  const int r_star = generous_redundancy(1, 64);
  cfg.R_list = {r_log, r_star};
  cfg.trials = 200;
  cfg.master_seed = 506;
  const SummaryTable table = run_experiment(cfg);
  double rate_log = -1.0, rate_star = -1.0;
  for (const SummaryRow& row : table.rows) {
    if (row.metric != "all_strict_rate") continue;
    if (row.R == r_log) rate_log = row.value;
    if (row.R == r_star) rate_star = row.value;
  }
  if (!(rate_log < rate_star)) {
    return {false, fmt("rate at R=%d (%.3f) not below rate at R*=%d (%.3f)",
                       r_log, rate_log, r_star, rate_star)};
  }
  return {true, fmt("100/100 uncertified at R<2r; rate %.3f at R=%d vs %.3f at R*=%d",
                    rate_log, r_log, rate_star, r_star)};
}

// --- criterion 6: facet counting against the hyperplane oracle ---------------

Outcome facet_counting_oracle() {
  const int m = 8, sub_dim = 7;
  int achieved = 0;
  for (int t = 0; t < 200; ++t) {
    const RealMatrix e =
        sample_haar_orthonormal(m, sub_dim, {606, static_cast<std::uint64_t>(t)});
    const RealVector v = complement_basis(e).col(0);
    std::uint64_t oracle = 0;
    for (int i = 0; i < m; ++i) {
      if (oracles::hyperplane_facet_tstar(v, i) <= 1.0 + kStrictMargin) {
        oracle += 2;  // both sign patterns share the radius at r = 1
      }
    }
    const FacetSweepResult sweep =
        facet_intersection_count(SubspaceBasis(e), 1);
    if (sweep.intersected() != oracle) {
      return {false, fmt("count %llu != oracle %llu at seed %d",
                         static_cast<unsigned long long>(sweep.intersected()),
                         static_cast<unsigned long long>(oracle), t)};
    }
    if (sweep.intersected() > sweep.max_count) {
      return {false, fmt("count exceeds the maximum at seed %d", t)};
    }
    if (sweep.intersected() == sweep.max_count) ++achieved;
  }
  const double fraction = achieved / 200.0;
  if (fraction < 0.90) return {false, fmt("max achieved in only %.2f", fraction)};
  return {true, fmt("200 seeds oracle-exact, max achieved in %.3f", fraction)};
}

// --- criterion 7: similar-triangles identity ---------------------------------

Outcome projection_identity_battery() {
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    Rng shape({707, static_cast<std::uint64_t>(t)});
    const int m = 6 + static_cast<int>(shape.next_below(15));  // 6..20
    const int r = 1 + static_cast<int>(shape.next_below(m - 2));
    const int sub = r + 1 + static_cast<int>(shape.next_below(m - r - 1));
    ProjectionIdentitySides sides;
    try {
      sides = projection_identity_check(m, r, sub, {708, static_cast<std::uint64_t>(t)});
    } catch (const DegenerateIntersection&) {
      return {false, fmt("degenerate intersection at trial %d", t)};
    }
    worst = std::max(worst, std::abs(sides.lhs - sides.rhs) /
                                std::sqrt(static_cast<double>(r)));
  }
  return {worst <= 1e-8, fmt("1000 configurations, max relative deviation %.2e", worst)};
}

// --- criterion 8: projected length expectation -------------------------------

Outcome projection_length_window() {
  const ProjectionLengthStats stats = projection_length_stats(100, 25, 2000, {808, 0});
  const bool pass = stats.mean_sq_ratio >= 0.23 && stats.mean_sq_ratio <= 0.27;
  return {pass, fmt("mean squared ratio %.4f (expected 0.25)", stats.mean_sq_ratio)};
}

// --- criterion 9: robustness bound on certified codecs -----------------------

Outcome robustness_bound_battery() {
  const int m = 50, n = 25, r = 2;
  const int wanted = 100, per_codec = 10;
  int collected = 0, certified_codecs = 0;
  double worst_ratio = 0.0;
  for (int attempt = 0; attempt < 40 && collected < wanted; ++attempt) {
    const std::uint64_t tag = static_cast<std::uint64_t>(attempt);
    const Codec codec = make_codec({m, n, r}, {909, tag});
    if (!certify_uniform(codec).all_strict) continue;
    ++certified_codecs;
    for (int k = 0; k < per_codec && collected < wanted; ++k) {
      const std::uint64_t trial_tag = tag * 64 + static_cast<std::uint64_t>(k);
      const RealVector x = sample_gaussian_vector(n, {910, trial_tag});
      const RealVector y = encode(codec, x);
      Rng rng({911, trial_tag});
      Corruption corruption;
      corruption.support = rng.sample_subset(m, r);
      corruption.values.resize(r);
      for (int i = 0; i < r; ++i) {
        corruption.values[i] = rng.next_sign() * rng.next_log_uniform(1e-3, 1e6);
      }
      RealVector h = sample_gaussian_vector(m, {912, trial_tag});
      h *= 0.01 / norm_l1(h);
      const RealVector noisy = corrupt(y, corruption) + h;
      const DecodeOutcome out = robust_decode(codec, noisy);
      const RobustBound bound = robustness_bound(out, y, h);
      worst_ratio = std::max(worst_ratio, bound.error_l1 / norm_l1(h));
      ++collected;
      if (bound.error_l1 > 0.04 + 1e-12) {
        return {false, fmt("bound violated: |u-y|_1 = %.4f > 0.04", bound.error_l1)};
      }
    }
  }
  if (collected < wanted) {
    return {false, fmt("only %d certified trials collected", collected)};
  }
  return {true, fmt("%d trials over %d certified codecs, worst |u-y|_1/|h|_1 = %.2f",
                    collected, certified_codecs, worst_ratio)};
}

// --- criterion 10: the quantized finite-alphabet code -------------------------

Outcome quantized_code_battery() {
  const int m = 32, n = 16, r = 1, alphabet = 8;
  const int wanted = 200;
  int collected = 0;
  double quant_worst = 0.0;
  for (int attempt = 0; attempt < 400 && collected < wanted; ++attempt) {
    const std::uint64_t tag = static_cast<std::uint64_t>(attempt);
    const Codec codec = make_codec({m, n, r}, {1010, tag});
    if (!certify_uniform(codec).all_strict) continue;

    Rng rng({1011, tag});
    std::vector<int> x(n);
    RealVector xv(n);
    for (int i = 0; i < n; ++i) {
      x[i] = 1 + static_cast<int>(rng.next_below(alphabet));
      xv[i] = x[i];
    }
    const QuantizedWord word = quantized_encode(codec, x, alphabet);
    const double quant_l1 = norm_l1(dequantize(word) - codec.q * xv);
    quant_worst = std::max(quant_worst, quant_l1);
    if (quant_l1 > 0.05 + 1e-12) {
      return {false, fmt("quantization distortion %.4f above 1/20", quant_l1)};
    }

    QuantizedWord received = word;
    const int hit = static_cast<int>(rng.next_below(m));
    const double magnitude = rng.next_sign() * rng.next_log_uniform(1.0, 1e6);
    received.levels[hit] += std::llround(magnitude * 10.0 * m);
    if (quantized_decode(codec, received) != x) {
      return {false, fmt("integer recovery failed at attempt %d", attempt)};
    }
    ++collected;
  }
  if (collected < wanted) {
    return {false, fmt("only %d certified trials collected", collected)};
  }
  return {true, fmt("%d certified trials recovered exactly, max quantization l1 %.4f",
                    collected, quant_worst)};
}

// --- criterion 11: compressible reconstruction error shape -------------------

Outcome compressible_error_shape() {
  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::Compressible;
  cfg.m_list = {256};
  cfg.R_list = {32, 64, 128};
  cfg.trials = 50;
  cfg.master_seed = 1111;
  cfg.signal_decay = 0.5;
  const SummaryTable table = run_experiment(cfg);
  std::vector<double> medians;
  for (const SummaryRow& row : table.rows) {
    if (row.metric == "median_error_l2") medians.push_back(row.value);
  }
  if (medians.size() != 3) return {false, "missing cells"};
  for (std::size_t i = 1; i < medians.size(); ++i) {
    if (!(medians[i] < medians[i - 1])) {
      return {false, fmt("median not strictly decreasing: %.4f then %.4f",
                         medians[i - 1], medians[i])};
    }
  }
  return {true, fmt("medians %.4f > %.4f > %.4f over R = 32, 64, 128",
                    medians[0], medians[1], medians[2])};
}

// --- criterion 12: byte-identical reruns -------------------------------------

Outcome determinism_battery() {
  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::Phase;
  cfg.m_list = {24};
  cfg.r_list = {1};
  cfg.R_list = {6, 12};
  cfg.trials = 20;
  cfg.master_seed = 1212;

  const auto render = [&cfg](parallel::Backend backend, const char* threads) {
    setenv("L1CODEC_THREADS", threads, 1);
    cfg.backend = backend;
    std::ostringstream csv, json;
    emit(run_experiment(cfg), OutputFormat::Csv, csv);
    emit(run_experiment(cfg), OutputFormat::Json, json);
    return std::make_pair(csv.str(), json.str());
  };
  const auto serial = render(parallel::Backend::Serial, "1");
  const auto one = render(parallel::Backend::OpenMp, "1");
  const auto two = render(parallel::Backend::OpenMp, "2");
  unsetenv("L1CODEC_THREADS");
  if (serial != one || one != two) return {false, "outputs differ across schedules"};
  return {true, fmt("%zu CSV bytes identical across serial/1/2 workers",
                    serial.first.size())};
}

struct Criterion {
  int id;
  const char* label;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[i + 1]);
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "simplex matches enumeration on 500 random LPs", lp_corpus_agreement},
      {2, "worked three-coordinate decode", worked_decode_instance},
      {3, "certificates predict decoding outcomes", certificate_decoding_equivalence},
      {4, "phase transition sweep at m=100", phase_transition_sweep},
      {5, "necessity of the logarithmic redundancy", necessity_thresholds},
      {6, "facet counting matches the hyperplane oracle", facet_counting_oracle},
      {7, "similar-triangles projection identity", projection_identity_battery},
      {8, "projected length expectation k/d", projection_length_window},
      {9, "robustness bound on certified codecs", robustness_bound_battery},
      {10, "quantized finite-alphabet code", quantized_code_battery},
      {11, "compressible reconstruction error decreases in R", compressible_error_shape},
      {12, "byte-identical output across schedules", determinism_battery},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] criterion %2d: %s — %s (%.1f s)\n",
                outcome.pass ? "PASS" : "FAIL", c.id, c.label,
                outcome.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
