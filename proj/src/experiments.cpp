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

#include "l1codec/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "l1codec/codec.hpp"
#include "l1codec/errors.hpp"
#include "l1codec/geometry.hpp"

namespace l1codec {

namespace {

// Stream slots within one trial's block of 16.
enum TrialStream : std::uint64_t {
  kStreamMatrix = 0,
  kStreamSignal = 1,
  kStreamSupport = 2,
  kStreamValues = 3,
  kStreamNoise = 4,
  kStreamShuffle = 5,
};

constexpr double kMagLo = 1e-3;
constexpr double kMagHi = 1e6;
constexpr double kRecoveryTol = 1e-6;

SeedSpec trial_seed(const ExperimentConfig& cfg, std::int64_t trial_index,
                    TrialStream slot) {
  return SeedSpec{cfg.master_seed,
                  static_cast<std::uint64_t>(trial_index) * 16 + slot};
}

struct Cell {
  int m = 0;
  int r = 0;
  int R = 0;
  bool too_large = false;     // facet budget exceeded; trials skipped
  std::int64_t first = 0;     // global index of the cell's first trial
};

std::vector<Cell> grid_cells(const ExperimentConfig& cfg, bool use_r) {
  std::vector<Cell> cells;
  for (int m : cfg.m_list) {
    for (int r : use_r ? cfg.r_list : std::vector<int>{0}) {
      for (int R : cfg.R_list) {
        cells.push_back(Cell{m, r, R});
      }
    }
  }
  return cells;
}

TrialRecord base_record(const ExperimentConfig& cfg, const Cell& cell,
                        std::int64_t trial_index) {
  TrialRecord rec;
  rec.experiment = experiment_name(cfg.experiment);
  rec.m = cell.m;
  rec.n = cell.m - cell.R;
  rec.r = cell.r;
  rec.R = cell.R;
  rec.trial_index = trial_index;
  rec.master_seed = cfg.master_seed;
  rec.stream = static_cast<std::uint64_t>(trial_index) * 16;
  return rec;
}

void record_failure(TrialRecord& rec, const std::exception& e) {
  rec.failed = true;
  rec.success = false;
  rec.error = e.what();
}

SummaryRow make_row(const ExperimentConfig& cfg, const Cell& cell,
                    const std::string& metric, double value) {
  SummaryRow row;
  row.experiment = experiment_name(cfg.experiment);
  row.m = cell.m;
  row.n = cell.m - cell.R;
  row.r = cell.r;
  row.R = cell.R;
  row.trials = cfg.trials;
  row.seed = cfg.master_seed;
  row.metric = metric;
  row.value = value;
  return row;
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  if (v.size() % 2 == 1) return v[mid];
  return 0.5 * (v[mid - 1] + v[mid]);
}

// Runs cfg.trials work items per live cell in parallel, filling the record
// grid; aggregation then walks cells in order so output is deterministic.
template <typename TrialFn>
std::vector<TrialRecord> run_grid(const ExperimentConfig& cfg,
                                  std::vector<Cell>& cells, TrialFn&& fn) {
  std::int64_t total = 0;
  for (Cell& cell : cells) {
    cell.first = total;
    if (!cell.too_large) total += cfg.trials;
  }
  std::vector<TrialRecord> records(static_cast<std::size_t>(total));
  std::vector<const Cell*> cell_of(static_cast<std::size_t>(total));
  {
    std::int64_t at = 0;
    for (const Cell& cell : cells) {
      if (cell.too_large) continue;
      for (int t = 0; t < cfg.trials; ++t) cell_of[at + t] = &cell;
      at += cfg.trials;
    }
  }
  parallel::for_each_index(total, cfg.backend, [&](std::int64_t idx) {
    const Cell& cell = *cell_of[idx];
    TrialRecord rec = base_record(cfg, cell, idx);
    try {
      fn(cell, idx, rec);
    } catch (const std::exception& e) {
      record_failure(rec, e);
    }
    records[idx] = std::move(rec);
  });
  return records;
}

Corruption draw_corruption(const ExperimentConfig& cfg, std::int64_t idx,
                           int m, int r) {
  Corruption corruption;
  if (r == 0) return corruption;
  Rng support_rng(trial_seed(cfg, idx, kStreamSupport));
  corruption.support = support_rng.sample_subset(m, r);
  Rng value_rng(trial_seed(cfg, idx, kStreamValues));
  corruption.values.resize(r);
  for (int i = 0; i < r; ++i) {
    corruption.values[i] =
        value_rng.next_sign() * value_rng.next_log_uniform(kMagLo, kMagHi);
  }
  return corruption;
}

}  // namespace

const char* experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Phase:
      return "phase";
    case ExperimentKind::Facets:
      return "facets";
    case ExperimentKind::Necessity:
      return "necessity";
    case ExperimentKind::Compressible:
      return "compressible";
    case ExperimentKind::CodecRoundtrip:
      return "codec-roundtrip";
    case ExperimentKind::GeometryChecks:
      return "geometry-checks";
  }
  return "unknown";
}

std::optional<ExperimentKind> parse_experiment(std::string_view name) {
  for (ExperimentKind kind :
       {ExperimentKind::Phase, ExperimentKind::Facets, ExperimentKind::Necessity,
        ExperimentKind::Compressible, ExperimentKind::CodecRoundtrip,
        ExperimentKind::GeometryChecks}) {
    if (name == experiment_name(kind)) return kind;
  }
  return std::nullopt;
}

int generous_redundancy(int r, int m) {
  if (r < 1) return 1;
  const double value = 10.0 * r * std::log(static_cast<double>(m) / r);
  const int rounded = static_cast<int>(std::ceil(value));
  return std::clamp(rounded, 1, m - 1);
}

void ExperimentConfig::validate() const {
  const bool uses_r = experiment != ExperimentKind::Compressible &&
                      experiment != ExperimentKind::GeometryChecks;
  const bool uses_R = experiment != ExperimentKind::GeometryChecks;
  if (m_list.empty()) throw ConfigError("config: m list is empty");
  if (uses_R && R_list.empty()) throw ConfigError("config: R list is empty");
  if (uses_r && r_list.empty()) throw ConfigError("config: r list is empty");
  if (trials < 1) throw ConfigError("config: trials must be >= 1");
  for (int m : m_list) {
    if (m < 2) throw ConfigError("config: m must be >= 2");
    if (uses_R) {
      for (int R : R_list) {
        if (!(1 <= R && R < m)) throw ConfigError("config: need 1 <= R < m");
        if (experiment == ExperimentKind::CodecRoundtrip && 2 * R > m) {
          throw ConfigError("config: codec-roundtrip needs m <= 2n, i.e. 2R <= m");
        }
      }
    }
    if (uses_r) {
      for (int r : r_list) {
        if (!(0 <= r && r < m)) throw ConfigError("config: need 0 <= r < m");
      }
    }
  }
  if (experiment == ExperimentKind::Compressible) {
    if (!(signal_decay > 0.0 && signal_decay <= 1.0)) {
      throw ConfigError("config: compressible exponent p must lie in (0, 1]");
    }
  }
  if (experiment == ExperimentKind::CodecRoundtrip && alphabet < 1) {
    throw ConfigError("config: alphabet size must be >= 1");
  }
  if (experiment == ExperimentKind::GeometryChecks) {
    for (int m : m_list) {
      if (m < 4) throw ConfigError("config: geometry-checks needs m >= 4");
    }
    if (!(1 <= proj_sub && proj_sub <= proj_dim)) {
      throw ConfigError("config: projection stats need 1 <= k <= d");
    }
  }
}

SummaryTable run_phase_transition(const ExperimentConfig& cfg) {
  std::vector<Cell> cells = grid_cells(cfg, /*use_r=*/true);
  std::vector<TrialRecord> records =
      run_grid(cfg, cells, [&](const Cell& cell, std::int64_t idx, TrialRecord& rec) {
        const int n = cell.m - cell.R;
        const Codec codec = make_codec({cell.m, n, cell.r},
                                       trial_seed(cfg, idx, kStreamMatrix));
        const RealVector x =
            sample_gaussian_vector(n, trial_seed(cfg, idx, kStreamSignal));
        const RealVector y = encode(codec, x);
        const Corruption corruption = draw_corruption(cfg, idx, cell.m, cell.r);
        const DecodeOutcome out = decode(codec, corrupt(y, corruption));
        rec.error_l1 = norm_l1(out.x_hat - x);
        rec.error_l2 = norm_l2(out.x_hat - x);
        rec.success = norm_linf(out.x_hat - x) <= kRecoveryTol;
      });

  SummaryTable table;
  table.records = std::move(records);
  for (const Cell& cell : cells) {
    int successes = 0, errors = 0;
    std::vector<double> e1, e2;
    for (int t = 0; t < cfg.trials; ++t) {
      const TrialRecord& rec = table.records[cell.first + t];
      successes += rec.success ? 1 : 0;
      errors += rec.failed ? 1 : 0;
      e1.push_back(rec.error_l1);
      e2.push_back(rec.error_l2);
    }
    table.rows.push_back(make_row(cfg, cell, "success_rate",
                                  static_cast<double>(successes) / cfg.trials));
    table.rows.push_back(make_row(cfg, cell, "mean_error_l1", mean_of(e1)));
    table.rows.push_back(make_row(cfg, cell, "mean_error_l2", mean_of(e2)));
    table.rows.push_back(make_row(cfg, cell, "trial_errors", errors));
  }
  return table;
}

SummaryTable run_facets(const ExperimentConfig& cfg) {
  std::vector<Cell> cells = grid_cells(cfg, /*use_r=*/true);
  for (Cell& cell : cells) {
    cell.too_large = facet_count(cell.m, cell.r) > kExhaustiveFacetBudget;
  }
  std::vector<TrialRecord> records =
      run_grid(cfg, cells, [&](const Cell& cell, std::int64_t idx, TrialRecord& rec) {
        const SubspaceBasis subspace(sample_haar_orthonormal(
            cell.m, cell.R, trial_seed(cfg, idx, kStreamMatrix)));
        const FacetSweepResult sweep = facet_intersection_count(
            subspace, cell.r, parallel::Backend::Serial);
        rec.facet_count = static_cast<std::int64_t>(sweep.intersected());
        rec.t_worst = sweep.worst_t;
        rec.success = sweep.intersected() == sweep.max_count;
      });

  SummaryTable table;
  table.records = std::move(records);
  for (const Cell& cell : cells) {
    if (cell.too_large) {
      table.rows.push_back(make_row(cfg, cell, "too_large", 1.0));
      continue;
    }
    int achieved = 0;
    std::vector<double> counts;
    for (int t = 0; t < cfg.trials; ++t) {
      const TrialRecord& rec = table.records[cell.first + t];
      achieved += rec.success ? 1 : 0;
      counts.push_back(static_cast<double>(rec.facet_count));
    }
    table.rows.push_back(make_row(cfg, cell, "achieved_max_rate",
                                  static_cast<double>(achieved) / cfg.trials));
    table.rows.push_back(make_row(cfg, cell, "mean_intersected", mean_of(counts)));
    table.rows.push_back(make_row(
        cfg, cell, "max_facets",
        static_cast<double>(facet_count(cell.m, cell.r))));
  }
  return table;
}

SummaryTable run_necessity(const ExperimentConfig& cfg) {
  std::vector<Cell> cells = grid_cells(cfg, /*use_r=*/true);
  for (Cell& cell : cells) {
    cell.too_large = facet_count(cell.m, cell.r) > kExhaustiveFacetBudget;
  }
  std::vector<TrialRecord> records =
      run_grid(cfg, cells, [&](const Cell& cell, std::int64_t idx, TrialRecord& rec) {
        const int n = cell.m - cell.R;
        const Codec codec = make_codec({cell.m, n, cell.r},
                                       trial_seed(cfg, idx, kStreamMatrix));
        const FacetSweepResult sweep = facet_intersection_count(
            codec.complement, cell.r, parallel::Backend::Serial);
        rec.facet_count = static_cast<std::int64_t>(sweep.intersected());
        rec.t_worst = sweep.worst_t;
        rec.success = sweep.strict == sweep.total();  // uniform recovery
      });

  SummaryTable table;
  table.records = std::move(records);
  for (const Cell& cell : cells) {
    if (cell.too_large) {
      table.rows.push_back(make_row(cfg, cell, "too_large", 1.0));
      continue;
    }
    const double max_count = static_cast<double>(facet_count(cell.m, cell.r));
    int uniform = 0;
    std::vector<double> fractions;
    for (int t = 0; t < cfg.trials; ++t) {
      const TrialRecord& rec = table.records[cell.first + t];
      uniform += rec.success ? 1 : 0;
      fractions.push_back(static_cast<double>(rec.facet_count) / max_count);
    }
    table.rows.push_back(make_row(cfg, cell, "all_strict_rate",
                                  static_cast<double>(uniform) / cfg.trials));
    table.rows.push_back(
        make_row(cfg, cell, "mean_intersected_fraction", mean_of(fractions)));
    table.rows.push_back(make_row(cfg, cell, "R_star",
                                  generous_redundancy(cell.r, cell.m)));
  }
  return table;
}

CompressibleSignal make_compressible_signal(double p, int m, SeedSpec seed) {
  if (!(p > 0.0 && p <= 1.0) || m < 1) {
    throw ConfigError("make_compressible_signal: need p in (0, 1] and m >= 1");
  }
  Rng rng(seed);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  for (int i = m - 1; i > 0; --i) {
    const int j =
        static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }
  CompressibleSignal signal;
  signal.decay = p;
  signal.values = RealVector::Zero(m);
  for (int s = 1; s <= m; ++s) {
    signal.values[order[s - 1]] =
        rng.next_sign() * std::pow(static_cast<double>(s), -1.0 / p);
  }
  return signal;
}

double rearrangement_excess(const CompressibleSignal& signal) {
  std::vector<double> magnitudes(signal.values.size());
  for (Eigen::Index i = 0; i < signal.values.size(); ++i) {
    magnitudes[i] = std::abs(signal.values[i]);
  }
  std::sort(magnitudes.begin(), magnitudes.end(), std::greater<>());
  double excess = 0.0;
  for (std::size_t s = 1; s <= magnitudes.size(); ++s) {
    const double envelope = std::pow(static_cast<double>(s), -1.0 / signal.decay);
    excess = std::max(excess, magnitudes[s - 1] - envelope);
  }
  return excess;
}

SummaryTable run_compressible(const ExperimentConfig& cfg) {
  const double p = cfg.signal_decay;
  std::vector<Cell> cells = grid_cells(cfg, /*use_r=*/false);
  std::vector<TrialRecord> records =
      run_grid(cfg, cells, [&](const Cell& cell, std::int64_t idx, TrialRecord& rec) {
        const int m = cell.m;
        const int R = cell.R;
        const RealVector f =
            make_compressible_signal(p, m, trial_seed(cfg, idx, kStreamShuffle))
                .values;
        const RealMatrix a =
            sample_gaussian_matrix(R, m, trial_seed(cfg, idx, kStreamMatrix));
        const SenseResult res = sense_l1({a, a * f});
        rec.error_l1 = norm_l1(res.g - f);
        rec.error_l2 = norm_l2(res.g - f);
        rec.success = true;
      });

  SummaryTable table;
  table.records = std::move(records);
  for (const Cell& cell : cells) {
    std::vector<double> e2, ratios;
    const double rate = std::pow(
        std::log(static_cast<double>(cell.m) / cell.R) / cell.R, 1.0 / p - 0.5);
    for (int t = 0; t < cfg.trials; ++t) {
      const TrialRecord& rec = table.records[cell.first + t];
      e2.push_back(rec.error_l2);
      if (rate > 0.0) ratios.push_back(rec.error_l2 / rate);
    }
    table.rows.push_back(make_row(cfg, cell, "median_error_l2", median_of(e2)));
    table.rows.push_back(make_row(cfg, cell, "mean_error_l2", mean_of(e2)));
    table.rows.push_back(
        make_row(cfg, cell, "mean_ratio_to_envelope", mean_of(ratios)));
  }
  return table;
}

SummaryTable run_codec_roundtrip(const ExperimentConfig& cfg) {
  std::vector<Cell> cells = grid_cells(cfg, /*use_r=*/true);
  for (Cell& cell : cells) {
    cell.too_large = facet_count(cell.m, cell.r) > kExhaustiveFacetBudget;
  }
  // success: exact integer recovery; error_l1 reused for the realized
  // quantization distortion; facet_count reused for the peak |level|;
  // t_worst carries the certificate sweep result (all strict iff below 1).
  std::vector<TrialRecord> records =
      run_grid(cfg, cells, [&](const Cell& cell, std::int64_t idx, TrialRecord& rec) {
        const int m = cell.m;
        const int n = cell.m - cell.R;
        const Codec codec = make_codec({m, n, cell.r},
                                       trial_seed(cfg, idx, kStreamMatrix));
        Rng word_rng(trial_seed(cfg, idx, kStreamSignal));
        std::vector<int> x(n);
        RealVector xv(n);
        for (int i = 0; i < n; ++i) {
          x[i] = 1 + static_cast<int>(word_rng.next_below(cfg.alphabet));
          xv[i] = x[i];
        }
        const QuantizedWord word = quantized_encode(codec, x, cfg.alphabet);
        rec.error_l1 = norm_l1(dequantize(word) - codec.q * xv);

        const UniformCertificate cert =
            certify_uniform(codec, parallel::Backend::Serial);
        rec.t_worst = cert.worst_t;

        QuantizedWord received = word;
        if (cell.r > 0) {
          Rng support_rng(trial_seed(cfg, idx, kStreamSupport));
          const std::vector<int> hits = support_rng.sample_subset(m, cell.r);
          Rng value_rng(trial_seed(cfg, idx, kStreamValues));
          for (int i : hits) {
            const double magnitude =
                value_rng.next_sign() * value_rng.next_log_uniform(kMagLo, kMagHi);
            received.levels[i] += std::llround(magnitude * 10.0 * m);
          }
        }
        const std::vector<int> decoded = quantized_decode(codec, received);
        rec.success = decoded == x;
        std::int64_t peak = 0;
        for (std::int64_t lv : word.levels) peak = std::max(peak, std::abs(lv));
        rec.facet_count = peak;
      });

  SummaryTable table;
  table.records = std::move(records);
  for (const Cell& cell : cells) {
    if (cell.too_large) {
      table.rows.push_back(make_row(cfg, cell, "too_large", 1.0));
      continue;
    }
    int match = 0, certified = 0, certified_match = 0;
    double quant_max = 0.0, peak_level = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      const TrialRecord& rec = table.records[cell.first + t];
      const bool cert = rec.t_worst <= 1.0 - kStrictMargin && !rec.failed;
      match += rec.success ? 1 : 0;
      certified += cert ? 1 : 0;
      certified_match += (cert && rec.success) ? 1 : 0;
      quant_max = std::max(quant_max, rec.error_l1);
      peak_level = std::max(peak_level, static_cast<double>(rec.facet_count));
    }
    table.rows.push_back(make_row(cfg, cell, "exact_match_rate",
                                  static_cast<double>(match) / cfg.trials));
    table.rows.push_back(make_row(cfg, cell, "certified_rate",
                                  static_cast<double>(certified) / cfg.trials));
    if (certified > 0) {
      table.rows.push_back(
          make_row(cfg, cell, "exact_match_rate_certified",
                   static_cast<double>(certified_match) / certified));
    }
    table.rows.push_back(make_row(cfg, cell, "quant_l1_max", quant_max));
    table.rows.push_back(make_row(cfg, cell, "peak_level", peak_level));
  }
  return table;
}

SummaryTable run_geometry_checks(const ExperimentConfig& cfg) {
  // Identity batch over the m grid, then one projection-length batch.
  std::vector<Cell> cells;
  for (int m : cfg.m_list) cells.push_back(Cell{m, 0, 1});
  std::vector<TrialRecord> records =
      run_grid(cfg, cells, [&](const Cell& cell, std::int64_t idx, TrialRecord& rec) {
        Rng pick(trial_seed(cfg, idx, kStreamSupport));
        const int m = cell.m;
        const int r = 1 + static_cast<int>(pick.next_below(m - 2));
        const int sub =
            r + 1 + static_cast<int>(pick.next_below(m - r - 1));
        rec.r = r;
        rec.R = sub;
        rec.n = m - sub;
        const ProjectionIdentitySides sides = projection_identity_check(
            m, r, sub, trial_seed(cfg, idx, kStreamMatrix));
        rec.error_l1 = std::abs(sides.lhs - sides.rhs) /
                       std::sqrt(static_cast<double>(r));
        rec.error_l2 = sides.distance;
        rec.success = true;
      });

  SummaryTable table;
  table.records = std::move(records);
  for (const Cell& cell : cells) {
    double max_dev = 0.0;
    std::vector<double> devs;
    int degenerate = 0;
    for (int t = 0; t < cfg.trials; ++t) {
      const TrialRecord& rec = table.records[cell.first + t];
      if (rec.failed) {
        ++degenerate;
        continue;
      }
      max_dev = std::max(max_dev, rec.error_l1);
      devs.push_back(rec.error_l1);
    }
    table.rows.push_back(make_row(cfg, cell, "identity_max_rel_dev", max_dev));
    table.rows.push_back(
        make_row(cfg, cell, "identity_mean_rel_dev", mean_of(devs)));
    table.rows.push_back(make_row(cfg, cell, "degenerate_count", degenerate));
  }

  const std::int64_t stats_index =
      static_cast<std::int64_t>(cells.size()) * cfg.trials;
  const ProjectionLengthStats stats =
      projection_length_stats(cfg.proj_dim, cfg.proj_sub, cfg.trials,
                              trial_seed(cfg, stats_index, kStreamMatrix));
  Cell stats_cell{cfg.proj_dim, 0, cfg.proj_sub};
  table.rows.push_back(
      make_row(cfg, stats_cell, "projlen_mean_sq_ratio", stats.mean_sq_ratio));
  table.rows.push_back(make_row(cfg, stats_cell, "projlen_std", stats.std_dev));
  return table;
}

SummaryTable run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  switch (cfg.experiment) {
    case ExperimentKind::Phase:
      return run_phase_transition(cfg);
    case ExperimentKind::Facets:
      return run_facets(cfg);
    case ExperimentKind::Necessity:
      return run_necessity(cfg);
    case ExperimentKind::Compressible:
      return run_compressible(cfg);
    case ExperimentKind::CodecRoundtrip:
      return run_codec_roundtrip(cfg);
    case ExperimentKind::GeometryChecks:
      return run_geometry_checks(cfg);
  }
  throw ConfigError("run_experiment: unknown experiment");
}

}  // namespace l1codec
