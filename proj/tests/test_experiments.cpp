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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include <json.hpp>

#include "l1codec/bp.hpp"
#include "l1codec/errors.hpp"
#include "l1codec/experiments.hpp"

using namespace l1codec;

namespace {

std::string to_csv(const SummaryTable& table) {
  std::ostringstream os;
  emit(table, OutputFormat::Csv, os);
  return os.str();
}

std::map<std::string, double> cell_metrics(const SummaryTable& table, int m,
                                           int r, int R) {
  std::map<std::string, double> out;
  for (const SummaryRow& row : table.rows) {
    if (row.m == m && row.r == r && row.R == R) out[row.metric] = row.value;
  }
  return out;
}

}  // namespace

TEST_CASE("experiment names round-trip") {
  for (const char* name : {"phase", "facets", "necessity", "compressible",
                           "codec-roundtrip", "geometry-checks"}) {
    const auto kind = parse_experiment(name);
    REQUIRE(kind.has_value());
    CHECK(std::string(experiment_name(*kind)) == name);
  }
  CHECK(!parse_experiment("nope").has_value());
}

TEST_CASE("config validation rejects bad grids") {
  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::Phase;
  cfg.r_list = {1};
  cfg.R_list = {4};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);  // empty m
  cfg.m_list = {12};
  cfg.trials = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.trials = 3;
  cfg.validate();
  cfg.R_list = {12};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);  // R < m required
  cfg.R_list = {4};
  cfg.r_list = {12};
  CHECK_THROWS_AS(cfg.validate(), ConfigError);  // r < m required

  ExperimentConfig round;
  round.experiment = ExperimentKind::CodecRoundtrip;
  round.m_list = {16};
  round.r_list = {1};
  round.R_list = {12};  // m > 2n
  CHECK_THROWS_AS(round.validate(), ConfigError);

  ExperimentConfig comp;
  comp.experiment = ExperimentKind::Compressible;
  comp.m_list = {16};
  comp.R_list = {4};
  comp.signal_decay = 1.5;
  CHECK_THROWS_AS(comp.validate(), ConfigError);
}

TEST_CASE("generous redundancy calibration") {
  CHECK(generous_redundancy(1, 64) == 42);
  CHECK(generous_redundancy(5, 100) == 100 - 1);  // clamped to m-1
  CHECK(generous_redundancy(0, 64) == 1);
}

TEST_CASE("phase experiment basics") {
  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::Phase;
  cfg.m_list = {12};
  cfg.r_list = {0, 1};
  cfg.R_list = {4, 8};
  cfg.trials = 10;
  cfg.master_seed = 5;
  const SummaryTable table = run_experiment(cfg);

  CHECK(table.records.size() == 4 * 10);
  for (const SummaryRow& row : table.rows) {
    if (row.metric == "success_rate") {
      CHECK(row.value >= 0.0);
      CHECK(row.value <= 1.0);
      if (row.r == 0) CHECK(row.value == 1.0);
    }
    CHECK(std::isfinite(row.value));
  }
  const auto cell = cell_metrics(table, 12, 1, 8);
  CHECK(cell.count("success_rate") == 1);
  CHECK(cell.at("trial_errors") == 0.0);
}

TEST_CASE("summary tables are schedule independent and reproducible") {
  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::Phase;
  cfg.m_list = {10, 14};
  cfg.r_list = {1};
  cfg.R_list = {4, 6};
  cfg.trials = 6;
  cfg.master_seed = 99;

  cfg.backend = parallel::Backend::Serial;
  const std::string serial_csv = to_csv(run_experiment(cfg));
  cfg.backend = parallel::Backend::OpenMp;
  const std::string omp_csv = to_csv(run_experiment(cfg));
  CHECK(serial_csv == omp_csv);
  CHECK(to_csv(run_experiment(cfg)) == omp_csv);  // repeat run, same bytes

  std::ostringstream json_a, json_b;
  emit(run_experiment(cfg), OutputFormat::Json, json_a);
  cfg.backend = parallel::Backend::Serial;
  emit(run_experiment(cfg), OutputFormat::Json, json_b);
  CHECK(json_a.str() == json_b.str());
  // Parseable and carrying one object per trial.
  const auto parsed = nlohmann::json::parse(json_a.str());
  CHECK(parsed.size() == 4 * 6);
}

TEST_CASE("facets experiment agrees with its own records") {
  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::Facets;
  cfg.m_list = {8};
  cfg.r_list = {1};
  cfg.R_list = {7};
  cfg.trials = 12;
  cfg.master_seed = 17;
  const SummaryTable table = run_experiment(cfg);
  const auto cell = cell_metrics(table, 8, 1, 7);
  CHECK(cell.at("max_facets") == 16.0);
  CHECK(cell.at("achieved_max_rate") >= 0.5);  // most seeds hit every facet
  for (const TrialRecord& rec : table.records) {
    CHECK(rec.facet_count <= 16);
  }
}

TEST_CASE("necessity experiment flags the thin regime") {
  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::Necessity;
  cfg.m_list = {8};
  cfg.r_list = {2};
  cfg.R_list = {3};  // R < 2r
  cfg.trials = 10;
  cfg.master_seed = 23;
  const SummaryTable table = run_experiment(cfg);
  const auto cell = cell_metrics(table, 8, 2, 3);
  CHECK(cell.at("all_strict_rate") == 0.0);
  CHECK(cell.at("R_star") == generous_redundancy(2, 8));
  CHECK(cell.at("mean_intersected_fraction") < 1.0);
}

TEST_CASE("compressible signals sit exactly on the decay envelope") {
  for (double p : {0.25, 0.5, 1.0}) {
    const CompressibleSignal signal = make_compressible_signal(p, 64, {71, 0});
    CHECK(signal.values.size() == 64);
    CHECK(rearrangement_excess(signal) <= 1e-15);
    // Equality at the bound: the largest magnitude is exactly 1.
    CHECK(signal.values.cwiseAbs().maxCoeff() == doctest::Approx(1.0));
  }
  CHECK_THROWS_AS(make_compressible_signal(1.5, 8, {0, 0}), ConfigError);
}

TEST_CASE("exactly sparse signals reduce to exact recovery") {
  // A compressible signal truncated to r spikes with generous measurements
  // comes back to working precision.
  const int m = 32, r = 2, measurements = 20;
  RealVector f = RealVector::Zero(m);
  f[3] = 2.0;
  f[17] = -1.0;
  const RealMatrix a = sample_gaussian_matrix(measurements, m, {72, 0});
  const SenseResult res = sense_l1({a, a * f});
  CHECK(norm_l2(res.g - f) <= 1e-7);
  (void)r;
}

TEST_CASE("facet fraction rises with subspace dimension") {
  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::Facets;
  cfg.m_list = {8};
  cfg.r_list = {1};
  cfg.R_list = {2, 4, 6};
  cfg.trials = 40;
  cfg.master_seed = 73;
  const SummaryTable table = run_experiment(cfg);
  std::vector<double> rates;
  for (const SummaryRow& row : table.rows) {
    if (row.metric == "achieved_max_rate") rates.push_back(row.value);
  }
  REQUIRE(rates.size() == 3);
  CHECK(rates[1] >= rates[0] - 0.1);
  CHECK(rates[2] >= rates[1] - 0.1);
  CHECK(rates[2] > rates[0]);
}

TEST_CASE("compressible errors shrink with more measurements") {
  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::Compressible;
  cfg.m_list = {48};
  cfg.R_list = {8, 24};
  cfg.trials = 8;
  cfg.master_seed = 31;
  cfg.signal_decay = 0.5;
  const SummaryTable table = run_experiment(cfg);
  const double few = cell_metrics(table, 48, 0, 8).at("median_error_l2");
  const double many = cell_metrics(table, 48, 0, 24).at("median_error_l2");
  CHECK(few > 0.0);
  CHECK(many < few);
}

TEST_CASE("codec roundtrip on certified cells") {
  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::CodecRoundtrip;
  cfg.m_list = {16};
  cfg.r_list = {1};
  cfg.R_list = {8};
  cfg.trials = 15;
  cfg.master_seed = 37;
  cfg.alphabet = 4;
  const SummaryTable table = run_experiment(cfg);
  const auto cell = cell_metrics(table, 16, 1, 8);
  CHECK(cell.at("quant_l1_max") <= 0.05 + 1e-12);
  CHECK(cell.at("certified_rate") > 0.0);
  CHECK(cell.at("exact_match_rate_certified") == 1.0);
  CHECK(cell.at("peak_level") > 0.0);
}

TEST_CASE("geometry checks summarize both identities") {
  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::GeometryChecks;
  cfg.m_list = {12};
  cfg.trials = 40;
  cfg.master_seed = 41;
  cfg.proj_dim = 40;
  cfg.proj_sub = 10;
  const SummaryTable table = run_experiment(cfg);
  const auto identity = cell_metrics(table, 12, 0, 1);
  CHECK(identity.at("identity_max_rel_dev") <= 1e-8);
  CHECK(identity.at("degenerate_count") == 0.0);
  const auto stats = cell_metrics(table, 40, 0, 10);
  CHECK(stats.at("projlen_mean_sq_ratio") > 0.15);
  CHECK(stats.at("projlen_mean_sq_ratio") < 0.35);
}

TEST_CASE("every experiment emits finite values and rates in range") {
  std::vector<ExperimentConfig> configs(6);
  configs[0].experiment = ExperimentKind::Phase;
  configs[1].experiment = ExperimentKind::Facets;
  configs[2].experiment = ExperimentKind::Necessity;
  configs[3].experiment = ExperimentKind::Compressible;
  configs[4].experiment = ExperimentKind::CodecRoundtrip;
  configs[5].experiment = ExperimentKind::GeometryChecks;
  for (ExperimentConfig& cfg : configs) {
    cfg.m_list = {10};
    cfg.r_list = {1};
    cfg.R_list = {5};
    cfg.trials = 4;
    cfg.master_seed = 88;
    const SummaryTable table = run_experiment(cfg);
    CHECK(!table.rows.empty());
    for (const SummaryRow& row : table.rows) {
      CHECK(std::isfinite(row.value));
      if (row.metric.ends_with("_rate") || row.metric.ends_with("_rate_certified")) {
        CHECK(row.value >= 0.0);
        CHECK(row.value <= 1.0);
      }
    }
  }
}

TEST_CASE("csv header is the fixed contract") {
  SummaryTable empty;
  std::ostringstream os;
  emit(empty, OutputFormat::Csv, os);
  CHECK(os.str() == "experiment,m,n,r,R,trials,seed,metric,value\n");
}

TEST_CASE("emit_to_path raises IoError on an unwritable target") {
  SummaryTable empty;
  CHECK_THROWS_AS(emit_to_path(empty, OutputFormat::Csv, "/nonexistent-dir/out.csv"),
                  IoError);
}
