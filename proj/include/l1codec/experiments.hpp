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

#ifndef L1CODEC_EXPERIMENTS_HPP_
#define L1CODEC_EXPERIMENTS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "l1codec/parallel.hpp"
#include "l1codec/rng.hpp"
#include "l1codec/table.hpp"

namespace l1codec {

enum class ExperimentKind {
  Phase,
  Facets,
  Necessity,
  Compressible,
  CodecRoundtrip,
  GeometryChecks,
};

const char* experiment_name(ExperimentKind kind);
std::optional<ExperimentKind> parse_experiment(std::string_view name);

// Seeded sweep over the (m, r, R) grid. Every trial draws from streams
// derived as (master_seed, global_trial_index * 16 + slot), so results do
// not depend on the execution schedule or worker count.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Phase;
  std::vector<int> m_list;
  std::vector<int> r_list;
  std::vector<int> R_list;
  int trials = 1;
  std::uint64_t master_seed = 0;
  std::string output_path = "-";
  OutputFormat format = OutputFormat::Csv;
  double signal_decay = 0.5;  // compressible exponent p in (0, 1]
  int alphabet = 8;           // codec-roundtrip input symbols {1..alphabet}
  int proj_dim = 100;         // geometry-checks projection batch: d
  int proj_sub = 25;          //                                   k
  parallel::Backend backend = parallel::Backend::OpenMp;

  // Throws ConfigError; message names the offending field.
  void validate() const;
};

// Signal whose sorted magnitudes sit exactly on the decay envelope
// s^(-1/p), s = 1..m, with random signs and random coordinate placement:
// the hardest shape the approximate-reconstruction bound admits.
struct CompressibleSignal {
  double decay = 0.5;  // p in (0, 1]
  RealVector values;
};

CompressibleSignal make_compressible_signal(double p, int m, SeedSpec seed);

// Largest violation of the rearrangement envelope; 0 for signals built at
// the bound (up to roundoff in the power evaluation).
double rearrangement_excess(const CompressibleSignal& signal);

SummaryTable run_phase_transition(const ExperimentConfig& cfg);
SummaryTable run_facets(const ExperimentConfig& cfg);
SummaryTable run_necessity(const ExperimentConfig& cfg);
SummaryTable run_compressible(const ExperimentConfig& cfg);
SummaryTable run_codec_roundtrip(const ExperimentConfig& cfg);
SummaryTable run_geometry_checks(const ExperimentConfig& cfg);

SummaryTable run_experiment(const ExperimentConfig& cfg);

// Calibrated generous measurement count ceil(10 r ln(m/r)), clamped to
// [1, m-1]. Stands in for the unspecified constant in the recovery
// threshold; emitted alongside necessity results for reference.
int generous_redundancy(int r, int m);

}  // namespace l1codec

#endif  // L1CODEC_EXPERIMENTS_HPP_
