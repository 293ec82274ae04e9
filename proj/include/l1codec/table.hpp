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

#ifndef L1CODEC_TABLE_HPP_
#define L1CODEC_TABLE_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace l1codec {

enum class OutputFormat { Csv, Json };

// One seeded experiment outcome. Reproducible from the experiment
// parameters plus (master_seed, stream). runtime_ms is diagnostic only and
// never serialized, so emitted files stay byte-stable across runs.
struct TrialRecord {
  std::string experiment;
  int m = 0;
  int n = 0;
  int r = 0;
  int R = 0;
  std::int64_t trial_index = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t stream = 0;
  bool success = false;
  double error_l1 = 0.0;
  double error_l2 = 0.0;
  double t_worst = 0.0;
  std::int64_t facet_count = 0;
  double runtime_ms = 0.0;
  bool failed = false;       // the trial itself raised an error
  std::string error;
};

struct SummaryRow {
  std::string experiment;
  int m = 0;
  int n = 0;
  int r = 0;
  int R = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string metric;
  double value = 0.0;
};

struct SummaryTable {
  std::vector<SummaryRow> rows;
  std::vector<TrialRecord> records;
};

// Deterministic shortest-ish decimal form used in CSV cells.
std::string format_metric_value(double v);

// CSV: fixed header experiment,m,n,r,R,trials,seed,metric,value over the
// summary rows. JSON: array of the per-trial records. Both byte-stable for
// equal inputs.
void emit(const SummaryTable& table, OutputFormat format, std::ostream& os);

// path "-" writes to stdout. Throws IoError when the file cannot be
// written.
void emit_to_path(const SummaryTable& table, OutputFormat format,
                  const std::string& path);

}  // namespace l1codec

#endif  // L1CODEC_TABLE_HPP_
