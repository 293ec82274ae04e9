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

#include "l1codec/table.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>

#include <json.hpp>

#include "l1codec/errors.hpp"

namespace l1codec {

std::string format_metric_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

nlohmann::json record_to_json(const TrialRecord& rec) {
  nlohmann::json j;
  j["experiment"] = rec.experiment;
  j["m"] = rec.m;
  j["n"] = rec.n;
  j["r"] = rec.r;
  j["R"] = rec.R;
  j["trial_index"] = rec.trial_index;
  j["master_seed"] = rec.master_seed;
  j["stream"] = rec.stream;
  j["success"] = rec.success;
  j["error_l1"] = rec.error_l1;
  j["error_l2"] = rec.error_l2;
  if (std::isfinite(rec.t_worst)) {
    j["t_worst"] = rec.t_worst;
  } else {
    j["t_worst"] = nullptr;
  }
  j["facet_count"] = rec.facet_count;
  if (rec.failed) j["error"] = rec.error;
  return j;
}

}  // namespace

void emit(const SummaryTable& table, OutputFormat format, std::ostream& os) {
  if (format == OutputFormat::Csv) {
    os << "experiment,m,n,r,R,trials,seed,metric,value\n";
    for (const SummaryRow& row : table.rows) {
      os << row.experiment << ',' << row.m << ',' << row.n << ',' << row.r
         << ',' << row.R << ',' << row.trials << ',' << row.seed << ','
         << row.metric << ',' << format_metric_value(row.value) << '\n';
    }
    return;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const TrialRecord& rec : table.records) arr.push_back(record_to_json(rec));
  os << arr.dump(2) << '\n';
}

void emit_to_path(const SummaryTable& table, OutputFormat format,
                  const std::string& path) {
  if (path == "-" || path.empty()) {
    emit(table, format, std::cout);
    std::cout.flush();
    if (!std::cout) throw IoError("emit: stdout write failed");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("emit: cannot open " + path);
  emit(table, format, file);
  file.flush();
  if (!file) throw IoError("emit: write failed for " + path);
}

}  // namespace l1codec
