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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "l1codec/errors.hpp"
#include "l1codec/experiments.hpp"

namespace {

// Accepts "8", "1,2,5", or "10:90:10" (inclusive stop when aligned).
std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.find(':') != std::string::npos) {
    int start = 0, stop = 0, step = 1;
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    start = std::stoi(text.substr(0, first));
    if (second == std::string::npos) {
      stop = std::stoi(text.substr(first + 1));
    } else {
      stop = std::stoi(text.substr(first + 1, second - first - 1));
      step = std::stoi(text.substr(second + 1));
    }
    if (step <= 0) throw l1codec::ConfigError("range step must be positive");
    for (int v = start; v <= stop; v += step) out.push_back(v);
    return out;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto comma = text.find(',', pos);
    const std::string item =
        text.substr(pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos);
    if (!item.empty()) out.push_back(std::stoi(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct CliOptions {
  std::string m, r, R;
  int n = -1;
  int trials = 100;
  std::uint64_t seed = 0;
  std::string out = "-";
  std::string format = "csv";
  double p = 0.5;
  int alphabet = 8;
  int proj_d = 100;
  int proj_k = 25;
};

void add_common_options(CLI::App* cmd, CliOptions* opts) {
  cmd->add_option("--m", opts->m, "codeword/signal lengths (value, list, or start:stop:step)");
  cmd->add_option("--r", opts->r, "corruption/sparsity sizes");
  cmd->add_option("--R", opts->R, "redundancy/measurement counts");
  cmd->add_option("--n", opts->n, "message length (codec-roundtrip: fixes R = m - n)");
  cmd->add_option("--trials", opts->trials, "trials per grid cell");
  cmd->add_option("--seed", opts->seed, "master seed");
  cmd->add_option("--out", opts->out, "output path, '-' for stdout");
  cmd->add_option("--format", opts->format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--p", opts->p, "compressible decay exponent in (0, 1]");
  cmd->add_option("--alphabet", opts->alphabet, "codec-roundtrip input alphabet size");
  cmd->add_option("--d", opts->proj_d, "geometry-checks projection ambient dimension");
  cmd->add_option("--k", opts->proj_k, "geometry-checks projection subspace dimension");
}

l1codec::ExperimentConfig build_config(l1codec::ExperimentKind kind,
                                       const CliOptions& opts) {
  l1codec::ExperimentConfig cfg;
  cfg.experiment = kind;
  if (!opts.m.empty()) cfg.m_list = parse_int_list(opts.m);
  if (!opts.r.empty()) cfg.r_list = parse_int_list(opts.r);
  if (!opts.R.empty()) cfg.R_list = parse_int_list(opts.R);
  cfg.trials = opts.trials;
  cfg.master_seed = opts.seed;
  cfg.output_path = opts.out;
  cfg.format = opts.format == "json" ? l1codec::OutputFormat::Json
                                     : l1codec::OutputFormat::Csv;
  cfg.signal_decay = opts.p;
  cfg.alphabet = opts.alphabet;
  cfg.proj_dim = opts.proj_d;
  cfg.proj_sub = opts.proj_k;

  // codec-roundtrip accepts --n as the message length; other experiments
  // derive n = m - R per cell and ignore --n.
  if (kind == l1codec::ExperimentKind::CodecRoundtrip && opts.n > 0) {
    if (!cfg.R_list.empty()) {
      throw l1codec::ConfigError("give either --n or --R, not both");
    }
    for (int m : cfg.m_list) {
      const int R = m - opts.n;
      if (R < 1) throw l1codec::ConfigError("--n must be below every m");
      cfg.R_list.push_back(R);
    }
    // One R per m would misalign the grid; require a single m instead.
    if (cfg.m_list.size() != 1) {
      throw l1codec::ConfigError("--n requires a single --m value");
    }
  }
  if (kind == l1codec::ExperimentKind::GeometryChecks && cfg.r_list.empty()) {
    cfg.r_list = {1};
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"error correction over the reals and sparse recovery by l1 minimization"};
  app.require_subcommand(1);

  const auto describe = [](l1codec::ExperimentKind kind) -> const char* {
    switch (kind) {
      case l1codec::ExperimentKind::Phase:
        return "decode success rates over an (m, r, R) grid";
      case l1codec::ExperimentKind::Facets:
        return "cube-facet counts of random subspace sections";
      case l1codec::ExperimentKind::Necessity:
        return "uniform certification rates at small redundancy";
      case l1codec::ExperimentKind::Compressible:
        return "approximate recovery of power-decay signals";
      case l1codec::ExperimentKind::CodecRoundtrip:
        return "quantized finite-alphabet encode/corrupt/decode";
      case l1codec::ExperimentKind::GeometryChecks:
        return "numerical checks of the projection identities";
    }
    return "";
  };

  CliOptions opts;
  std::vector<std::pair<CLI::App*, l1codec::ExperimentKind>> commands;
  for (const auto kind :
       {l1codec::ExperimentKind::Phase, l1codec::ExperimentKind::Facets,
        l1codec::ExperimentKind::Necessity, l1codec::ExperimentKind::Compressible,
        l1codec::ExperimentKind::CodecRoundtrip,
        l1codec::ExperimentKind::GeometryChecks}) {
    CLI::App* cmd =
        app.add_subcommand(l1codec::experiment_name(kind), describe(kind));
    add_common_options(cmd, &opts);
    commands.emplace_back(cmd, kind);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (const auto& [cmd, kind] : commands) {
      if (!cmd->parsed()) continue;
      const l1codec::ExperimentConfig cfg = build_config(kind, opts);
      cfg.validate();
      const l1codec::SummaryTable table = l1codec::run_experiment(cfg);
      l1codec::emit_to_path(table, cfg.format, cfg.output_path);
      return 0;
    }
    std::cerr << "no experiment selected\n";
    return 2;
  } catch (const l1codec::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 3;
  } catch (const l1codec::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
