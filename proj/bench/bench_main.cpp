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

// Times the serial reference against the OpenMP backend on the two hot
// sweeps and checks that the results agree.

#include <chrono>
#include <cstdio>
#include <sstream>

#include "l1codec/experiments.hpp"
#include "l1codec/geometry.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double run_ms(const std::function<void()>& fn) {
  const auto start = Clock::now();
  fn();
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* kernel, double serial_ms, double omp_ms, bool equal) {
  std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   results %s\n", kernel,
              serial_ms, omp_ms, serial_ms / omp_ms,
              equal ? "identical" : "DIFFER");
}

}  // namespace

int main() {
  using namespace l1codec;

  std::printf("%-28s %13s %13s\n", "kernel", "serial", "openmp");

  {
    const Codec codec = make_codec({24, 12, 2}, {2026, 0});
    FacetSweepResult serial, omp;
    const double t_serial = run_ms([&] {
      serial = facet_intersection_count(codec.complement, 2,
                                        parallel::Backend::Serial);
    });
    const double t_omp = run_ms([&] {
      omp = facet_intersection_count(codec.complement, 2,
                                     parallel::Backend::OpenMp);
    });
    const bool equal = serial.strict == omp.strict &&
                       serial.boundary == omp.boundary &&
                       serial.none == omp.none &&
                       serial.worst_t == omp.worst_t;
    report("facet certificate sweep", t_serial, t_omp, equal);
  }

  {
    ExperimentConfig cfg;
    cfg.experiment = ExperimentKind::Phase;
    cfg.m_list = {48};
    cfg.r_list = {2};
    cfg.R_list = {24};
    cfg.trials = 48;
    cfg.master_seed = 7;
    std::string serial_csv, omp_csv;
    const double t_serial = run_ms([&] {
      cfg.backend = parallel::Backend::Serial;
      std::ostringstream os;
      emit(run_experiment(cfg), OutputFormat::Csv, os);
      serial_csv = os.str();
    });
    const double t_omp = run_ms([&] {
      cfg.backend = parallel::Backend::OpenMp;
      std::ostringstream os;
      emit(run_experiment(cfg), OutputFormat::Csv, os);
      omp_csv = os.str();
    });
    report("decode trial batch", t_serial, t_omp, serial_csv == omp_csv);
  }

  return 0;
}
