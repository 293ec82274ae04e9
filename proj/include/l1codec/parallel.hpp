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

#ifndef L1CODEC_PARALLEL_HPP_
#define L1CODEC_PARALLEL_HPP_

#include <cstdint>
#include <functional>

namespace l1codec::parallel {

enum class Backend { Serial, OpenMp };

// Worker count used by the OpenMp backend: the L1CODEC_THREADS environment
// variable when set, otherwise the OpenMP default.
int worker_count();

// Runs fn(i) for every i in [0, count). Work items must be independent and
// write only to their own output slot; results are then identical for both
// backends and for any worker count. The first exception thrown by an item
// is rethrown after the loop completes.
void for_each_index(std::int64_t count, Backend backend,
                    const std::function<void(std::int64_t)>& fn);

}  // namespace l1codec::parallel

#endif  // L1CODEC_PARALLEL_HPP_
