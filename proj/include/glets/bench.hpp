// Copyright 2026 The Glets Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GLETS_BENCH_HPP_
#define GLETS_BENCH_HPP_

#include <span>
#include <vector>

namespace glets::bench {

// Median timings over `reps` repetitions. Each repetition batches enough
// work to dominate clock granularity, and repetitions are interleaved
// across sizes so load transients do not bias one size. A single G-let
// application is linear in n; a full decomposition produces n-1
// projections and is quadratic.
struct SizeTiming {
  int n = 0;
  double apply_ns = 0.0;      // one G-let application
  double decompose_ns = 0.0;  // full rotation-basis decomposition
};

std::vector<SizeTiming> measure_all(std::span<const int> sizes, int reps = 11);
SizeTiming measure(int n, int reps = 11);

}  // namespace glets::bench

#endif  // GLETS_BENCH_HPP_
