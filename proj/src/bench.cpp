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

#include "glets/bench.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <span>
#include <random>
#include <vector>

#include "glets/transform.hpp"

namespace glets::bench {

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

volatile double g_sink;  // keeps the timed loops from being optimized away

// Every size streams its applies across the same total footprint, well
// beyond L1, so cache residency does not favor small n and the measured
// ratio reflects per-element work rather than the memory hierarchy.
constexpr std::size_t kStreamDoubles = 1u << 20;  // 8 MiB src + 8 MiB dst

// Per-size measurement state. Repetitions are interleaved across sizes so
// transient system load skews every size alike instead of biasing one.
struct SizeState {
  explicit SizeState(int n)
      : n(n),
        matrix(build_rotation(n, n / 3 + 1)),
        sig(static_cast<std::size_t>(n)),
        src(kStreamDoubles),
        dst(kStreamDoubles),
        windows(kStreamDoubles / static_cast<std::size_t>(n)),
        apply_batch(std::max(1, static_cast<int>(8'000'000 / std::max(1, n)))),
        decompose_batch(std::max(
            1, static_cast<int>(8'000'000 / (static_cast<long long>(n) * n)))) {
    std::mt19937_64 rng(0x9e3779b9u ^ static_cast<unsigned>(n));
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (double& v : src) v = dist(rng);
    for (std::size_t i = 0; i < sig.size(); ++i) sig[i] = src[i];
  }

  double time_apply() {
    const std::span<const double> in(src);
    const std::span<double> out(dst);
    const std::size_t len = static_cast<std::size_t>(n);
    const auto t0 = Clock::now();
    for (int it = 0; it < apply_batch; ++it) {
      const std::size_t offset = (static_cast<std::size_t>(it) % windows) * len;
      matrix.apply(in.subspan(offset, len), out.subspan(offset, len));
    }
    const auto t1 = Clock::now();
    g_sink = dst[0];
    return std::chrono::duration<double, std::nano>(t1 - t0).count() / apply_batch;
  }

  double time_decompose() {
    const auto t0 = Clock::now();
    for (int it = 0; it < decompose_batch; ++it) {
      const Decomposition d = decompose(sig, Basis::kRotation);
      g_sink = d.coefficients.front().values[0];
    }
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::nano>(t1 - t0).count() / decompose_batch;
  }

  int n;
  GletMatrix matrix;
  std::vector<double> sig;
  std::vector<double> src;
  std::vector<double> dst;
  std::size_t windows;
  int apply_batch;
  int decompose_batch;
  std::vector<double> apply_samples;
  std::vector<double> decompose_samples;
};

}  // namespace

std::vector<SizeTiming> measure_all(std::span<const int> sizes, int reps) {
  std::vector<std::unique_ptr<SizeState>> states;
  states.reserve(sizes.size());
  for (int n : sizes) states.push_back(std::make_unique<SizeState>(n));

  // Warmup: touch pages and settle the clock before sampling.
  for (auto& s : states) {
    s->time_apply();
    s->time_decompose();
  }
  for (int rep = 0; rep < reps; ++rep) {
    for (auto& s : states) s->apply_samples.push_back(s->time_apply());
    for (auto& s : states) s->decompose_samples.push_back(s->time_decompose());
  }

  std::vector<SizeTiming> out;
  out.reserve(states.size());
  for (auto& s : states) {
    out.push_back({s->n, median(s->apply_samples), median(s->decompose_samples)});
  }
  return out;
}

SizeTiming measure(int n, int reps) {
  const int sizes[] = {n};
  return measure_all(sizes, reps).front();
}

}  // namespace glets::bench
