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

#ifndef GLETS_FREQUENCY_HPP_
#define GLETS_FREQUENCY_HPP_

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "glets/transform.hpp"

namespace glets {

// Additive split of one projection: low = D·sig with D the diagonal part
// of the G-let (slot values and the cosine block diagonal), high = F·sig
// with F the off-diagonal sine part that swaps adjacent samples. D + F is
// the G-let matrix entry for entry, so low + high equals the projection
// exactly, not just within tolerance.
struct FrequencySplit {
  int index = 0;
  std::vector<double> low;
  std::vector<double> high;
};

FrequencySplit split(const GletMatrix& m, std::span<const double> sig);

enum class Component : unsigned char { kLow = 0, kHigh = 1 };

// One level of recursive multiscale analysis: the n-1 frequency splits of
// this level's signal, plus the provenance of how the signal was selected
// from the parent level.
struct MultiscaleNode {
  int depth = 0;                // 0 = root
  Component selector = Component::kLow;
  std::vector<int> index_path;  // chosen G-let indices from the root down
  std::vector<FrequencySplit> splits;
  std::unique_ptr<MultiscaleNode> child;
};

inline constexpr int kDefaultMaxDepth = 8;

// Decomposes sig, splits every projection, then re-decomposes the selected
// component of the chosen G-let at the next level, depth levels in total.
// Throws DomainError if depth < 1 or depth > max_depth.
MultiscaleNode multiscale(std::span<const double> sig, int depth, Component selector,
                          int glet_index, Basis basis = Basis::kRotation,
                          int max_depth = kDefaultMaxDepth);

// Positions (ascending) and values of the high positive amplitudes of one
// projection: entries whose value is at least the given quantile of the
// positive values. Raising the quantile never grows the set; the maximum
// positive value is always retained; all-non-positive input yields an
// empty map. quantile must lie in (0, 1).
std::vector<std::pair<int, double>> amplitude_map(const GletCoefficients& c,
                                                  double quantile = 0.9);

}  // namespace glets

#endif  // GLETS_FREQUENCY_HPP_
