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

#include "glets/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "glets/errors.hpp"

namespace glets {

FrequencySplit split(const GletMatrix& m, std::span<const double> sig) {
  if (sig.size() != static_cast<std::size_t>(m.n())) {
    throw DomainError("shape mismatch: expected signal of length " + std::to_string(m.n()));
  }
  FrequencySplit out;
  out.index = m.index();
  out.low.resize(sig.size());
  out.high.resize(sig.size());

  const int slots = m.one_dim_count();
  // A ±1 scale has no oscillation: slots go entirely to low.
  for (int s = 0; s < slots; ++s) {
    out.low[s] = m.slot_sign() * sig[s];
    out.high[s] = 0.0;
  }
  const kernels::Block2& b = m.block();
  const kernels::Block2 diag{b.m00, 0.0, 0.0, b.m11};
  const kernels::Block2 off{0.0, b.m01, b.m10, 0.0};
  const std::size_t pairs = static_cast<std::size_t>(m.two_dim_count());
  kernels::block2_apply(out.low.data() + slots, sig.data() + slots, pairs, diag);
  kernels::block2_apply(out.high.data() + slots, sig.data() + slots, pairs, off);
  return out;
}

MultiscaleNode multiscale(std::span<const double> sig, int depth, Component selector,
                          int glet_index, Basis basis, int max_depth) {
  if (depth < 1) {
    throw DomainError("multiscale depth must be at least 1");
  }
  if (depth > max_depth) {
    throw DomainError("multiscale depth " + std::to_string(depth) +
                      " exceeds maximum " + std::to_string(max_depth));
  }
  const int n = static_cast<int>(sig.size());
  const std::vector<int> indices = decomposition_indices(n, basis);
  if (std::find(indices.begin(), indices.end(), glet_index) == indices.end()) {
    throw DomainError("glet index " + std::to_string(glet_index) +
                      " is not part of the chosen basis");
  }

  MultiscaleNode root;
  root.selector = selector;
  MultiscaleNode* node = &root;
  std::vector<double> current(sig.begin(), sig.end());
  for (int level = 0;; ++level) {
    node->depth = level;
    node->splits.reserve(indices.size());
    for (int index : indices) {
      node->splits.push_back(split(build_glet(n, index), current));
    }
    if (level + 1 >= depth) break;

    const std::size_t pos =
        static_cast<std::size_t>(std::find(indices.begin(), indices.end(), glet_index) -
                                 indices.begin());
    const FrequencySplit& chosen = node->splits[pos];
    current = selector == Component::kLow ? chosen.low : chosen.high;

    auto child = std::make_unique<MultiscaleNode>();
    child->selector = selector;
    child->index_path = node->index_path;
    child->index_path.push_back(glet_index);
    node->child = std::move(child);
    node = node->child.get();
  }
  return root;
}

std::vector<std::pair<int, double>> amplitude_map(const GletCoefficients& c,
                                                  double quantile) {
  if (c.values.empty()) {
    throw DomainError("amplitude_map requires non-empty coefficients");
  }
  if (!(quantile > 0.0 && quantile < 1.0)) {
    throw DomainError("quantile must lie in (0, 1)");
  }
  std::vector<double> positives;
  for (double v : c.values) {
    if (v > 0.0) positives.push_back(v);
  }
  std::vector<std::pair<int, double>> out;
  if (positives.empty()) return out;

  std::sort(positives.begin(), positives.end());
  // Rank ceil(q*count) keeps at most (1-q)*count entries; clamping to the
  // last rank guarantees the maximum always survives.
  std::size_t rank = static_cast<std::size_t>(
      std::ceil(quantile * static_cast<double>(positives.size())));
  rank = std::min(rank, positives.size() - 1);
  const double threshold = positives[rank];

  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (c.values[i] > 0.0 && c.values[i] >= threshold) {
      out.emplace_back(static_cast<int>(i), c.values[i]);
    }
  }
  return out;
}

}  // namespace glets
