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

#include "glets/transform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "glets/errors.hpp"
#include "parallel.hpp"

namespace glets {

namespace {

void check_dimension(int n) {
  if (n < 3) {
    throw DomainError("invalid dimension n=" + std::to_string(n) + " (n >= 3 required)");
  }
}

// Reflection conjugacy classes restricted to the decomposition (the base
// reflection s·r^0 is not part of it): even powers {2, 4, .., n-2} and odd
// powers {1, 3, .., n-1}, as G-let indices n+1+power.
std::vector<std::vector<int>> reflection_class_indices(int n) {
  std::vector<int> even_class, odd_class;
  for (int k = 2; k < n; k += 2) even_class.push_back(n + 1 + k);
  for (int k = 1; k < n; k += 2) odd_class.push_back(n + 1 + k);
  return {even_class, odd_class};
}

void validate_full(const Decomposition& d) {
  check_dimension(d.n);
  const std::vector<int> expected = decomposition_indices(d.n, d.basis);
  if (d.coefficients.size() != expected.size()) {
    throw Error("incomplete decomposition: have " + std::to_string(d.coefficients.size()) +
                " coefficient vectors, expected " + std::to_string(expected.size()));
  }
  for (std::size_t j = 0; j < expected.size(); ++j) {
    if (d.coefficients[j].index != expected[j]) {
      throw Error("incomplete decomposition: missing coefficient index " +
                  std::to_string(expected[j]));
    }
    if (d.coefficients[j].values.size() != static_cast<std::size_t>(d.n)) {
      throw Error("incomplete decomposition: coefficient " + std::to_string(expected[j]) +
                  " has wrong length");
    }
  }
  const std::size_t slots_needed = d.n % 2 == 1 ? 1 : 0;
  if (d.slot_passthrough.size() != slots_needed) {
    throw Error("incomplete decomposition: slot pass-through missing");
  }
}

}  // namespace

std::vector<int> decomposition_indices(int n, Basis basis) {
  check_dimension(n);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) - 1);
  if (basis == Basis::kRotation) {
    for (int i = 1; i < n; ++i) out.push_back(i);
  } else {
    for (int i = n + 2; i <= 2 * n; ++i) out.push_back(i);
  }
  return out;
}

std::vector<int> compressed_representative_indices(int n, Basis basis) {
  check_dimension(n);
  std::vector<int> out;
  if (basis == Basis::kRotation) {
    for (int k = 1; 2 * k <= n; ++k) out.push_back(k);
    return out;
  }
  if (n % 2 == 1) {
    throw DomainError("reflection-basis compression requires even n");
  }
  for (const auto& cls : reflection_class_indices(n)) {
    if (!cls.empty()) out.push_back(cls.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> compressed_difference_indices(int n, Basis basis) {
  check_dimension(n);
  std::vector<int> out;
  if (basis == Basis::kRotation) return out;
  if (n % 2 == 1) {
    throw DomainError("reflection-basis compression requires even n");
  }
  for (const auto& cls : reflection_class_indices(n)) {
    if (cls.size() >= 2) out.push_back(cls.back());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, int> compressed_class_map(int n, Basis basis) {
  check_dimension(n);
  std::map<int, int> out;
  if (basis == Basis::kRotation) {
    for (int k = 1; 2 * k <= n; ++k) out[k] = k;
    return out;
  }
  if (n % 2 == 1) {
    throw DomainError("reflection-basis compression requires even n");
  }
  const auto classes = reflection_class_indices(n);
  const int first_reflection_class_id = n / 2 + 1;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    if (!classes[ci].empty()) {
      out[first_reflection_class_id + static_cast<int>(ci)] = classes[ci].front();
    }
  }
  return out;
}

Decomposition decompose(std::span<const double> sig, Basis basis) {
  const int n = static_cast<int>(sig.size());
  check_dimension(n);

  Decomposition d;
  d.n = n;
  d.basis = basis;
  const std::vector<int> indices = decomposition_indices(n, basis);
  d.coefficients.resize(indices.size());
  detail::parallel_for(0, indices.size(), [&](std::size_t j) {
    const GletMatrix m = build_glet(n, indices[j]);
    d.coefficients[j] = {indices[j], m.apply(sig)};
  });
  if (n % 2 == 1) d.slot_passthrough = {sig[0]};
  return d;
}

std::vector<double> reconstruct(const Decomposition& d) {
  validate_full(d);
  const int n = d.n;

  std::vector<double> acc(static_cast<std::size_t>(n), 0.0);
  for (const GletCoefficients& c : d.coefficients) {
    kernels::vec_add(acc.data(), c.values.data(), acc.size());
  }
  // Rotation G-lets 1..n-1 sum to -I (on all coordinates for even n); the
  // reflection set sums to -B(s), so undoing s flips the sign back on the
  // second coordinate of every block pair.
  std::vector<double> out(acc.size());
  kernels::vec_scale(out.data(), acc.data(), acc.size(), -1.0);
  const int one_dim = n % 2 == 1 ? 1 : 2;
  if (d.basis == Basis::kReflection) {
    for (int c = one_dim + 1; c < n; c += 2) out[c] = acc[c];
  }
  if (n % 2 == 1) out[0] = d.slot_passthrough[0];
  return out;
}

std::vector<double> reconstruct_from_one(const GletCoefficients& c, int n) {
  check_dimension(n);
  if (c.index < 1 || c.index > 2 * n) {
    throw DomainError("glet index " + std::to_string(c.index) + " out of range [1, " +
                      std::to_string(2 * n) + "]");
  }
  if (c.values.size() != static_cast<std::size_t>(n)) {
    throw DomainError("coefficient length does not match n=" + std::to_string(n));
  }
  return build_glet(n, c.index).apply_transpose(c.values);
}

CompressedDecomposition compress(const Decomposition& d) {
  validate_full(d);
  const int n = d.n;

  CompressedDecomposition out;
  out.n = n;
  out.basis = d.basis;
  out.slot_passthrough = d.slot_passthrough;

  if (d.basis == Basis::kRotation) {
    // Pair classes {r^k, r^(n-k)} keep the smaller power; class ids follow
    // the canonical enumeration (identity is 0, pair class with minimal
    // power k is id k, the even-n half turn is id n/2).
    for (int k = 1; 2 * k <= n; ++k) {
      out.representatives.push_back(d.coefficients[k - 1]);
      out.class_map[k] = k;
    }
    return out;
  }

  if (n % 2 == 1) {
    throw DomainError("reflection-basis compression requires even n");
  }
  const auto classes = reflection_class_indices(n);
  const int first_reflection_class_id = n / 2 + 1;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    const std::vector<int>& cls = classes[ci];
    auto coeff_at = [&](int index) -> const GletCoefficients& {
      return d.coefficients[static_cast<std::size_t>(index - (n + 2))];
    };
    out.representatives.push_back(coeff_at(cls.front()));
    out.class_map[first_reflection_class_id + static_cast<int>(ci)] = cls.front();
    if (cls.size() >= 2) {
      // Difference record: the last member minus the sum of the others.
      GletCoefficients diff{cls.back(), coeff_at(cls.back()).values};
      for (std::size_t j = 0; j + 1 < cls.size(); ++j) {
        const std::vector<double>& v = coeff_at(cls[j]).values;
        for (std::size_t t = 0; t < v.size(); ++t) diff.values[t] -= v[t];
      }
      out.class_differences.push_back(std::move(diff));
    }
  }
  std::sort(out.representatives.begin(), out.representatives.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  std::sort(out.class_differences.begin(), out.class_differences.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });
  return out;
}

Decomposition expand(const CompressedDecomposition& c) {
  check_dimension(c.n);
  const int n = c.n;

  const std::vector<int> rep_indices = compressed_representative_indices(n, c.basis);
  const std::vector<int> diff_indices = compressed_difference_indices(n, c.basis);
  auto index_of = [](const GletCoefficients& g) { return g.index; };
  if (c.representatives.size() != rep_indices.size() ||
      !std::equal(rep_indices.begin(), rep_indices.end(), c.representatives.begin(),
                  [&](int idx, const GletCoefficients& g) { return idx == index_of(g); })) {
    throw Error("corrupt class map: representative index set does not match n=" +
                std::to_string(n));
  }
  if (c.class_differences.size() != diff_indices.size() ||
      !std::equal(diff_indices.begin(), diff_indices.end(), c.class_differences.begin(),
                  [&](int idx, const GletCoefficients& g) { return idx == index_of(g); })) {
    throw Error("corrupt class map: difference index set does not match n=" +
                std::to_string(n));
  }
  for (const GletCoefficients& g : c.representatives) {
    if (g.values.size() != static_cast<std::size_t>(n)) {
      throw Error("corrupt class map: representative " + std::to_string(g.index) +
                  " has wrong length");
    }
  }

  Decomposition out;
  out.n = n;
  out.basis = c.basis;
  out.slot_passthrough = c.slot_passthrough;
  const std::size_t slots_needed = n % 2 == 1 ? 1 : 0;
  if (out.slot_passthrough.size() != slots_needed) {
    throw Error("corrupt class map: slot pass-through missing");
  }

  if (c.basis == Basis::kRotation) {
    out.coefficients.resize(static_cast<std::size_t>(n) - 1);
    for (std::size_t j = 0; j < c.representatives.size(); ++j) {
      out.coefficients[c.representatives[j].index - 1] = c.representatives[j];
    }
    // Regenerate the conjugate partners: y_(n-k) = B(r^(n-k)) · B(r^k)ᵀ · y_k.
    for (int k = 1; 2 * k < n; ++k) {
      const int partner = n - k;
      const GletCoefficients& stored = out.coefficients[k - 1];
      const std::vector<double> sig = build_rotation(n, k).apply_transpose(stored.values);
      out.coefficients[partner - 1] = {partner, build_rotation(n, partner).apply(sig)};
    }
    return out;
  }

  const auto classes = reflection_class_indices(n);
  out.coefficients.resize(static_cast<std::size_t>(n) - 1);
  auto slot_of = [&](int index) { return static_cast<std::size_t>(index - (n + 2)); };
  for (const std::vector<int>& cls : classes) {
    const GletCoefficients* rep = nullptr;
    for (const GletCoefficients& g : c.representatives) {
      if (g.index == cls.front()) rep = &g;
    }
    const std::vector<double> sig = build_glet(n, rep->index).apply_transpose(rep->values);
    for (int index : cls) {
      if (index == rep->index) {
        out.coefficients[slot_of(index)] = *rep;
      } else {
        out.coefficients[slot_of(index)] = {index, build_glet(n, index).apply(sig)};
      }
    }
    if (cls.size() >= 2) {
      // Cross-check the stored class-sum difference against the
      // regenerated members.
      const GletCoefficients* stored_diff = nullptr;
      for (const GletCoefficients& g : c.class_differences) {
        if (g.index == cls.back()) stored_diff = &g;
      }
      if (stored_diff == nullptr ||
          stored_diff->values.size() != static_cast<std::size_t>(n)) {
        throw Error("corrupt class map: difference record for index " +
                    std::to_string(cls.back()) + " missing");
      }
      std::vector<double> diff = out.coefficients[slot_of(cls.back())].values;
      double scale = 1.0;
      for (std::size_t j = 0; j + 1 < cls.size(); ++j) {
        const std::vector<double>& v = out.coefficients[slot_of(cls[j])].values;
        for (std::size_t t = 0; t < v.size(); ++t) {
          diff[t] -= v[t];
          scale = std::max(scale, std::abs(v[t]));
        }
      }
      for (std::size_t t = 0; t < diff.size(); ++t) {
        if (std::abs(diff[t] - stored_diff->values[t]) > 1e-9 * scale) {
          throw Error("corrupt class map: difference record for index " +
                      std::to_string(cls.back()) + " is inconsistent");
        }
      }
    }
  }
  return out;
}

}  // namespace glets
