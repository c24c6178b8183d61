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

#ifndef GLETS_TRANSFORM_HPP_
#define GLETS_TRANSFORM_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "glets/glet_matrix.hpp"

namespace glets {

enum class Basis : unsigned char { kRotation = 0, kReflection = 1 };

// Projection of a signal onto one G-let.
struct GletCoefficients {
  int index = 0;               // 1..2n
  std::vector<double> values;  // length n
};

// Full projection set of one basis. The rotation basis carries indices
// 1..n-1 (the identity r^n is excluded from the linear sum); the reflection
// basis carries n+2..2n (the base reflection s, index n+1, plays the
// identity role in reconstruction instead). For odd n the leading slot
// coordinate cannot participate in the -I sum identity, so its original
// value rides along explicitly.
struct Decomposition {
  int n = 0;
  Basis basis = Basis::kRotation;
  std::vector<GletCoefficients> coefficients;  // n-1 entries, ascending index
  std::vector<double> slot_passthrough;        // odd n only, else empty
};

// Class-representative subset sufficient for lossless reconstruction.
//
// Rotation basis: one representative per non-identity rotation conjugacy
// class, the member with smaller power (indices 1..floor(n/2); for even n
// index n/2 is the self-conjugate half turn, stored as-is).
//
// Reflection basis (even n only): per reflection class, the smallest-index
// member present in the decomposition as representative plus, when the
// class has at least two members, a difference record anchored at the
// largest-index member holding that member's projection minus the sum of
// the other members of the class.
struct CompressedDecomposition {
  int n = 0;
  Basis basis = Basis::kRotation;
  std::vector<GletCoefficients> representatives;    // ascending index
  std::vector<GletCoefficients> class_differences;  // ascending index; reflection basis only
  std::map<int, int> class_map;  // conjugacy class id -> representative G-let index
  std::vector<double> slot_passthrough;  // odd n only

  std::size_t stored_count() const {
    return representatives.size() + class_differences.size();
  }
  // Fraction of the n-1 projection vectors that need not be stored.
  double ratio() const {
    return 1.0 - static_cast<double>(stored_count()) / (n - 1);
  }
};

// Expected coefficient indices of a full decomposition, ascending.
std::vector<int> decomposition_indices(int n, Basis basis);

// Stored record index layout of a compressed decomposition, ascending.
std::vector<int> compressed_representative_indices(int n, Basis basis);
std::vector<int> compressed_difference_indices(int n, Basis basis);

// Canonical class id -> representative G-let index mapping; fully
// determined by (n, basis), used when deserializing compressed files.
std::map<int, int> compressed_class_map(int n, Basis basis);

// Projects the signal onto every G-let of the chosen basis. The n-1
// projections are independent and may be computed concurrently; the result
// ordering and values do not depend on the schedule.
Decomposition decompose(std::span<const double> sig, Basis basis);

// Linear-sum inverse: sig = -(sum of coefficients) on block coordinates,
// with the base reflection undone for the reflection basis and the slot
// coordinate taken from the pass-through for odd n.
std::vector<double> reconstruct(const Decomposition& d);

// Inverse from a single projection: every G-let is orthogonal, so the
// transpose recovers the signal exactly.
std::vector<double> reconstruct_from_one(const GletCoefficients& c, int n);

// Keeps one stored record set per non-identity conjugacy class; see
// CompressedDecomposition for the layout. Reflection basis requires even n
// (the single odd-n reflection class is recoverable from any one member).
CompressedDecomposition compress(const Decomposition& d);

// Regenerates the omitted conjugate projections: y_(n-k) is the partner
// projection B(r^(n-k)) · (B(r^k)ᵀ · y_k). Reflection-class members are
// regenerated from the class representative and checked against the stored
// difference record.
Decomposition expand(const CompressedDecomposition& c);

}  // namespace glets

#endif  // GLETS_TRANSFORM_HPP_
