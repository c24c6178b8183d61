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

#ifndef GLETS_GLET_MATRIX_HPP_
#define GLETS_GLET_MATRIX_HPP_

#include <span>
#include <vector>

#include "glets/dihedral.hpp"
#include "glets/kernels.hpp"

namespace glets {

// cos/sin pair of the angle 2*pi*k/n.
struct UnitAngle {
  double c, s;
};

// Evaluates cos/sin of 2*pi*k/n by exact quadrant reduction on the integer
// fraction k/n. Quarter turns yield exact 0/±1, and the pair (k, n-k)
// yields bitwise-equal cosines and exactly opposite sines, so transposes
// and conjugate elements match without rounding slack.
UnitAngle unit_angle(long long k, long long n);

// One G-let: an orthogonal n x n block-diagonal matrix realizing a single
// dihedral group element. Coordinates 0..one_dim_count-1 carry a ±1 slot
// value; the remaining coordinates are covered by consecutive (c, c+1)
// pairs, each transformed by the same 2x2 block. Storage is O(1): one block
// plus the slot sign. Immutable; apply/apply_transpose are pure and safe to
// call concurrently.
class GletMatrix {
 public:
  int index() const { return index_; }  // 1..2n; 1..n rotations, n+1..2n reflections
  int n() const { return n_; }
  ElementKind kind() const {
    return index_ <= n_ ? ElementKind::kRotation : ElementKind::kReflection;
  }
  // The group element this matrix realizes: r^i for index i <= n (r^n = id),
  // s·r^(i-1) for index n+i.
  GroupElement element() const;

  int one_dim_count() const { return one_dim_; }
  int two_dim_count() const { return (n_ - one_dim_) / 2; }
  double slot_sign() const { return slot_sign_; }
  const kernels::Block2& block() const { return block_; }
  std::vector<double> slot_values() const {
    return std::vector<double>(static_cast<std::size_t>(one_dim_), slot_sign_);
  }

  // y = M·x, blockwise in O(n). Throws DomainError on length mismatch.
  void apply(std::span<const double> x, std::span<double> y) const;
  std::vector<double> apply(std::span<const double> x) const;

  // y = Mᵀ·x; the inverse, since M is orthogonal.
  void apply_transpose(std::span<const double> x, std::span<double> y) const;
  std::vector<double> apply_transpose(std::span<const double> x) const;

 private:
  friend GletMatrix build_rotation(int n, int i);
  friend GletMatrix build_reflection(int n, int i);
  GletMatrix(int n, int index, double slot_sign, const kernels::Block2& block);

  int n_;
  int index_;
  int one_dim_;
  double slot_sign_;
  kernels::Block2 block_;
};

// G-let of the rotation r^i, 1 <= i <= n. Every block is the plane rotation
// by i*theta; slots carry (-1)^i for even n and +1 for odd n. Index i.
GletMatrix build_rotation(int n, int i);

// G-let of the reflection s·r^(i-1), 1 <= i <= n, with the fixed axis
// s = [[1,0],[0,-1]]. Slots carry (-1)^(i-1) for even n, +1 for odd n.
// Index n+i.
GletMatrix build_reflection(int n, int i);

// Convenience dispatcher over the full index range 1..2n.
GletMatrix build_glet(int n, int index);

}  // namespace glets

#endif  // GLETS_GLET_MATRIX_HPP_
