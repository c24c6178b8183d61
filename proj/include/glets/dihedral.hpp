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

#ifndef GLETS_DIHEDRAL_HPP_
#define GLETS_DIHEDRAL_HPP_

#include <utility>
#include <vector>

// The dihedral group D_n: n rotations r^0..r^{n-1} and n reflections
// s·r^0..s·r^{n-1}, with s² = id, (s·r)² = id, rⁿ = id. All types are
// immutable after construction and all operations are pure.

namespace glets {

enum class ElementKind { kRotation, kReflection };

// One group element. power is always reduced modulo n; the identity is
// (kRotation, 0).
struct GroupElement {
  ElementKind kind;
  int power;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  // Canonical order: rotations before reflections, then ascending power.
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.kind != b.kind) return a.kind == ElementKind::kRotation;
    return a.power < b.power;
  }
};

struct ConjugacyClass {
  std::vector<GroupElement> members;  // canonical order

  const GroupElement& representative() const { return members.front(); }
  std::size_t size() const { return members.size(); }
};

class DihedralGroup {
 public:
  // Throws DomainError for n < 3 (degenerate: no 2-dim irreps).
  explicit DihedralGroup(int n);

  int n() const { return n_; }
  int order() const { return 2 * n_; }
  double theta() const;  // 2*pi/n, always derived from n

  GroupElement identity() const { return {ElementKind::kRotation, 0}; }
  GroupElement rotation(int k) const;    // r^k, any k (reduced mod n)
  GroupElement reflection(int k) const;  // s·r^k, any k (reduced mod n)
  std::vector<GroupElement> elements() const;  // all 2n, canonical order

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  // p · m · p⁻¹
  GroupElement conjugate(const GroupElement& p, const GroupElement& m) const;

 private:
  int reduce(int k) const;
  int n_;
};

// Number of conjugacy classes of D_n: (n+3)/2 for odd n, (n+6)/2 for even n.
int class_count(int n);

// Count of 1-dim slots and 2x2 blocks used to fill an n-dimensional
// representation matrix: {1, (n-1)/2} for odd n, {2, (n-2)/2} for even n.
// Returned as (one_dim_count, two_dim_count).
std::pair<int, int> irrep_inventory(int n);

// All conjugacy classes in canonical order: identity class first, rotation
// classes by ascending minimal power, then reflection classes by ascending
// minimal power. For even n the reflections split into the even-power and
// odd-power classes; for odd n they form a single class.
std::vector<ConjugacyClass> enumerate_classes(const DihedralGroup& g);

// True iff some p in the group satisfies p·a·p⁻¹ = b.
bool are_conjugate(const DihedralGroup& g, const GroupElement& a, const GroupElement& b);

}  // namespace glets

#endif  // GLETS_DIHEDRAL_HPP_
