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

#include "glets/dihedral.hpp"

#include <numbers>
#include <string>

#include "glets/errors.hpp"

namespace glets {

namespace {

void check_dimension(int n) {
  if (n < 3) {
    throw DomainError("invalid dimension n=" + std::to_string(n) + " (n >= 3 required)");
  }
}

}  // namespace

DihedralGroup::DihedralGroup(int n) : n_(n) { check_dimension(n); }

double DihedralGroup::theta() const { return 2.0 * std::numbers::pi / n_; }

int DihedralGroup::reduce(int k) const {
  int m = k % n_;
  return m < 0 ? m + n_ : m;
}

GroupElement DihedralGroup::rotation(int k) const {
  return {ElementKind::kRotation, reduce(k)};
}

GroupElement DihedralGroup::reflection(int k) const {
  return {ElementKind::kReflection, reduce(k)};
}

std::vector<GroupElement> DihedralGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(2 * n_);
  for (int k = 0; k < n_; ++k) out.push_back(rotation(k));
  for (int k = 0; k < n_; ++k) out.push_back(reflection(k));
  return out;
}

// Multiplication table of D_n with reflections written s·r^k:
//   r^a · r^b     = r^(a+b)       r^a · s·r^b   = s·r^(b-a)
//   s·r^a · r^b   = s·r^(a+b)     s·r^a · s·r^b = r^(b-a)
GroupElement DihedralGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  const bool a_rot = a.kind == ElementKind::kRotation;
  const bool b_rot = b.kind == ElementKind::kRotation;
  if (a_rot && b_rot) return rotation(a.power + b.power);
  if (a_rot && !b_rot) return reflection(b.power - a.power);
  if (!a_rot && b_rot) return reflection(a.power + b.power);
  return rotation(b.power - a.power);
}

GroupElement DihedralGroup::inverse(const GroupElement& a) const {
  if (a.kind == ElementKind::kRotation) return rotation(-a.power);
  return a;  // reflections are involutions
}

GroupElement DihedralGroup::conjugate(const GroupElement& p, const GroupElement& m) const {
  return multiply(multiply(p, m), inverse(p));
}

int class_count(int n) {
  check_dimension(n);
  return (n % 2 == 1) ? (n + 3) / 2 : (n + 6) / 2;
}

std::pair<int, int> irrep_inventory(int n) {
  check_dimension(n);
  const int two_dim = (n % 2 == 1) ? (n - 1) / 2 : (n - 2) / 2;
  return {n - 2 * two_dim, two_dim};
}

std::vector<ConjugacyClass> enumerate_classes(const DihedralGroup& g) {
  const int n = g.n();
  std::vector<ConjugacyClass> classes;
  classes.reserve(static_cast<std::size_t>(class_count(n)));

  classes.push_back({{g.identity()}});
  // Rotation pair classes {r^k, r^(n-k)}; for even n the half turn r^(n/2)
  // is self-conjugate and forms a singleton.
  for (int k = 1; 2 * k < n; ++k) {
    classes.push_back({{g.rotation(k), g.rotation(n - k)}});
  }
  if (n % 2 == 0) {
    classes.push_back({{g.rotation(n / 2)}});
  }

  if (n % 2 == 1) {
    ConjugacyClass all_reflections;
    for (int k = 0; k < n; ++k) all_reflections.members.push_back(g.reflection(k));
    classes.push_back(std::move(all_reflections));
  } else {
    ConjugacyClass even_class, odd_class;
    for (int k = 0; k < n; k += 2) even_class.members.push_back(g.reflection(k));
    for (int k = 1; k < n; k += 2) odd_class.members.push_back(g.reflection(k));
    classes.push_back(std::move(even_class));
    classes.push_back(std::move(odd_class));
  }
  return classes;
}

bool are_conjugate(const DihedralGroup& g, const GroupElement& a, const GroupElement& b) {
  for (const GroupElement& p : g.elements()) {
    if (g.conjugate(p, a) == b) return true;
  }
  return false;
}

}  // namespace glets
