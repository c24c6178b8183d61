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

#include "glets/glet_matrix.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "glets/errors.hpp"

namespace glets {

UnitAngle unit_angle(long long k, long long n) {
  long long m = k % n;
  if (m < 0) m += n;

  // sin(2*pi*(n-m)/n) = -sin(2*pi*m/n); cosines coincide.
  double s_sign = 1.0;
  if (2 * m > n) {
    m = n - m;
    s_sign = -1.0;
  }
  if (m == 0) return {1.0, 0.0};
  if (2 * m == n) return {-1.0, 0.0};
  if (4 * m == n) return {0.0, s_sign};

  double c_sign = 1.0;
  long long num = m;
  long long den = n;
  if (4 * m > n) {
    // Reflect around the quarter turn: 1/2 - m/n = (n - 2m) / (2n).
    c_sign = -1.0;
    num = n - 2 * m;
    den = 2 * n;
  }
  const double x =
      2.0 * std::numbers::pi * (static_cast<double>(num) / static_cast<double>(den));
  return {c_sign * std::cos(x), s_sign * std::sin(x)};
}

namespace {

int one_dim_count_for(int n) { return n % 2 == 1 ? 1 : 2; }

void check_glet_index(int n, int i) {
  if (i < 1 || i > n) {
    throw DomainError("glet index " + std::to_string(i) + " out of range [1, " +
                      std::to_string(n) + "]");
  }
}

}  // namespace

GletMatrix::GletMatrix(int n, int index, double slot_sign, const kernels::Block2& block)
    : n_(n), index_(index), one_dim_(one_dim_count_for(n)), slot_sign_(slot_sign),
      block_(block) {}

GroupElement GletMatrix::element() const {
  const DihedralGroup g(n_);
  return index_ <= n_ ? g.rotation(index_) : g.reflection(index_ - n_ - 1);
}

void GletMatrix::apply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != static_cast<std::size_t>(n_) || y.size() != x.size()) {
    throw DomainError("shape mismatch: expected vectors of length " + std::to_string(n_));
  }
  for (int s = 0; s < one_dim_; ++s) y[s] = slot_sign_ * x[s];
  kernels::block2_apply(y.data() + one_dim_, x.data() + one_dim_,
                        static_cast<std::size_t>(two_dim_count()), block_);
}

std::vector<double> GletMatrix::apply(std::span<const double> x) const {
  std::vector<double> y(x.size());
  apply(x, y);
  return y;
}

void GletMatrix::apply_transpose(std::span<const double> x, std::span<double> y) const {
  if (x.size() != static_cast<std::size_t>(n_) || y.size() != x.size()) {
    throw DomainError("shape mismatch: expected vectors of length " + std::to_string(n_));
  }
  for (int s = 0; s < one_dim_; ++s) y[s] = slot_sign_ * x[s];
  kernels::block2_apply(y.data() + one_dim_, x.data() + one_dim_,
                        static_cast<std::size_t>(two_dim_count()),
                        kernels::transpose(block_));
}

std::vector<double> GletMatrix::apply_transpose(std::span<const double> x) const {
  std::vector<double> y(x.size());
  apply_transpose(x, y);
  return y;
}

GletMatrix build_rotation(int n, int i) {
  if (n < 3) throw DomainError("invalid dimension n=" + std::to_string(n));
  check_glet_index(n, i);
  const UnitAngle a = unit_angle(i, n);
  // Even n uses the alternating character so that the rotation G-lets
  // 1..n-1 sum to -I on the slot coordinates as well; odd n only has the
  // trivial character.
  const double slot = (n % 2 == 0 && i % 2 == 1) ? -1.0 : 1.0;
  return GletMatrix(n, i, slot, {a.c, -a.s, a.s, a.c});
}

GletMatrix build_reflection(int n, int i) {
  if (n < 3) throw DomainError("invalid dimension n=" + std::to_string(n));
  check_glet_index(n, i);
  const int k = i - 1;  // s·r^k
  const UnitAngle a = unit_angle(k, n);
  const double slot = (n % 2 == 0 && k % 2 == 1) ? -1.0 : 1.0;
  return GletMatrix(n, n + i, slot, {a.c, -a.s, -a.s, -a.c});
}

GletMatrix build_glet(int n, int index) {
  if (index >= 1 && index <= n) return build_rotation(n, index);
  if (index > n && index <= 2 * n) return build_reflection(n, index - n);
  throw DomainError("glet index " + std::to_string(index) + " out of range [1, " +
                    std::to_string(2 * n) + "]");
}

}  // namespace glets
