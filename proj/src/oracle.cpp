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

#include "glets/oracle.hpp"

#include <cmath>
#include <string>

#include "glets/errors.hpp"

namespace glets::oracle {

DenseMatrix::DenseMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
  if (n < 3) throw DomainError("invalid dimension n=" + std::to_string(n));
}

DenseMatrix densify(const GletMatrix& m) {
  DenseMatrix out(m.n());
  const int slots = m.one_dim_count();
  for (int s = 0; s < slots; ++s) out.at(s, s) = m.slot_sign();
  const kernels::Block2& b = m.block();
  for (int j = 0; j < m.two_dim_count(); ++j) {
    const int c = slots + 2 * j;
    out.at(c, c) = b.m00;
    out.at(c, c + 1) = b.m01;
    out.at(c + 1, c) = b.m10;
    out.at(c + 1, c + 1) = b.m11;
  }
  return out;
}

DenseMatrix identity(int n) {
  DenseMatrix out(n);
  for (int i = 0; i < n; ++i) out.at(i, i) = 1.0;
  return out;
}

std::vector<double> dense_apply(const DenseMatrix& m, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(m.n())) {
    throw DomainError("shape mismatch in dense_apply");
  }
  std::vector<double> y(x.size(), 0.0);
  for (int r = 0; r < m.n(); ++r) {
    double acc = 0.0;
    for (int c = 0; c < m.n(); ++c) acc += m.at(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

DenseMatrix dense_sum(std::span<const DenseMatrix> ms) {
  if (ms.empty()) throw DomainError("dense_sum of empty list");
  DenseMatrix out(ms.front().n());
  for (const DenseMatrix& m : ms) {
    if (m.n() != out.n()) throw DomainError("shape mismatch in dense_sum");
    for (int r = 0; r < out.n(); ++r)
      for (int c = 0; c < out.n(); ++c) out.at(r, c) += m.at(r, c);
  }
  return out;
}

DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n() != b.n()) throw DomainError("shape mismatch in dense_multiply");
  DenseMatrix out(a.n());
  for (int r = 0; r < a.n(); ++r) {
    for (int k = 0; k < a.n(); ++k) {
      const double v = a.at(r, k);
      if (v == 0.0) continue;
      for (int c = 0; c < a.n(); ++c) out.at(r, c) += v * b.at(k, c);
    }
  }
  return out;
}

DenseMatrix dense_transpose(const DenseMatrix& m) {
  DenseMatrix out(m.n());
  for (int r = 0; r < m.n(); ++r)
    for (int c = 0; c < m.n(); ++c) out.at(c, r) = m.at(r, c);
  return out;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.n() != b.n()) throw DomainError("shape mismatch in max_abs_diff");
  double worst = 0.0;
  for (int r = 0; r < a.n(); ++r)
    for (int c = 0; c < a.n(); ++c) worst = std::max(worst, std::abs(a.at(r, c) - b.at(r, c)));
  return worst;
}

}  // namespace glets::oracle
