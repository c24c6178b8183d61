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

#ifndef GLETS_ORACLE_HPP_
#define GLETS_ORACLE_HPP_

#include <span>
#include <vector>

#include "glets/glet_matrix.hpp"

// Dense reference arithmetic for validating the sparse fast path. Naive
// O(n²) matrix-vector and O(n³) matrix-matrix products, test scale only.
// Linked by the test suites, not by the CLI.

namespace glets::oracle {

class DenseMatrix {
 public:
  explicit DenseMatrix(int n);  // zero-initialized, n >= 3

  int n() const { return n_; }
  double& at(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  double at(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

 private:
  int n_;
  std::vector<double> a_;
};

// Materializes a G-let: slot values on the leading diagonal entries, the
// 2x2 block repeated along consecutive coordinate pairs, zero elsewhere.
DenseMatrix densify(const GletMatrix& m);

DenseMatrix identity(int n);

std::vector<double> dense_apply(const DenseMatrix& m, std::span<const double> x);

DenseMatrix dense_sum(std::span<const DenseMatrix> ms);

DenseMatrix dense_multiply(const DenseMatrix& a, const DenseMatrix& b);

DenseMatrix dense_transpose(const DenseMatrix& m);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace glets::oracle

#endif  // GLETS_ORACLE_HPP_
