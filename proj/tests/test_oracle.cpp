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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "glets/oracle.hpp"

using glets::build_glet;
using glets::build_rotation;
using glets::oracle::DenseMatrix;
using glets::oracle::densify;

namespace {

std::vector<double> random_signal(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = dist(rng);
  return v;
}

}  // namespace

TEST_CASE("densify places slots and blocks literally") {
  const DenseMatrix m = densify(build_rotation(4, 1));
  const double want[4][4] = {
      {-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) CHECK(m.at(r, c) == want[r][c]);
  }
}

TEST_CASE("identity G-let densifies to the identity") {
  for (int n : {4, 7}) {
    CHECK(glets::oracle::max_abs_diff(densify(build_rotation(n, n)),
                                      glets::oracle::identity(n)) == 0.0);
  }
}

TEST_CASE("every densified G-let is orthogonal") {
  for (int n : {3, 4, 5, 8, 16}) {
    for (int index = 1; index <= 2 * n; ++index) {
      const DenseMatrix m = densify(build_glet(n, index));
      const DenseMatrix mtm = glets::oracle::dense_multiply(glets::oracle::dense_transpose(m), m);
      CHECK(glets::oracle::max_abs_diff(mtm, glets::oracle::identity(n)) < 1e-12);
    }
  }
}

TEST_CASE("rotation G-lets 1..n-1 sum to -I for even n") {
  for (int n : {4, 8, 32}) {
    std::vector<DenseMatrix> ms;
    for (int i = 1; i < n; ++i) ms.push_back(densify(build_rotation(n, i)));
    DenseMatrix sum = glets::oracle::dense_sum(ms);
    DenseMatrix minus_i(n);
    for (int i = 0; i < n; ++i) minus_i.at(i, i) = -1.0;
    CHECK(glets::oracle::max_abs_diff(sum, minus_i) < 1e-12);
  }
}

TEST_CASE("odd n: the sum identity holds on blocks, the slot carries n-1") {
  for (int n : {5, 9, 31}) {
    std::vector<DenseMatrix> ms;
    for (int i = 1; i < n; ++i) ms.push_back(densify(build_rotation(n, i)));
    DenseMatrix sum = glets::oracle::dense_sum(ms);
    CHECK(std::abs(sum.at(0, 0) - (n - 1)) < 1e-12);
    DenseMatrix expected(n);
    expected.at(0, 0) = static_cast<double>(n - 1);
    for (int i = 1; i < n; ++i) expected.at(i, i) = -1.0;
    CHECK(glets::oracle::max_abs_diff(sum, expected) < 1e-12);
  }
}

TEST_CASE("dense_apply of the identity is the identity") {
  std::mt19937_64 rng(5);
  const std::vector<double> x = random_signal(rng, 8);
  CHECK(glets::oracle::dense_apply(glets::oracle::identity(8), x) == x);
}

TEST_CASE("sparse apply equals the dense oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(3, 64);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = dim(rng);
    std::uniform_int_distribution<int> idx(1, 2 * n);
    const int index = idx(rng);
    const std::vector<double> x = random_signal(rng, n);
    const auto m = build_glet(n, index);
    const std::vector<double> fast = m.apply(x);
    const std::vector<double> slow = glets::oracle::dense_apply(densify(m), x);
    for (int i = 0; i < n; ++i) CHECK(std::abs(fast[i] - slow[i]) < 1e-12);
  }
}

TEST_CASE("generator relations hold as dense matrix identities") {
  for (int n = 3; n <= 32; ++n) {
    const DenseMatrix s = densify(glets::build_reflection(n, 1));
    const DenseMatrix r1 = densify(build_rotation(n, 1));
    const DenseMatrix id = glets::oracle::identity(n);

    CHECK(glets::oracle::max_abs_diff(glets::oracle::dense_multiply(s, s), id) < 1e-9);
    const DenseMatrix sr = glets::oracle::dense_multiply(s, r1);
    CHECK(glets::oracle::max_abs_diff(glets::oracle::dense_multiply(sr, sr), id) < 1e-9);
    DenseMatrix power = id;
    for (int i = 0; i < n; ++i) power = glets::oracle::dense_multiply(power, r1);
    CHECK(glets::oracle::max_abs_diff(power, id) < 1e-9);
  }
}
