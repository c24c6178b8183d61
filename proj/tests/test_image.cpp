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

#include "glets/errors.hpp"
#include "glets/image.hpp"

using glets::Axis;
using glets::Basis;
using glets::Image;
using glets::ImageDecomposition;

namespace {

Image random_image(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> dist(0.0, 255.0);
  Image img(n, n);
  for (double& p : img.pixels) p = dist(rng);
  return img;
}

double max_pixel_diff(const Image& a, const Image& b) {
  REQUIRE(a.pixels.size() == b.pixels.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    worst = std::max(worst, std::abs(a.pixels[i] - b.pixels[i]));
  }
  return worst;
}

std::vector<ImageDecomposition> project_all(const Image& img, Basis basis, Axis axis) {
  std::vector<ImageDecomposition> parts;
  for (int index : glets::decomposition_indices(img.height, basis)) {
    parts.push_back(glets::project_image(img, index, basis, axis));
  }
  return parts;
}

}  // namespace

TEST_CASE("identity G-let leaves the image unchanged") {
  std::mt19937_64 rng(41);
  const Image img = random_image(rng, 8);
  const ImageDecomposition d = glets::project_image(img, 8, Basis::kRotation);
  CHECK(d.projected.pixels == img.pixels);
}

TEST_CASE("column projection matches the 1D transform per column") {
  std::mt19937_64 rng(42);
  for (int n : {4, 7, 16}) {
    const Image img = random_image(rng, n);
    for (int index : {1, n - 1, n + 2}) {
      const Basis basis = index <= n ? Basis::kRotation : Basis::kReflection;
      const glets::GletMatrix m = glets::build_glet(n, index);
      const ImageDecomposition d = glets::project_image(img, index, basis, Axis::kCols);
      for (int c = 0; c < n; ++c) {
        std::vector<double> col(n);
        for (int r = 0; r < n; ++r) col[r] = img.at(r, c);
        const std::vector<double> want = m.apply(col);
        for (int r = 0; r < n; ++r) CHECK(d.projected.at(r, c) == want[r]);
      }
    }
  }
}

TEST_CASE("worked 4x4 example: every column transforms alike") {
  Image img(4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) img.at(r, c) = r + 1.0;
  }
  const ImageDecomposition d = glets::project_image(img, 1, Basis::kRotation);
  for (int c = 0; c < 4; ++c) {
    CHECK(d.projected.at(0, c) == -1.0);
    CHECK(d.projected.at(1, c) == -2.0);
    CHECK(d.projected.at(2, c) == -4.0);
    CHECK(d.projected.at(3, c) == 3.0);
  }
}

TEST_CASE("row projection is the transposed reading") {
  std::mt19937_64 rng(43);
  const int n = 8;
  const Image img = random_image(rng, n);
  const glets::GletMatrix m = glets::build_glet(n, 3);
  const ImageDecomposition d = glets::project_image(img, 3, Basis::kRotation, Axis::kRows);
  for (int r = 0; r < n; ++r) {
    std::vector<double> row(n);
    for (int c = 0; c < n; ++c) row[c] = img.at(r, c);
    const std::vector<double> want = m.apply(row);
    for (int c = 0; c < n; ++c) CHECK(d.projected.at(r, c) == want[c]);
  }
}

TEST_CASE("round trip through the full projection set") {
  std::mt19937_64 rng(44);
  for (int n : {8, 9, 64}) {
    const Image img = random_image(rng, n);
    for (Basis basis : {Basis::kRotation, Basis::kReflection}) {
      for (Axis axis : {Axis::kCols, Axis::kRows}) {
        const auto parts = project_all(img, basis, axis);
        const Image rec =
            glets::reconstruct_image(parts, glets::image_slot_passthrough(img, axis));
        CHECK(max_pixel_diff(rec, img) < 1e-9);
      }
    }
  }
}

TEST_CASE("per-column norms are preserved") {
  std::mt19937_64 rng(45);
  const int n = 32;
  const Image img = random_image(rng, n);
  const ImageDecomposition d = glets::project_image(img, 5, Basis::kRotation);
  for (int c = 0; c < n; ++c) {
    double orig = 0.0, proj = 0.0;
    for (int r = 0; r < n; ++r) {
      orig += img.at(r, c) * img.at(r, c);
      proj += d.projected.at(r, c) * d.projected.at(r, c);
    }
    CHECK(std::abs(std::sqrt(proj) - std::sqrt(orig)) < 1e-9 * std::sqrt(orig));
  }
}

TEST_CASE("single-projection inverse is exact for every axis") {
  std::mt19937_64 rng(46);
  const Image img = random_image(rng, 16);
  for (Axis axis : {Axis::kCols, Axis::kRows, Axis::kBoth}) {
    const ImageDecomposition d = glets::project_image(img, 5, Basis::kRotation, axis);
    const Image rec = glets::reconstruct_image_from_one(d);
    CHECK(max_pixel_diff(rec, img) < 1e-12);
  }
}

TEST_CASE("both-sides projection has no linear-sum reconstruction") {
  std::mt19937_64 rng(47);
  const Image img = random_image(rng, 8);
  const auto parts = project_all(img, Basis::kRotation, Axis::kBoth);
  CHECK_THROWS_AS(glets::reconstruct_image(parts, {}), glets::DomainError);
}

TEST_CASE("non-square and missing projections are rejected") {
  Image rect(4, 6);
  CHECK_THROWS_AS(glets::project_image(rect, 1, Basis::kRotation), glets::DomainError);

  std::mt19937_64 rng(48);
  const Image img = random_image(rng, 8);
  auto parts = project_all(img, Basis::kRotation, Axis::kCols);
  parts.pop_back();
  CHECK_THROWS_AS(glets::reconstruct_image(parts, {}), glets::Error);
}

TEST_CASE("render_projection display rules") {
  Image zero(5, 5);
  ImageDecomposition d{1, Basis::kRotation, Axis::kCols, zero};
  const Image gray = glets::render_projection(d);
  for (double p : gray.pixels) CHECK(p == 128.0);

  // A symmetric range maps 0 to 127.5, rounded away from zero to 128.
  Image sym(3, 3);
  sym.pixels = {-2.0, 0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  ImageDecomposition ds{1, Basis::kRotation, Axis::kCols, sym};
  const Image r = glets::render_projection(ds);
  CHECK(r.pixels[0] == 0.0);
  CHECK(r.pixels[1] == 128.0);
  CHECK(r.pixels[2] == 255.0);

  // Rendering an already-rendered projection changes nothing.
  ImageDecomposition dr{1, Basis::kRotation, Axis::kCols, r};
  CHECK(glets::render_projection(dr).pixels == r.pixels);
}
