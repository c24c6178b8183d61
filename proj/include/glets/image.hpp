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

#ifndef GLETS_IMAGE_HPP_
#define GLETS_IMAGE_HPP_

#include <span>
#include <vector>

#include "glets/transform.hpp"

namespace glets {

// Grayscale image, row-major real values (8-bit sources load as 0..255).
struct Image {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;

  Image() = default;
  Image(int w, int h) : width(w), height(h),
      pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0.0) {}

  double& at(int r, int c) { return pixels[static_cast<std::size_t>(r) * width + c]; }
  const double& at(int r, int c) const {
    return pixels[static_cast<std::size_t>(r) * width + c];
  }
  bool square() const { return width == height && width > 0; }
};

// Which direction the G-let acts on: every column (left multiplication,
// the default), every row, or both sides (B · X · Bᵀ).
enum class Axis : unsigned char { kCols = 0, kRows = 1, kBoth = 2 };

struct ImageDecomposition {
  int glet_index = 0;
  Basis basis = Basis::kRotation;
  Axis axis = Axis::kCols;
  Image projected;
};

// Applies the G-let to a square image; columns are independent (likewise
// rows) and the work is O(width·height).
ImageDecomposition project_image(const Image& img, int glet_index, Basis basis,
                                 Axis axis = Axis::kCols);

// Slot coordinates of the original image for the reconstruction
// pass-through: row 0 for the column axis, column 0 for the row axis.
// Empty for even n, where the slot characters participate in the sum
// identity directly.
std::vector<double> image_slot_passthrough(const Image& img, Axis axis);

// Linear-sum reconstruction from the complete projection set (indices
// 1..n-1 or n+2..2n of one basis, one axis). Supported for the column and
// row axes; the both-sides projection has no linear-sum identity and is
// inverted per G-let via reconstruct_image_from_one instead.
Image reconstruct_image(const std::vector<ImageDecomposition>& parts,
                        std::span<const double> slot_passthrough);

// Exact inverse of a single projection via the orthogonal transpose(s).
Image reconstruct_image_from_one(const ImageDecomposition& part);

// Min-max affine normalization of the projected values to [0, 255] with
// round-half-away-from-zero, for display. A constant projection renders as
// mid-gray 128.
Image render_projection(const ImageDecomposition& d);

}  // namespace glets

#endif  // GLETS_IMAGE_HPP_
