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

#include "glets/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "glets/errors.hpp"
#include "parallel.hpp"

namespace glets {

namespace {

void check_square(const Image& img) {
  if (!img.square() || img.height < 3) {
    throw DomainError("unsupported shape: " + std::to_string(img.width) + "x" +
                      std::to_string(img.height) + " (square, n >= 3 required)");
  }
  if (img.pixels.size() !=
      static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height)) {
    throw DomainError("image pixel buffer does not match its dimensions");
  }
}

// Left-multiplies every column by the G-let. Row pairs are contiguous, so
// each block application streams across the full image width.
void apply_to_columns(const GletMatrix& m, const Image& in, Image& out, bool transposed) {
  const int w = in.width;
  const int slots = m.one_dim_count();
  const kernels::Block2 b = transposed ? kernels::transpose(m.block()) : m.block();
  for (int s = 0; s < slots; ++s) {
    kernels::vec_scale(&out.at(s, 0), &in.at(s, 0), static_cast<std::size_t>(w),
                       m.slot_sign());
  }
  detail::parallel_for(0, static_cast<std::size_t>(m.two_dim_count()), [&](std::size_t j) {
    const int r = slots + 2 * static_cast<int>(j);
    kernels::block2_apply_rows(&out.at(r, 0), &out.at(r + 1, 0), &in.at(r, 0),
                               &in.at(r + 1, 0), static_cast<std::size_t>(w), b);
  });
}

// Right-multiplies by the transpose (transforms every row in place of a
// column), i.e. X·Bᵀ, or X·B when transposed.
void apply_to_rows(const GletMatrix& m, const Image& in, Image& out, bool transposed) {
  const int n = in.width;
  const int slots = m.one_dim_count();
  const kernels::Block2 b = transposed ? kernels::transpose(m.block()) : m.block();
  detail::parallel_for(0, static_cast<std::size_t>(in.height), [&](std::size_t r) {
    const double* src = &in.pixels[r * static_cast<std::size_t>(n)];
    double* dst = &out.pixels[r * static_cast<std::size_t>(n)];
    for (int s = 0; s < slots; ++s) dst[s] = m.slot_sign() * src[s];
    kernels::block2_apply(dst + slots, src + slots,
                          static_cast<std::size_t>(m.two_dim_count()), b);
  });
}

void check_glet_for_basis(int n, int glet_index, Basis basis) {
  const bool rotation = glet_index >= 1 && glet_index <= n;
  const bool reflection = glet_index > n && glet_index <= 2 * n;
  if (!rotation && !reflection) {
    throw DomainError("glet index " + std::to_string(glet_index) + " out of range [1, " +
                      std::to_string(2 * n) + "]");
  }
  if ((basis == Basis::kRotation) != rotation) {
    throw DomainError("glet index " + std::to_string(glet_index) +
                      " does not belong to the requested basis");
  }
}

}  // namespace

ImageDecomposition project_image(const Image& img, int glet_index, Basis basis, Axis axis) {
  check_square(img);
  const int n = img.height;
  check_glet_for_basis(n, glet_index, basis);
  const GletMatrix m = build_glet(n, glet_index);

  ImageDecomposition out;
  out.glet_index = glet_index;
  out.basis = basis;
  out.axis = axis;
  out.projected = Image(img.width, img.height);
  switch (axis) {
    case Axis::kCols:
      apply_to_columns(m, img, out.projected, false);
      break;
    case Axis::kRows:
      apply_to_rows(m, img, out.projected, false);
      break;
    case Axis::kBoth: {
      Image tmp(img.width, img.height);
      apply_to_columns(m, img, tmp, false);
      apply_to_rows(m, tmp, out.projected, false);
      break;
    }
  }
  return out;
}

std::vector<double> image_slot_passthrough(const Image& img, Axis axis) {
  check_square(img);
  const int n = img.height;
  if (n % 2 == 0) return {};
  std::vector<double> out;
  if (axis == Axis::kRows) {
    out.resize(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) out[r] = img.at(r, 0);
  } else {
    out.assign(img.pixels.begin(), img.pixels.begin() + n);  // row 0
  }
  return out;
}

Image reconstruct_image(const std::vector<ImageDecomposition>& parts,
                        std::span<const double> slot_passthrough) {
  if (parts.empty()) throw Error("incomplete decomposition: no projections");
  const Basis basis = parts.front().basis;
  const Axis axis = parts.front().axis;
  if (axis == Axis::kBoth) {
    throw DomainError(
        "both-sides projection has no linear-sum reconstruction; invert one "
        "projection via reconstruct_image_from_one");
  }
  check_square(parts.front().projected);
  const int n = parts.front().projected.height;
  const int w = parts.front().projected.width;

  std::vector<int> expected = decomposition_indices(n, basis);
  std::vector<const ImageDecomposition*> ordered(expected.size(), nullptr);
  for (const ImageDecomposition& p : parts) {
    if (p.basis != basis || p.axis != axis) {
      throw Error("incomplete decomposition: mixed basis or axis");
    }
    if (p.projected.width != w || p.projected.height != n) {
      throw Error("incomplete decomposition: mixed projection shapes");
    }
    const auto it = std::find(expected.begin(), expected.end(), p.glet_index);
    if (it != expected.end()) ordered[it - expected.begin()] = &p;
  }
  for (std::size_t j = 0; j < ordered.size(); ++j) {
    if (ordered[j] == nullptr) {
      throw Error("incomplete decomposition: missing projection index " +
                  std::to_string(expected[j]));
    }
  }
  const int one_dim = n % 2 == 1 ? 1 : 2;
  const std::size_t slots_needed = n % 2 == 1 ? static_cast<std::size_t>(n) : 0;
  if (slot_passthrough.size() != slots_needed) {
    throw Error("incomplete decomposition: slot pass-through has wrong length");
  }

  Image acc(w, n);
  for (const ImageDecomposition* p : ordered) {
    kernels::vec_add(acc.pixels.data(), p->projected.pixels.data(), acc.pixels.size());
  }
  Image out(w, n);
  kernels::vec_scale(out.pixels.data(), acc.pixels.data(), acc.pixels.size(), -1.0);
  if (basis == Basis::kReflection) {
    // Undo the base reflection: flip back the second coordinate of every
    // block pair.
    if (axis == Axis::kCols) {
      for (int r = one_dim + 1; r < n; r += 2) {
        std::copy_n(&acc.at(r, 0), w, &out.at(r, 0));
      }
    } else {
      for (int r = 0; r < n; ++r) {
        for (int c = one_dim + 1; c < n; c += 2) out.at(r, c) = acc.at(r, c);
      }
    }
  }
  if (n % 2 == 1) {
    if (axis == Axis::kCols) {
      std::copy_n(slot_passthrough.data(), w, &out.at(0, 0));
    } else {
      for (int r = 0; r < n; ++r) out.at(r, 0) = slot_passthrough[r];
    }
  }
  return out;
}

Image reconstruct_image_from_one(const ImageDecomposition& part) {
  check_square(part.projected);
  const int n = part.projected.height;
  check_glet_for_basis(n, part.glet_index, part.basis);
  const GletMatrix m = build_glet(n, part.glet_index);

  Image out(part.projected.width, part.projected.height);
  switch (part.axis) {
    case Axis::kCols:
      apply_to_columns(m, part.projected, out, true);
      break;
    case Axis::kRows:
      apply_to_rows(m, part.projected, out, true);
      break;
    case Axis::kBoth: {
      Image tmp(part.projected.width, part.projected.height);
      apply_to_columns(m, part.projected, tmp, true);
      apply_to_rows(m, tmp, out, true);
      break;
    }
  }
  return out;
}

Image render_projection(const ImageDecomposition& d) {
  check_square(d.projected);
  const auto [lo_it, hi_it] =
      std::minmax_element(d.projected.pixels.begin(), d.projected.pixels.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  Image out(d.projected.width, d.projected.height);
  if (hi == lo) {
    std::fill(out.pixels.begin(), out.pixels.end(), 128.0);
    return out;
  }
  const double scale = 255.0 / (hi - lo);
  for (std::size_t i = 0; i < out.pixels.size(); ++i) {
    // std::round is round-half-away-from-zero, the documented display rule.
    out.pixels[i] = std::round((d.projected.pixels[i] - lo) * scale);
  }
  return out;
}

}  // namespace glets
