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

#include "glets/kernels.hpp"

// Reference kernels. The per-element operation order here (round both
// products, then one add) is the contract the SIMD variants reproduce.

namespace glets::kernels::scalar {

void block2_apply(double* dst, const double* src, std::size_t pairs, const Block2& b) {
  for (std::size_t c = 0; c < pairs; ++c) {
    const double x0 = src[2 * c];
    const double x1 = src[2 * c + 1];
    dst[2 * c] = b.m00 * x0 + b.m01 * x1;
    dst[2 * c + 1] = b.m10 * x0 + b.m11 * x1;
  }
}

void block2_apply_rows(double* dst0, double* dst1, const double* src0,
                       const double* src1, std::size_t count, const Block2& b) {
  for (std::size_t i = 0; i < count; ++i) {
    const double x0 = src0[i];
    const double x1 = src1[i];
    dst0[i] = b.m00 * x0 + b.m01 * x1;
    dst1[i] = b.m10 * x0 + b.m11 * x1;
  }
}

void vec_add(double* dst, const double* src, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) dst[i] += src[i];
}

void vec_scale(double* dst, const double* src, std::size_t len, double s) {
  for (std::size_t i = 0; i < len; ++i) dst[i] = s * src[i];
}

}  // namespace glets::kernels::scalar
