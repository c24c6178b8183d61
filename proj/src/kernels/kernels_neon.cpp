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

#if defined(GLETS_HAVE_NEON_KERNELS)

#include <arm_neon.h>

// NEON variants: one (x0, x1) pair per 128-bit vector. vmulq/vaddq round
// like the scalar kernels; vfmaq is deliberately not used so results stay
// bitwise identical to the reference.

namespace glets::kernels::neon {

bool supported() { return true; }  // baseline on aarch64

void block2_apply(double* dst, const double* src, std::size_t pairs, const Block2& b) {
  const float64x2_t diag = {b.m00, b.m11};
  const float64x2_t off = {b.m01, b.m10};
  for (std::size_t c = 0; c < pairs; ++c) {
    const float64x2_t x = vld1q_f64(src + 2 * c);
    const float64x2_t xsw = vextq_f64(x, x, 1);  // [x1, x0]
    vst1q_f64(dst + 2 * c, vaddq_f64(vmulq_f64(x, diag), vmulq_f64(xsw, off)));
  }
}

void block2_apply_rows(double* dst0, double* dst1, const double* src0,
                       const double* src1, std::size_t count, const Block2& b) {
  const float64x2_t m00 = vdupq_n_f64(b.m00);
  const float64x2_t m01 = vdupq_n_f64(b.m01);
  const float64x2_t m10 = vdupq_n_f64(b.m10);
  const float64x2_t m11 = vdupq_n_f64(b.m11);
  std::size_t i = 0;
  const std::size_t vec_len = count & ~std::size_t(1);
  for (; i < vec_len; i += 2) {
    const float64x2_t x0 = vld1q_f64(src0 + i);
    const float64x2_t x1 = vld1q_f64(src1 + i);
    vst1q_f64(dst0 + i, vaddq_f64(vmulq_f64(m00, x0), vmulq_f64(m01, x1)));
    vst1q_f64(dst1 + i, vaddq_f64(vmulq_f64(m10, x0), vmulq_f64(m11, x1)));
  }
  for (; i < count; ++i) {
    const double x0 = src0[i];
    const double x1 = src1[i];
    dst0[i] = b.m00 * x0 + b.m01 * x1;
    dst1[i] = b.m10 * x0 + b.m11 * x1;
  }
}

void vec_add(double* dst, const double* src, std::size_t len) {
  std::size_t i = 0;
  const std::size_t vec_len = len & ~std::size_t(1);
  for (; i < vec_len; i += 2) {
    vst1q_f64(dst + i, vaddq_f64(vld1q_f64(dst + i), vld1q_f64(src + i)));
  }
  for (; i < len; ++i) dst[i] += src[i];
}

void vec_scale(double* dst, const double* src, std::size_t len, double s) {
  const float64x2_t sv = vdupq_n_f64(s);
  std::size_t i = 0;
  const std::size_t vec_len = len & ~std::size_t(1);
  for (; i < vec_len; i += 2) {
    vst1q_f64(dst + i, vmulq_f64(sv, vld1q_f64(src + i)));
  }
  for (; i < len; ++i) dst[i] = s * src[i];
}

}  // namespace glets::kernels::neon

#endif  // GLETS_HAVE_NEON_KERNELS
