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

#if defined(GLETS_HAVE_AVX2_KERNELS)

#include <immintrin.h>

// AVX2 variants. _mm256_mul_pd / _mm256_add_pd round each operation exactly
// like the scalar kernels, so results are bitwise identical; FMA is
// deliberately not used.

namespace glets::kernels::avx2 {

bool supported() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

#if defined(__GNUC__) || defined(__clang__)
#define GLETS_TARGET_AVX2 __attribute__((target("avx2")))
#else
#define GLETS_TARGET_AVX2
#endif

GLETS_TARGET_AVX2
void block2_apply(double* dst, const double* src, std::size_t pairs, const Block2& b) {
  // Two (x0, x1) pairs per 256-bit vector. The in-lane swap pairs each
  // element with its partner: diag picks m00/m11, off picks m01/m10.
  const __m256d diag = _mm256_setr_pd(b.m00, b.m11, b.m00, b.m11);
  const __m256d off = _mm256_setr_pd(b.m01, b.m10, b.m01, b.m10);
  std::size_t c = 0;
  const std::size_t vec_pairs = pairs & ~std::size_t(1);
  for (; c < vec_pairs; c += 2) {
    const __m256d x = _mm256_loadu_pd(src + 2 * c);
    const __m256d xsw = _mm256_permute_pd(x, 0x5);  // [x1, x0, x3, x2]
    const __m256d y = _mm256_add_pd(_mm256_mul_pd(x, diag), _mm256_mul_pd(xsw, off));
    _mm256_storeu_pd(dst + 2 * c, y);
  }
  for (; c < pairs; ++c) {
    const double x0 = src[2 * c];
    const double x1 = src[2 * c + 1];
    dst[2 * c] = b.m00 * x0 + b.m01 * x1;
    dst[2 * c + 1] = b.m10 * x0 + b.m11 * x1;
  }
}

GLETS_TARGET_AVX2
void block2_apply_rows(double* dst0, double* dst1, const double* src0,
                       const double* src1, std::size_t count, const Block2& b) {
  const __m256d m00 = _mm256_set1_pd(b.m00);
  const __m256d m01 = _mm256_set1_pd(b.m01);
  const __m256d m10 = _mm256_set1_pd(b.m10);
  const __m256d m11 = _mm256_set1_pd(b.m11);
  std::size_t i = 0;
  const std::size_t vec_len = count & ~std::size_t(3);
  for (; i < vec_len; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(src0 + i);
    const __m256d x1 = _mm256_loadu_pd(src1 + i);
    _mm256_storeu_pd(dst0 + i, _mm256_add_pd(_mm256_mul_pd(m00, x0), _mm256_mul_pd(m01, x1)));
    _mm256_storeu_pd(dst1 + i, _mm256_add_pd(_mm256_mul_pd(m10, x0), _mm256_mul_pd(m11, x1)));
  }
  for (; i < count; ++i) {
    const double x0 = src0[i];
    const double x1 = src1[i];
    dst0[i] = b.m00 * x0 + b.m01 * x1;
    dst1[i] = b.m10 * x0 + b.m11 * x1;
  }
}

GLETS_TARGET_AVX2
void vec_add(double* dst, const double* src, std::size_t len) {
  std::size_t i = 0;
  const std::size_t vec_len = len & ~std::size_t(3);
  for (; i < vec_len; i += 4) {
    const __m256d d = _mm256_loadu_pd(dst + i);
    const __m256d s = _mm256_loadu_pd(src + i);
    _mm256_storeu_pd(dst + i, _mm256_add_pd(d, s));
  }
  for (; i < len; ++i) dst[i] += src[i];
}

GLETS_TARGET_AVX2
void vec_scale(double* dst, const double* src, std::size_t len, double s) {
  const __m256d sv = _mm256_set1_pd(s);
  std::size_t i = 0;
  const std::size_t vec_len = len & ~std::size_t(3);
  for (; i < vec_len; i += 4) {
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(sv, _mm256_loadu_pd(src + i)));
  }
  for (; i < len; ++i) dst[i] = s * src[i];
}

#undef GLETS_TARGET_AVX2

}  // namespace glets::kernels::avx2

#endif  // GLETS_HAVE_AVX2_KERNELS
