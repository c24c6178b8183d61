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

#ifndef GLETS_KERNELS_HPP_
#define GLETS_KERNELS_HPP_

#include <cstddef>

// Data-parallel inner loops shared by the transform, frequency and image
// paths. Scalar kernels are the reference; AVX2 (x86-64) and NEON (aarch64)
// variants are selected at runtime and must produce bitwise-identical
// results. To keep that guarantee all variants use unfused multiply/add in
// the same per-element order, and the library is built with FP contraction
// disabled.
//
// Memory contract: dst may alias src completely (in-place), but partial
// overlap is not allowed. No alignment requirements; SIMD variants use
// unaligned loads/stores with scalar tails.

namespace glets::kernels {

// One 2x2 block, row-major.
struct Block2 {
  double m00, m01, m10, m11;
};

inline Block2 transpose(const Block2& b) { return {b.m00, b.m10, b.m01, b.m11}; }

// Applies the block to consecutive pairs of one contiguous vector:
//   dst[2c]   = m00*src[2c] + m01*src[2c+1]
//   dst[2c+1] = m10*src[2c] + m11*src[2c+1]
void block2_apply(double* dst, const double* src, std::size_t pairs, const Block2& b);

// Applies the block across two parallel arrays (adjacent image rows):
//   dst0[i] = m00*src0[i] + m01*src1[i]
//   dst1[i] = m10*src0[i] + m11*src1[i]
void block2_apply_rows(double* dst0, double* dst1, const double* src0,
                       const double* src1, std::size_t count, const Block2& b);

// dst[i] += src[i]
void vec_add(double* dst, const double* src, std::size_t len);

// dst[i] = s * src[i]
void vec_scale(double* dst, const double* src, std::size_t len, double s);

// Name of the kernel set in use: "scalar", "avx2" or "neon".
const char* active_backend();

// Forces a specific backend ("scalar", "avx2", "neon") or "auto" to restore
// runtime detection. Throws DomainError if the backend is unknown or not
// available on this machine. Intended for startup and tests; do not call
// concurrently with kernel execution.
void force_backend(const char* name);

// Reference kernels, always available.
namespace scalar {
void block2_apply(double* dst, const double* src, std::size_t pairs, const Block2& b);
void block2_apply_rows(double* dst0, double* dst1, const double* src0,
                       const double* src1, std::size_t count, const Block2& b);
void vec_add(double* dst, const double* src, std::size_t len);
void vec_scale(double* dst, const double* src, std::size_t len, double s);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define GLETS_HAVE_AVX2_KERNELS 1
namespace avx2 {
bool supported();
void block2_apply(double* dst, const double* src, std::size_t pairs, const Block2& b);
void block2_apply_rows(double* dst0, double* dst1, const double* src0,
                       const double* src1, std::size_t count, const Block2& b);
void vec_add(double* dst, const double* src, std::size_t len);
void vec_scale(double* dst, const double* src, std::size_t len, double s);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define GLETS_HAVE_NEON_KERNELS 1
namespace neon {
bool supported();
void block2_apply(double* dst, const double* src, std::size_t pairs, const Block2& b);
void block2_apply_rows(double* dst0, double* dst1, const double* src0,
                       const double* src1, std::size_t count, const Block2& b);
void vec_add(double* dst, const double* src, std::size_t len);
void vec_scale(double* dst, const double* src, std::size_t len, double s);
}  // namespace neon
#endif

}  // namespace glets::kernels

#endif  // GLETS_KERNELS_HPP_
