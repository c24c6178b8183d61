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

#include <cstdlib>
#include <cstring>
#include <string>

#include "glets/errors.hpp"

namespace glets::kernels {

namespace {

struct Table {
  const char* name;
  void (*block2_apply)(double*, const double*, std::size_t, const Block2&);
  void (*block2_apply_rows)(double*, double*, const double*, const double*,
                            std::size_t, const Block2&);
  void (*vec_add)(double*, const double*, std::size_t);
  void (*vec_scale)(double*, const double*, std::size_t, double);
};

constexpr Table kScalar = {"scalar", scalar::block2_apply, scalar::block2_apply_rows,
                           scalar::vec_add, scalar::vec_scale};

#if defined(GLETS_HAVE_AVX2_KERNELS)
constexpr Table kAvx2 = {"avx2", avx2::block2_apply, avx2::block2_apply_rows,
                         avx2::vec_add, avx2::vec_scale};
#endif

#if defined(GLETS_HAVE_NEON_KERNELS)
constexpr Table kNeon = {"neon", neon::block2_apply, neon::block2_apply_rows,
                         neon::vec_add, neon::vec_scale};
#endif

const Table* lookup(const std::string& name) {
  if (name == "scalar") return &kScalar;
#if defined(GLETS_HAVE_AVX2_KERNELS)
  if (name == "avx2" && avx2::supported()) return &kAvx2;
#endif
#if defined(GLETS_HAVE_NEON_KERNELS)
  if (name == "neon" && neon::supported()) return &kNeon;
#endif
  return nullptr;
}

const Table* detect() {
  // GLETS_KERNELS=scalar|avx2|neon overrides detection; unknown or
  // unsupported values fall back to auto.
  if (const char* env = std::getenv("GLETS_KERNELS")) {
    if (const Table* t = lookup(env)) return t;
  }
#if defined(GLETS_HAVE_AVX2_KERNELS)
  if (avx2::supported()) return &kAvx2;
#endif
#if defined(GLETS_HAVE_NEON_KERNELS)
  if (neon::supported()) return &kNeon;
#endif
  return &kScalar;
}

const Table* g_forced = nullptr;

const Table& table() {
  static const Table* detected = detect();
  return g_forced ? *g_forced : *detected;
}

}  // namespace

void block2_apply(double* dst, const double* src, std::size_t pairs, const Block2& b) {
  table().block2_apply(dst, src, pairs, b);
}

void block2_apply_rows(double* dst0, double* dst1, const double* src0,
                       const double* src1, std::size_t count, const Block2& b) {
  table().block2_apply_rows(dst0, dst1, src0, src1, count, b);
}

void vec_add(double* dst, const double* src, std::size_t len) {
  table().vec_add(dst, src, len);
}

void vec_scale(double* dst, const double* src, std::size_t len, double s) {
  table().vec_scale(dst, src, len, s);
}

const char* active_backend() { return table().name; }

void force_backend(const char* name) {
  if (std::strcmp(name, "auto") == 0) {
    g_forced = nullptr;
    return;
  }
  const Table* t = lookup(name);
  if (t == nullptr) {
    throw DomainError(std::string("kernel backend not available: ") + name);
  }
  g_forced = t;
}

}  // namespace glets::kernels
