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

#ifndef GLETS_IO_HPP_
#define GLETS_IO_HPP_

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "glets/image.hpp"
#include "glets/transform.hpp"

// File formats. Malformed input raises FormatError naming the line (CSV)
// or byte offset (binary formats).
//
// Coefficient file layout, fixed little-endian regardless of host:
//   offset 0   magic "GLET" (4 ASCII bytes)
//   offset 4   version, u16 = 1
//   offset 6   n, u32
//   offset 10  basis, u8 (0 rotation, 1 reflection)
//   offset 11  compressed, u8 (0/1)
//   offset 12  record count, u32
//   offset 16  records: count x { index u32, n x f64 }, ascending index
//   tail       slot pass-through, one f64 per 1-dim slot, present iff n odd
// Record sets: full decompositions store indices 1..n-1 (rotation) or
// n+2..2n (reflection); compressed files store the representative and
// difference indices documented in transform.hpp.

namespace glets::io {

// One numeric value per line; a single leading header line is skipped.
// Parsing is locale-independent.
std::vector<double> read_signal_csv(const std::string& path);
void write_signal_csv(const std::string& path, std::span<const double> sig);

// Binary PGM ("P5"), maxval 255 only. Header comments are accepted on
// read; write emits "P5\n<w> <h>\n255\n" followed by raw bytes.
Image read_pgm(const std::string& path);
void write_pgm(const std::string& path, const Image& img);

void write_coefficients(const std::string& path, const Decomposition& d);
void write_coefficients(const std::string& path, const CompressedDecomposition& c);
std::variant<Decomposition, CompressedDecomposition> read_coefficients(
    const std::string& path);

}  // namespace glets::io

#endif  // GLETS_IO_HPP_
