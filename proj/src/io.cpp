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

#include "glets/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "glets/errors.hpp"

namespace glets::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw FormatError(path + ": " + what);
}

// ---------------------------------------------------------------------------
// Little-endian primitives
// ---------------------------------------------------------------------------

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& out, double v) {
  const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

class BinaryReader {
 public:
  BinaryReader(const std::string& path) : path_(path), in_(path, std::ios::binary) {
    if (!in_) fail(path_, "cannot open file");
  }

  std::size_t offset() const { return offset_; }

  void read_bytes(void* dst, std::size_t len) {
    in_.read(static_cast<char*>(dst), static_cast<std::streamsize>(len));
    if (static_cast<std::size_t>(in_.gcount()) != len) {
      fail(path_, "truncated file at offset " + std::to_string(offset_));
    }
    offset_ += len;
  }

  std::uint16_t read_u16() {
    unsigned char b[2];
    read_bytes(b, 2);
    return static_cast<std::uint16_t>(b[0] | (b[1] << 8));
  }

  std::uint32_t read_u32() {
    unsigned char b[4];
    read_bytes(b, 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) |
           (static_cast<std::uint32_t>(b[3]) << 24);
  }

  std::uint8_t read_u8() {
    unsigned char b;
    read_bytes(&b, 1);
    return b;
  }

  double read_f64() {
    unsigned char b[8];
    read_bytes(b, 8);
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) bits = (bits << 8) | b[i];
    return std::bit_cast<double>(bits);
  }

  void expect_eof() {
    if (in_.peek() != std::char_traits<char>::eof()) {
      fail(path_, "trailing data at offset " + std::to_string(offset_));
    }
  }

 private:
  std::string path_;
  std::ifstream in_;
  std::size_t offset_ = 0;
};

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(path, "cannot open file for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(path, "write failed");
}

// ---------------------------------------------------------------------------
// Coefficient files
// ---------------------------------------------------------------------------

constexpr char kMagic[4] = {'G', 'L', 'E', 'T'};
constexpr std::uint16_t kVersion = 1;

void put_header(std::string& out, int n, Basis basis, bool compressed,
                std::uint32_t count) {
  out.append(kMagic, 4);
  put_u16(out, kVersion);
  put_u32(out, static_cast<std::uint32_t>(n));
  out.push_back(static_cast<char>(basis));
  out.push_back(compressed ? 1 : 0);
  put_u32(out, count);
}

void put_records(std::string& out, std::span<const GletCoefficients> records) {
  for (const GletCoefficients& r : records) {
    put_u32(out, static_cast<std::uint32_t>(r.index));
    for (double v : r.values) put_f64(out, v);
  }
}

void put_slots(std::string& out, int n, std::span<const double> slot_passthrough) {
  if (n % 2 == 1) {
    for (double v : slot_passthrough) put_f64(out, v);
  }
}

struct RawCoefficientFile {
  int n = 0;
  Basis basis = Basis::kRotation;
  bool compressed = false;
  std::vector<GletCoefficients> records;
  std::vector<double> slot_passthrough;
};

RawCoefficientFile read_raw(const std::string& path) {
  BinaryReader in(path);

  char magic[4];
  in.read_bytes(magic, 4);
  if (std::memcmp(magic, kMagic, 4) != 0) fail(path, "bad magic at offset 0");
  const std::uint16_t version = in.read_u16();
  if (version != kVersion) {
    fail(path, "unsupported version " + std::to_string(version) + " at offset 4");
  }
  const std::uint32_t n_raw = in.read_u32();
  if (n_raw < 3 || n_raw > (1u << 24)) fail(path, "invalid dimension at offset 6");
  const int n = static_cast<int>(n_raw);
  const std::uint8_t basis_byte = in.read_u8();
  if (basis_byte > 1) fail(path, "invalid basis byte at offset 10");
  const std::uint8_t compressed_byte = in.read_u8();
  if (compressed_byte > 1) fail(path, "invalid compressed byte at offset 11");

  RawCoefficientFile raw;
  raw.n = n;
  raw.basis = static_cast<Basis>(basis_byte);
  raw.compressed = compressed_byte != 0;

  const std::uint32_t count = in.read_u32();
  std::vector<int> expected;
  if (!raw.compressed) {
    expected = decomposition_indices(n, raw.basis);
  } else {
    try {
      expected = compressed_representative_indices(n, raw.basis);
      const std::vector<int> diffs = compressed_difference_indices(n, raw.basis);
      expected.insert(expected.end(), diffs.begin(), diffs.end());
      std::sort(expected.begin(), expected.end());
    } catch (const DomainError& e) {
      fail(path, std::string("invalid compressed layout: ") + e.what());
    }
  }
  if (count != expected.size()) {
    fail(path, "unexpected record count " + std::to_string(count) + " at offset 12 (want " +
               std::to_string(expected.size()) + ")");
  }

  raw.records.reserve(count);
  for (std::uint32_t j = 0; j < count; ++j) {
    const std::size_t record_offset = in.offset();
    const std::uint32_t index = in.read_u32();
    if (index != static_cast<std::uint32_t>(expected[j])) {
      fail(path, "unexpected record index " + std::to_string(index) + " at offset " +
                 std::to_string(record_offset) + " (want " + std::to_string(expected[j]) +
                 ")");
    }
    GletCoefficients c;
    c.index = static_cast<int>(index);
    c.values.resize(static_cast<std::size_t>(n));
    for (double& v : c.values) v = in.read_f64();
    raw.records.push_back(std::move(c));
  }
  if (n % 2 == 1) {
    raw.slot_passthrough.resize(1);
    for (double& v : raw.slot_passthrough) v = in.read_f64();
  }
  in.expect_eof();
  return raw;
}

// ---------------------------------------------------------------------------
// CSV helpers
// ---------------------------------------------------------------------------

bool parse_double(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);  // from_chars rejects '+'
  if (token.empty()) return false;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::vector<double> read_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open file");

  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view token = trim(line);
    double v = 0.0;
    if (parse_double(token, v)) {
      out.push_back(v);
      continue;
    }
    if (line_no == 1) continue;  // optional header
    fail(path, "parse error at line " + std::to_string(line_no));
  }
  if (out.empty()) fail(path, "no numeric data");
  return out;
}

void write_signal_csv(const std::string& path, std::span<const double> sig) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) fail(path, "cannot open file for writing");
  char buf[64];
  for (double v : sig) {
    std::snprintf(buf, sizeof(buf), "%.17g\n", v);
    out << buf;
  }
  if (!out) fail(path, "write failed");
}

Image read_pgm(const std::string& path) {
  BinaryReader in(path);

  // Header tokens separated by whitespace; '#' starts a comment running to
  // end of line. The pixel payload begins after exactly one whitespace byte
  // following the maxval token.
  auto next_token = [&]() {
    std::string tok;
    char ch = 0;
    for (;;) {
      in.read_bytes(&ch, 1);
      if (ch == '#') {
        while (ch != '\n') in.read_bytes(&ch, 1);
        continue;
      }
      if (!std::isspace(static_cast<unsigned char>(ch))) break;
    }
    for (;;) {
      tok.push_back(ch);
      in.read_bytes(&ch, 1);
      if (std::isspace(static_cast<unsigned char>(ch))) break;
      if (ch == '#') break;
    }
    return tok;
  };

  const std::string magic = next_token();
  if (magic != "P5") {
    fail(path, "unsupported format '" + magic + "' (binary P5 required)");
  }
  auto parse_dim = [&](const std::string& what) {
    const std::string tok = next_token();
    int v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0) {
      fail(path, "invalid " + what + " in header");
    }
    return v;
  };
  const int width = parse_dim("width");
  const int height = parse_dim("height");
  if (static_cast<long long>(width) * height > (1ll << 30)) {
    fail(path, "image dimensions too large");
  }
  const int maxval = parse_dim("maxval");
  if (maxval != 255) {
    fail(path, "unsupported maxval " + std::to_string(maxval) + " (255 required)");
  }

  Image img(width, height);
  std::vector<unsigned char> bytes(img.pixels.size());
  in.read_bytes(bytes.data(), bytes.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) img.pixels[i] = bytes[i];
  return img;
}

void write_pgm(const std::string& path, const Image& img) {
  if (img.width <= 0 || img.height <= 0 ||
      img.pixels.size() !=
          static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height)) {
    throw DomainError("image dimensions do not match pixel buffer");
  }
  std::string bytes;
  bytes.reserve(img.pixels.size() + 32);
  bytes += "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  for (double v : img.pixels) {
    const double r = std::round(v);
    const double clamped = std::min(255.0, std::max(0.0, r));
    bytes.push_back(static_cast<char>(static_cast<unsigned char>(clamped)));
  }
  write_file(path, bytes);
}

void write_coefficients(const std::string& path, const Decomposition& d) {
  std::string bytes;
  bytes.reserve(16 + d.coefficients.size() * (4 + 8 * static_cast<std::size_t>(d.n)) + 8);
  put_header(bytes, d.n, d.basis, false,
             static_cast<std::uint32_t>(d.coefficients.size()));
  put_records(bytes, d.coefficients);
  put_slots(bytes, d.n, d.slot_passthrough);
  write_file(path, bytes);
}

void write_coefficients(const std::string& path, const CompressedDecomposition& c) {
  std::vector<GletCoefficients> records = c.representatives;
  records.insert(records.end(), c.class_differences.begin(), c.class_differences.end());
  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.index < b.index; });

  std::string bytes;
  bytes.reserve(16 + records.size() * (4 + 8 * static_cast<std::size_t>(c.n)) + 8);
  put_header(bytes, c.n, c.basis, true, static_cast<std::uint32_t>(records.size()));
  put_records(bytes, records);
  put_slots(bytes, c.n, c.slot_passthrough);
  write_file(path, bytes);
}

std::variant<Decomposition, CompressedDecomposition> read_coefficients(
    const std::string& path) {
  RawCoefficientFile raw = read_raw(path);

  if (!raw.compressed) {
    Decomposition d;
    d.n = raw.n;
    d.basis = raw.basis;
    d.coefficients = std::move(raw.records);
    d.slot_passthrough = std::move(raw.slot_passthrough);
    return d;
  }

  CompressedDecomposition c;
  c.n = raw.n;
  c.basis = raw.basis;
  c.slot_passthrough = std::move(raw.slot_passthrough);
  c.class_map = compressed_class_map(raw.n, raw.basis);
  const std::vector<int> diff_indices = compressed_difference_indices(raw.n, raw.basis);
  for (GletCoefficients& r : raw.records) {
    if (std::binary_search(diff_indices.begin(), diff_indices.end(), r.index)) {
      c.class_differences.push_back(std::move(r));
    } else {
      c.representatives.push_back(std::move(r));
    }
  }
  return c;
}

}  // namespace glets::io
