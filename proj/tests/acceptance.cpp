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

// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any fails. Numeric gates and tolerances are fixed here, not tunable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "glets/bench.hpp"
#include "glets/dihedral.hpp"
#include "glets/frequency.hpp"
#include "glets/image.hpp"
#include "glets/io.hpp"
#include "glets/oracle.hpp"
#include "glets/transform.hpp"

#ifndef GLETS_CLI_PATH
#error "GLETS_CLI_PATH must point at the CLI binary"
#endif

namespace {

using Clock = std::chrono::steady_clock;
using glets::Basis;

std::mt19937_64 make_rng(unsigned seed) { return std::mt19937_64(seed); }

std::vector<double> random_signal(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& x : v) x = dist(rng);
  return v;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

std::string temp_path(const std::string& name) {
  static const std::string dir = [] {
    const auto d = std::filesystem::temp_directory_path() / "glets_acceptance";
    std::filesystem::create_directories(d);
    return d.string();
  }();
  return dir + "/" + name;
}

// Runs the CLI and returns (exit code, stdout).
std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string(GLETS_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {status, out};
}

std::map<std::string, std::string> parse_summary(const std::string& out,
                                                 const std::string& command) {
  std::map<std::string, std::string> kv;
  std::istringstream lines(out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.rfind("command=" + command, 0) != 0) continue;
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      const auto eq = token.find('=');
      if (eq != std::string::npos) kv[token.substr(0, eq)] = token.substr(eq + 1);
    }
  }
  return kv;
}

int g_failures = 0;

void criterion(int number, const std::string& label,
               const std::function<std::string()>& body) {
  const auto t0 = Clock::now();
  std::string detail;
  bool ok = true;
  try {
    detail = body();  // empty string means pass
    ok = detail.empty();
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("%s criterion %2d: %s%s%s [%.2fs]\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string check_info(int n, int classes, int one_dim, int two_dim) {
  const auto [status, out] = run_cli("info --n " + std::to_string(n));
  if (status != 0) return "cli info failed with status " + std::to_string(status);
  const auto kv = parse_summary(out, "info");
  auto want = [&](const std::string& key, int value) -> std::string {
    const auto it = kv.find(key);
    if (it == kv.end()) return "summary key " + key + " missing";
    if (it->second != std::to_string(value)) {
      return key + "=" + it->second + ", want " + std::to_string(value);
    }
    return "";
  };
  for (const auto& [key, value] : std::map<std::string, int>{
           {"classes", classes}, {"one_dim", one_dim}, {"two_dim", two_dim}}) {
    const std::string err = want(key, value);
    if (!err.empty()) return "n=" + std::to_string(n) + ": " + err;
  }
  return "";
}

}  // namespace

int main() {
  std::printf("acceptance: glets transform suite (cli: %s)\n", GLETS_CLI_PATH);

  criterion(1, "class counts and irrep inventory via cli info", [] {
    const auto t0 = Clock::now();
    std::string err = check_info(336, 171, 2, 167);
    if (err.empty()) err = check_info(256, 131, 2, 127);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!err.empty()) return err;
    if (secs >= 1.0) return "took " + std::to_string(secs) + "s, limit 1s";
    return std::string();
  });

  criterion(2, "perfect reconstruction, both bases, n up to 1024", [] {
    const auto t0 = Clock::now();
    auto rng = make_rng(1001);
    double worst = 0.0;
    for (int n : {3, 4, 7, 8, 31, 32, 255, 256, 336, 1024}) {
      const std::vector<double> sig = random_signal(rng, n);
      for (Basis basis : {Basis::kRotation, Basis::kReflection}) {
        const glets::Decomposition d = glets::decompose(sig, basis);
        worst = std::max(worst, max_abs_diff(glets::reconstruct(d), sig));
      }
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (worst >= 1e-9) return "max abs error " + std::to_string(worst);
    if (secs >= 30.0) return "took " + std::to_string(secs) + "s, limit 30s";
    return std::string();
  });

  criterion(3, "single-G-let reconstruction, 100 random (n, index) pairs", [] {
    auto rng = make_rng(1002);
    std::uniform_int_distribution<int> dim(3, 256);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const int n = dim(rng);
      std::uniform_int_distribution<int> pick(1, 2 * n);
      const int index = pick(rng);
      const std::vector<double> sig = random_signal(rng, n);
      const glets::GletCoefficients c{index, glets::build_glet(n, index).apply(sig)};
      worst = std::max(worst, max_abs_diff(glets::reconstruct_from_one(c, n), sig));
    }
    if (worst >= 1e-12) return "max abs error " + std::to_string(worst);
    return std::string();
  });

  criterion(4, "n=256 compression: 128 of 255 stored, lossless expand", [] {
    auto rng = make_rng(1003);
    const std::vector<double> sig = random_signal(rng, 256);
    const glets::Decomposition d = glets::decompose(sig, Basis::kRotation);
    const glets::CompressedDecomposition c = glets::compress(d);
    if (c.stored_count() != 128) {
      return "stored " + std::to_string(c.stored_count()) + ", want 128";
    }
    if (d.coefficients.size() != 255) return std::string("projection count != 255");
    if (c.ratio() < 0.45 || c.ratio() > 0.55) {
      return "ratio " + std::to_string(c.ratio()) + " outside [0.45, 0.55]";
    }
    const glets::Decomposition back = glets::expand(c);
    double coeff_err = 0.0;
    for (std::size_t j = 0; j < d.coefficients.size(); ++j) {
      coeff_err = std::max(coeff_err, max_abs_diff(back.coefficients[j].values,
                                                   d.coefficients[j].values));
    }
    if (coeff_err >= 1e-12) {
      return "expanded coefficients differ by " + std::to_string(coeff_err);
    }
    const double err = max_abs_diff(glets::reconstruct(back), sig);
    if (err >= 1e-9) return "reconstruction error " + std::to_string(err);
    return std::string();
  });

  criterion(5, "frequency split: exact additivity and energy identity, n <= 64", [] {
    auto rng = make_rng(1004);
    for (int n = 3; n <= 64; ++n) {
      const std::vector<double> sig = random_signal(rng, n);
      for (int index = 1; index <= 2 * n; ++index) {
        const glets::GletMatrix m = glets::build_glet(n, index);
        const glets::FrequencySplit fs = glets::split(m, sig);
        const std::vector<double> proj = m.apply(sig);
        for (int i = 0; i < n; ++i) {
          if (fs.low[i] + fs.high[i] != proj[i]) {
            return "additivity violated at n=" + std::to_string(n) +
                   " index=" + std::to_string(index);
          }
        }
        if (index <= n) {  // energy identity for the rotation G-lets
          double e_low = 0.0, e_high = 0.0, e_sig = 0.0;
          for (int i = 0; i < n; ++i) {
            e_low += fs.low[i] * fs.low[i];
            e_high += fs.high[i] * fs.high[i];
            e_sig += sig[i] * sig[i];
          }
          if (std::abs(e_low + e_high - e_sig) >= 1e-9) {
            return "energy identity violated at n=" + std::to_string(n) +
                   " index=" + std::to_string(index);
          }
        }
      }
    }
    return std::string();
  });

  criterion(6, "oracle equivalence: 1000 sparse/dense cases, sum identity", [] {
    auto rng = make_rng(1005);
    std::uniform_int_distribution<int> dim(3, 64);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int n = dim(rng);
      std::uniform_int_distribution<int> pick(1, 2 * n);
      const int index = pick(rng);
      const std::vector<double> x = random_signal(rng, n);
      const glets::GletMatrix m = glets::build_glet(n, index);
      const std::vector<double> fast = m.apply(x);
      const std::vector<double> slow = glets::oracle::dense_apply(glets::oracle::densify(m), x);
      worst = std::max(worst, max_abs_diff(fast, slow));
    }
    if (worst >= 1e-12) return "sparse/dense diff " + std::to_string(worst);

    for (int n = 4; n <= 64; n += 2) {
      std::vector<glets::oracle::DenseMatrix> ms;
      for (int i = 1; i < n; ++i) {
        ms.push_back(glets::oracle::densify(glets::build_rotation(n, i)));
      }
      const glets::oracle::DenseMatrix sum = glets::oracle::dense_sum(ms);
      glets::oracle::DenseMatrix minus_i(n);
      for (int i = 0; i < n; ++i) minus_i.at(i, i) = -1.0;
      if (glets::oracle::max_abs_diff(sum, minus_i) >= 1e-12) {
        return "sum identity violated at n=" + std::to_string(n);
      }
    }
    return std::string();
  });

  criterion(7, "generator relations s^2 = (sr)^2 = r^n = id, n <= 32", [] {
    for (int n = 3; n <= 32; ++n) {
      const glets::oracle::DenseMatrix s =
          glets::oracle::densify(glets::build_reflection(n, 1));
      const glets::oracle::DenseMatrix r1 =
          glets::oracle::densify(glets::build_rotation(n, 1));
      const glets::oracle::DenseMatrix id = glets::oracle::identity(n);
      if (glets::oracle::max_abs_diff(glets::oracle::dense_multiply(s, s), id) >= 1e-9) {
        return "s^2 != id at n=" + std::to_string(n);
      }
      const glets::oracle::DenseMatrix sr = glets::oracle::dense_multiply(s, r1);
      if (glets::oracle::max_abs_diff(glets::oracle::dense_multiply(sr, sr), id) >= 1e-9) {
        return "(sr)^2 != id at n=" + std::to_string(n);
      }
      glets::oracle::DenseMatrix power = id;
      for (int i = 0; i < n; ++i) power = glets::oracle::dense_multiply(power, r1);
      if (glets::oracle::max_abs_diff(power, id) >= 1e-9) {
        return "r^n != id at n=" + std::to_string(n);
      }
    }
    return std::string();
  });

  criterion(8, "256x256 image round trip and per-column norms", [] {
    const auto t0 = Clock::now();
    auto rng = make_rng(1006);
    const int n = 256;
    glets::Image img(n, n);
    std::uniform_int_distribution<int> byte(0, 255);
    for (double& p : img.pixels) p = byte(rng);
    const std::string path = temp_path("acceptance.pgm");
    glets::io::write_pgm(path, img);
    const glets::Image loaded = glets::io::read_pgm(path);

    std::vector<glets::ImageDecomposition> parts;
    parts.reserve(n - 1);
    for (int index : glets::decomposition_indices(n, Basis::kRotation)) {
      parts.push_back(glets::project_image(loaded, index, Basis::kRotation));
    }
    // Norm preservation per column, each projection.
    std::vector<double> col_norms(n, 0.0);
    for (int c = 0; c < n; ++c) {
      double acc = 0.0;
      for (int r = 0; r < n; ++r) acc += loaded.at(r, c) * loaded.at(r, c);
      col_norms[c] = std::sqrt(acc);
    }
    for (const glets::ImageDecomposition& p : parts) {
      for (int c = 0; c < n; ++c) {
        double acc = 0.0;
        for (int r = 0; r < n; ++r) acc += p.projected.at(r, c) * p.projected.at(r, c);
        if (std::abs(std::sqrt(acc) - col_norms[c]) >= 1e-9 * std::max(1.0, col_norms[c])) {
          return "column norm drift at projection " + std::to_string(p.glet_index);
        }
      }
    }
    const glets::Image rec =
        glets::reconstruct_image(parts, glets::image_slot_passthrough(loaded, glets::Axis::kCols));
    double worst = 0.0;
    for (std::size_t i = 0; i < rec.pixels.size(); ++i) {
      worst = std::max(worst, std::abs(rec.pixels[i] - loaded.pixels[i]));
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (worst >= 1e-6) return "max pixel error " + std::to_string(worst);
    if (secs >= 60.0) return "took " + std::to_string(secs) + "s, limit 60s";
    return std::string();
  });

  criterion(9, "per-G-let apply scales linearly: t(2n)/t(n) <= 3", [] {
    const int sizes[] = {1 << 10, 1 << 11, 1 << 12};
    const std::vector<glets::bench::SizeTiming> t = glets::bench::measure_all(sizes, 15);
    const glets::bench::SizeTiming& t1 = t[0];
    const glets::bench::SizeTiming& t2 = t[1];
    const glets::bench::SizeTiming& t3 = t[2];
    const double r21 = t2.apply_ns / t1.apply_ns;
    const double r32 = t3.apply_ns / t2.apply_ns;
    const double d21 = t2.decompose_ns / t1.decompose_ns;
    const double d32 = t3.decompose_ns / t2.decompose_ns;
    char info[160];
    std::snprintf(info, sizeof(info),
                  "apply ratios %.2f, %.2f; full decomposition ratios %.2f, %.2f "
                  "(quadratic total work)",
                  r21, r32, d21, d32);
    std::printf("      criterion  9 data: %s\n", info);
    if (r21 > 3.0 || r32 > 3.0) {
      return std::string("apply ratio exceeds 3: ") + info;
    }
    return std::string();
  });

  criterion(10, "file formats: bitwise coefficient round trip, byte-identical PGM", [] {
    auto rng = make_rng(1007);
    // Coefficient files, full and compressed, both parities.
    for (int n : {7, 8}) {
      for (Basis basis : {Basis::kRotation, Basis::kReflection}) {
        const glets::Decomposition d = glets::decompose(random_signal(rng, n), basis);
        const std::string path = temp_path("roundtrip.glet");
        glets::io::write_coefficients(path, d);
        const auto loaded = glets::io::read_coefficients(path);
        const auto& back = std::get<glets::Decomposition>(loaded);
        for (std::size_t j = 0; j < d.coefficients.size(); ++j) {
          if (back.coefficients[j].index != d.coefficients[j].index ||
              std::memcmp(back.coefficients[j].values.data(),
                          d.coefficients[j].values.data(), sizeof(double) * n) != 0) {
            return "coefficient mismatch at n=" + std::to_string(n);
          }
        }
        if (back.slot_passthrough != d.slot_passthrough) {
          return std::string("slot pass-through mismatch");
        }
        if (basis == Basis::kRotation || n % 2 == 0) {
          const glets::CompressedDecomposition c = glets::compress(d);
          const std::string cpath = temp_path("roundtrip_c.glet");
          glets::io::write_coefficients(cpath, c);
          const auto cloaded = glets::io::read_coefficients(cpath);
          const auto& cback = std::get<glets::CompressedDecomposition>(cloaded);
          for (std::size_t j = 0; j < c.representatives.size(); ++j) {
            if (std::memcmp(cback.representatives[j].values.data(),
                            c.representatives[j].values.data(), sizeof(double) * n) != 0) {
              return "compressed representative mismatch at n=" + std::to_string(n);
            }
          }
          const double err =
              max_abs_diff(glets::reconstruct(glets::expand(cback)), glets::reconstruct(d));
          if (err >= 1e-9) return "compressed pipeline error " + std::to_string(err);
        }
      }
    }
    // PGM byte identity.
    glets::Image img(64, 64);
    std::uniform_int_distribution<int> byte(0, 255);
    for (double& p : img.pixels) p = byte(rng);
    const std::string a = temp_path("a.pgm");
    const std::string b = temp_path("b.pgm");
    glets::io::write_pgm(a, img);
    glets::io::write_pgm(b, glets::io::read_pgm(a));
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    const std::string ba((std::istreambuf_iterator<char>(fa)),
                         std::istreambuf_iterator<char>());
    const std::string bb((std::istreambuf_iterator<char>(fb)),
                         std::istreambuf_iterator<char>());
    if (ba != bb || ba.empty()) return std::string("PGM bytes differ after round trip");
    return std::string();
  });

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
