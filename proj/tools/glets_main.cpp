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

// Command-line front end. Every command ends with one machine-parsable
// key=value summary line on stdout. Exit codes: 0 success, 1 usage,
// 2 malformed input file, 3 numeric/domain error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "glets/bench.hpp"
#include "glets/dihedral.hpp"
#include "glets/errors.hpp"
#include "glets/frequency.hpp"
#include "glets/image.hpp"
#include "glets/io.hpp"
#include "glets/kernels.hpp"
#include "glets/transform.hpp"

namespace {

using glets::Axis;
using glets::Basis;
using glets::Component;

Basis to_basis(const std::string& s) {
  return s == "reflection" ? Basis::kReflection : Basis::kRotation;
}

Axis to_axis(const std::string& s) {
  if (s == "rows") return Axis::kRows;
  if (s == "both") return Axis::kBoth;
  return Axis::kCols;
}

const char* basis_name(Basis b) {
  return b == Basis::kRotation ? "rotation" : "reflection";
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

double energy(std::span<const double> v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return acc;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

// Writes TSV either to the given path or to stdout.
class TableWriter {
 public:
  explicit TableWriter(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::trunc);
      if (!file_) throw glets::FormatError(path + ": cannot open file for writing");
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string element_label(const glets::GroupElement& e, int n) {
  if (e.kind == glets::ElementKind::kRotation) {
    return "R^" + std::to_string(e.power == 0 ? n : e.power);
  }
  return e.power == 0 ? "S" : "SR^" + std::to_string(e.power);
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

void cmd_info(int n) {
  const glets::DihedralGroup g(n);
  const auto classes = glets::enumerate_classes(g);
  const auto [one_dim, two_dim] = glets::irrep_inventory(n);
  const std::size_t stored =
      glets::compressed_representative_indices(n, Basis::kRotation).size();

  std::cout << "n: " << n << "\n";
  std::cout << "group order: " << 2 * n << "\n";
  std::cout << "conjugacy classes: " << classes.size() << "\n";
  std::cout << "one-dim slots: " << one_dim << "\n";
  std::cout << "two-dim irreps: " << two_dim << "\n";
  std::cout << "projections per basis: " << n - 1 << "\n";
  std::cout << "compression representatives: " << stored << "\n";

  const std::size_t shown = std::min<std::size_t>(classes.size(), 6);
  std::cout << "classes (first " << shown << " of " << classes.size() << "):";
  for (std::size_t i = 0; i < shown; ++i) {
    std::cout << " {";
    const auto& members = classes[i].members;
    for (std::size_t j = 0; j < std::min<std::size_t>(members.size(), 4); ++j) {
      std::cout << (j ? ", " : "") << element_label(members[j], n);
    }
    if (members.size() > 4) std::cout << ", ...";
    std::cout << "}";
  }
  if (classes.size() > shown) std::cout << " ...";
  std::cout << "\n";

  std::cout << "command=info n=" << n << " classes=" << classes.size()
            << " one_dim=" << one_dim << " two_dim=" << two_dim
            << " projections=" << n - 1 << " stored=" << stored << "\n";
}

void cmd_decompose(const std::string& input, const std::string& output, Basis basis) {
  const std::vector<double> sig = glets::io::read_signal_csv(input);
  const glets::Decomposition d = glets::decompose(sig, basis);
  const std::vector<double> rec = glets::reconstruct(d);
  // Reported relative to unit scale so the 1e-9 round-trip expectation
  // holds for signals of any magnitude.
  double scale = 1.0;
  for (double v : sig) scale = std::max(scale, std::abs(v));
  const double err = max_abs_diff(rec, sig) / scale;
  if (!output.empty()) glets::io::write_coefficients(output, d);
  std::cout << "command=decompose n=" << d.n << " basis=" << basis_name(basis)
            << " count=" << d.coefficients.size() << " max_err=" << fmt("%.3e", err)
            << " output=" << (output.empty() ? "-" : output) << "\n";
}

void cmd_reconstruct(const std::string& input, const std::string& output) {
  auto loaded = glets::io::read_coefficients(input);
  const bool expanded = std::holds_alternative<glets::CompressedDecomposition>(loaded);
  const glets::Decomposition d =
      expanded ? glets::expand(std::get<glets::CompressedDecomposition>(loaded))
               : std::get<glets::Decomposition>(loaded);
  const std::vector<double> sig = glets::reconstruct(d);
  if (!output.empty()) glets::io::write_signal_csv(output, sig);
  std::cout << "command=reconstruct n=" << d.n << " basis=" << basis_name(d.basis)
            << " count=" << d.coefficients.size() << " expanded=" << (expanded ? 1 : 0)
            << " output=" << (output.empty() ? "-" : output) << "\n";
}

void cmd_compress(const std::string& input, const std::string& output) {
  auto loaded = glets::io::read_coefficients(input);
  if (!std::holds_alternative<glets::Decomposition>(loaded)) {
    throw glets::DomainError("input is already compressed");
  }
  const auto& d = std::get<glets::Decomposition>(loaded);
  const glets::CompressedDecomposition c = glets::compress(d);
  if (!output.empty()) glets::io::write_coefficients(output, c);
  std::cout << "command=compress n=" << c.n << " basis=" << basis_name(c.basis)
            << " stored=" << c.stored_count() << " of=" << c.n - 1
            << " ratio=" << fmt("%.4f", c.ratio())
            << " output=" << (output.empty() ? "-" : output) << "\n";
}

void cmd_expand(const std::string& input, const std::string& output) {
  auto loaded = glets::io::read_coefficients(input);
  if (!std::holds_alternative<glets::CompressedDecomposition>(loaded)) {
    throw glets::DomainError("input is not a compressed coefficient file");
  }
  const glets::Decomposition d =
      glets::expand(std::get<glets::CompressedDecomposition>(loaded));
  if (!output.empty()) glets::io::write_coefficients(output, d);
  std::cout << "command=expand n=" << d.n << " basis=" << basis_name(d.basis)
            << " count=" << d.coefficients.size()
            << " output=" << (output.empty() ? "-" : output) << "\n";
}

void cmd_freqsplit(const std::string& input, const std::string& output, int glet,
                   double quantile) {
  const std::vector<double> sig = glets::io::read_signal_csv(input);
  const int n = static_cast<int>(sig.size());
  const glets::GletMatrix m = glets::build_glet(n, glet);
  const glets::FrequencySplit fs = glets::split(m, sig);
  const glets::GletCoefficients coeff{glet, m.apply(sig)};
  const auto amp = glets::amplitude_map(coeff, quantile);

  double additivity = 0.0;
  for (int i = 0; i < n; ++i) {
    additivity = std::max(additivity,
                          std::abs(fs.low[i] + fs.high[i] - coeff.values[i]));
  }

  TableWriter table(output);
  table.out() << "# pos\tcoeff\tlow\thigh\tamp\n";
  std::size_t amp_pos = 0;
  for (int i = 0; i < n; ++i) {
    double amp_value = 0.0;
    if (amp_pos < amp.size() && amp[amp_pos].first == i) {
      amp_value = amp[amp_pos].second;
      ++amp_pos;
    }
    table.out() << i << "\t" << fmt("%.17g", coeff.values[i]) << "\t"
                << fmt("%.17g", fs.low[i]) << "\t" << fmt("%.17g", fs.high[i]) << "\t"
                << fmt("%.17g", amp_value) << "\n";
  }

  std::cout << "command=freqsplit n=" << n << " glet=" << glet
            << " low_energy=" << fmt("%.6e", energy(fs.low))
            << " high_energy=" << fmt("%.6e", energy(fs.high))
            << " additivity_err=" << fmt("%.1e", additivity)
            << " amp_retained=" << amp.size()
            << " output=" << (output.empty() ? "-" : output) << "\n";
}

void cmd_multiscale(const std::string& input, const std::string& output, int depth,
                    int glet, Component selector, Basis basis) {
  const std::vector<double> sig = glets::io::read_signal_csv(input);
  const glets::MultiscaleNode root =
      glets::multiscale(sig, depth, selector, glet, basis);

  TableWriter table(output);
  table.out() << "# level\tglet\tlow_energy\thigh_energy\n";
  int levels = 0;
  for (const glets::MultiscaleNode* node = &root; node != nullptr;
       node = node->child.get()) {
    ++levels;
    for (const glets::FrequencySplit& fs : node->splits) {
      table.out() << node->depth << "\t" << fs.index << "\t"
                  << fmt("%.6e", energy(fs.low)) << "\t" << fmt("%.6e", energy(fs.high))
                  << "\n";
    }
  }
  std::cout << "command=multiscale n=" << sig.size() << " levels=" << levels
            << " glet=" << glet
            << " selector=" << (selector == Component::kLow ? "low" : "high")
            << " basis=" << basis_name(basis)
            << " output=" << (output.empty() ? "-" : output) << "\n";
}

void cmd_image(const std::string& input, const std::string& output, Basis basis,
               Axis axis, int glet, double quantile) {
  const glets::Image img = glets::io::read_pgm(input);
  if (!img.square()) {
    throw glets::DomainError("unsupported shape: " + std::to_string(img.width) + "x" +
                             std::to_string(img.height) + " (square image required)");
  }
  const int n = img.height;

  std::vector<glets::ImageDecomposition> parts;
  parts.reserve(static_cast<std::size_t>(n) - 1);
  for (int index : glets::decomposition_indices(n, basis)) {
    parts.push_back(glets::project_image(img, index, basis, axis));
  }
  glets::Image rec = (axis == Axis::kBoth)
                         ? glets::reconstruct_image_from_one(parts.front())
                         : glets::reconstruct_image(
                               parts, glets::image_slot_passthrough(img, axis));
  const double err = max_abs_diff(rec.pixels, img.pixels);

  std::ostringstream extra;
  std::string written = "-";
  if (glet > 0) {
    const glets::ImageDecomposition pd = glets::project_image(img, glet, basis, axis);
    const glets::GletCoefficients flat{glet, pd.projected.pixels};
    extra << " glet=" << glet
          << " amp_retained=" << glets::amplitude_map(flat, quantile).size();
    if (!output.empty()) {
      glets::io::write_pgm(output, glets::render_projection(pd));
      written = output;
    }
  } else if (!output.empty()) {
    glets::io::write_pgm(output, rec);
    written = output;
  }

  std::cout << "command=image n=" << n << " basis=" << basis_name(basis)
            << " axis=" << (axis == Axis::kCols ? "cols" : axis == Axis::kRows ? "rows" : "both")
            << " count=" << parts.size() << " max_err=" << fmt("%.3e", err)
            << extra.str() << " output=" << written << "\n";
}

void cmd_bench(const std::vector<int>& sizes, const std::string& output) {
  TableWriter table(output);
  table.out() << "# n\tapply_ns\tdecompose_ns\n";
  for (const glets::bench::SizeTiming& t : glets::bench::measure_all(sizes)) {
    table.out() << t.n << "\t" << fmt("%.1f", t.apply_ns) << "\t"
                << fmt("%.1f", t.decompose_ns) << "\n";
  }
  std::cout << "command=bench rows=" << sizes.size()
            << " backend=" << glets::kernels::active_backend()
            << " output=" << (output.empty() ? "-" : output) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"G-let transform: orthogonal signal decomposition over dihedral groups"};
  app.require_subcommand(1);

  std::string input, output;
  std::string basis_str = "rotation";
  std::string axis_str = "cols";
  std::string component_str = "low";
  int n = 0;
  int glet = 0;
  int depth = 1;
  double quantile = 0.9;
  std::vector<int> sizes{1024, 2048, 4096};

  const auto basis_check = CLI::IsMember({"rotation", "reflection"});
  const auto axis_check = CLI::IsMember({"cols", "rows", "both"});
  const auto component_check = CLI::IsMember({"low", "high"});

  auto* info = app.add_subcommand("info", "Group structure and transform bookkeeping");
  info->add_option("--n", n, "signal dimension")->required();
  info->callback([&] { cmd_info(n); });

  auto* dec = app.add_subcommand("decompose", "Project a CSV signal onto a G-let basis");
  dec->add_option("--input", input, "signal CSV")->required();
  dec->add_option("--output", output, "coefficient file");
  dec->add_option("--basis", basis_str, "rotation|reflection")->check(basis_check);
  dec->callback([&] { cmd_decompose(input, output, to_basis(basis_str)); });

  auto* rec = app.add_subcommand("reconstruct", "Rebuild the signal from a coefficient file");
  rec->add_option("--input", input, "coefficient file")->required();
  rec->add_option("--output", output, "signal CSV");
  rec->callback([&] { cmd_reconstruct(input, output); });

  auto* comp = app.add_subcommand("compress", "Keep one record set per conjugacy class");
  comp->add_option("--input", input, "full coefficient file")->required();
  comp->add_option("--output", output, "compressed coefficient file");
  comp->callback([&] { cmd_compress(input, output); });

  auto* exp = app.add_subcommand("expand", "Regenerate a full decomposition");
  exp->add_option("--input", input, "compressed coefficient file")->required();
  exp->add_option("--output", output, "full coefficient file");
  exp->callback([&] { cmd_expand(input, output); });

  auto* freq = app.add_subcommand("freqsplit", "Low/high frequency split of one G-let");
  freq->add_option("--input", input, "signal CSV")->required();
  freq->add_option("--glet", glet, "G-let index (1..2n)")->required();
  freq->add_option("--quantile", quantile, "amplitude quantile in (0,1)");
  freq->add_option("--output", output, "TSV output (default stdout)");
  freq->callback([&] { cmd_freqsplit(input, output, glet, quantile); });

  auto* multi = app.add_subcommand("multiscale", "Recursive re-decomposition of one component");
  multi->add_option("--input", input, "signal CSV")->required();
  multi->add_option("--depth", depth, "number of levels (1..8)")->required();
  multi->add_option("--glet", glet, "G-let index re-decomposed at each level")->required();
  multi->add_option("--component", component_str, "low|high")->check(component_check);
  multi->add_option("--basis", basis_str, "rotation|reflection")->check(basis_check);
  multi->add_option("--output", output, "TSV output (default stdout)");
  multi->callback([&] {
    cmd_multiscale(input, output, depth, glet,
                   component_str == "high" ? Component::kHigh : Component::kLow,
                   to_basis(basis_str));
  });

  auto* image = app.add_subcommand("image", "Decompose and reconstruct a PGM image");
  image->add_option("--input", input, "PGM image (P5)")->required();
  image->add_option("--output", output, "PGM output (projection render or reconstruction)");
  image->add_option("--basis", basis_str, "rotation|reflection")->check(basis_check);
  image->add_option("--axis", axis_str, "cols|rows|both")->check(axis_check);
  image->add_option("--glet", glet, "render this G-let's projection");
  image->add_option("--quantile", quantile, "amplitude quantile in (0,1)");
  image->callback([&] {
    cmd_image(input, output, to_basis(basis_str), to_axis(axis_str), glet, quantile);
  });

  auto* bench = app.add_subcommand("bench", "Kernel and decomposition timing table");
  bench->add_option("--sizes", sizes, "comma-separated dimensions")->delimiter(',');
  bench->add_option("--output", output, "TSV output (default stdout)");
  bench->callback([&] { cmd_bench(sizes, output); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const glets::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const glets::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
