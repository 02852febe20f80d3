// Copyright 2026 The QMSA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qmsa/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "qmsa/asymptotics.hpp"
#include "qmsa/gksl.hpp"
#include "qmsa/random.hpp"
#include "qmsa/report_io.hpp"
#include "qmsa/spectral.hpp"
#include "qmsa/superop.hpp"

namespace qmsa {

namespace {

struct Config {
  std::string symbol;
  std::string coeffs;
  std::string grid = "16,32,64,128,256";
  int s_max = 4;
  std::string out;
  double tol = -1.0;  // < 0: command default
  double ratio = 0.5;
  std::uint64_t seed = 42;
  bool expect_cp = false;
  int n = -1;  // < 0: command default
  int bins = 20;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::shared_ptr<spdlog::logger> logger() {
  auto log = spdlog::get("qmsa");
  if (!log) {
    log = spdlog::stderr_color_mt("qmsa");
    const char* level = std::getenv("QMSA_LOG");
    log->set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
  }
  return log;
}

// Inline spec, or the contents of a file when the text names one.
std::string read_spec(const std::string& text) {
  std::error_code ec;
  if (!text.empty() && std::filesystem::is_regular_file(text, ec)) {
    std::ifstream f(text);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  return text;
}

SymbolSequence load_symbol(const Config& cfg) {
  if (cfg.symbol.empty()) throw UsageError("--symbol is required");
  return parse_symbol_spec(read_spec(cfg.symbol));
}

WcltCoefficients load_coefficients(const Config& cfg) {
  if (cfg.coeffs.empty()) throw UsageError("--coeffs is required");
  return parse_coefficients_spec(read_spec(cfg.coeffs));
}

double tol_or(const Config& cfg, double fallback) { return cfg.tol >= 0.0 ? cfg.tol : fallback; }

struct CheckLog {
  std::ostream& out;
  bool ok = true;

  void check(const std::string& name, double residual, double tol, bool pass) {
    out << (pass ? "PASS " : "FAIL ") << name << " residual=" << format_real(residual)
        << " tol=" << format_real(tol) << '\n';
    ok = ok && pass;
  }
  void at_most(const std::string& name, double residual, double tol) { check(name, residual, tol, residual <= tol); }
};

double max_abs(const Eigen::MatrixXcd& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

void write_reports(const std::string& prefix, const nlohmann::json& j, const std::string& csv) {
  if (prefix.empty()) return;
  write_text_file(prefix + ".json", j.dump(2) + "\n");
  write_text_file(prefix + ".csv", csv);
}

int cmd_equiv(const Config& cfg, StudyKind kind, std::ostream& out) {
  const auto grid = parse_grid(cfg.grid);
  StudyOptions opts;
  opts.ratio = cfg.ratio;
  const double tol = tol_or(cfg, 1e-9);
  EquivalenceReport report = kind == StudyKind::Cp ? cp_equivalence_study(load_symbol(cfg), grid, opts)
                                                   : wclt_equivalence_study(load_coefficients(cfg), grid, opts);

  out << "n,norm_a,norm_b,d_n,d_n_closed\n";
  double closed_gap = 0.0;
  double decomposition = 0.0;
  double max_norm = 0.0;
  for (const auto& r : report.records) {
    out << r.n << ',' << format_real(r.norm_a) << ',' << format_real(r.norm_b) << ',' << format_real(r.distance)
        << ',' << format_real(r.distance_closed) << '\n';
    const double scale = std::max(r.distance, r.distance_closed);
    if (scale > 0.0) closed_gap = std::max(closed_gap, std::abs(r.distance - r.distance_closed) / scale);
    decomposition = std::max(decomposition, r.decomposition_residual);
    max_norm = std::max({max_norm, r.norm_a, r.norm_b});
    logger()->info("n={} d_n={} closed={}", r.n, r.distance, r.distance_closed);
  }

  CheckLog log{out};
  log.check("uniform_bound", max_norm, report.bound + report.options.bound_slack, report.uniform_bound_ok);
  log.check("monotone", 0.0, report.options.slack, report.monotone_ok);
  log.at_most("decay_ratio", report.decay_ratio, report.options.ratio);
  log.at_most("closed_form", closed_gap, tol);
  log.at_most("decomposition", decomposition, tol);

  std::ostringstream csv;
  write_csv(csv, report);
  write_reports(cfg.out, to_json(report), csv.str());
  return log.ok ? kExitPass : kExitVerdict;
}

int cmd_oracle(const Config& cfg, std::ostream& out) {
  const int n = cfg.n < 0 ? 6 : cfg.n;
  if (n < 1 || n > kSuperoperatorMaxOrder) {
    throw UsageError("oracle suite needs 1 <= n <= " + std::to_string(kSuperoperatorMaxOrder) + ", got " +
                     std::to_string(n));
  }
  const double tol = tol_or(cfg, 1e-12);
  SplitMix64 rng(cfg.seed);
  const SymbolSequence symbol = cfg.symbol.empty() ? random_symbol(rng, n - 1) : load_symbol(cfg);
  const WcltCoefficients coeffs = cfg.coeffs.empty() ? random_coefficients(rng, n - 1) : load_coefficients(cfg);
  const TruncatedSymbol window = truncate(symbol, n);

  const CpToeplitzMap phi(window, Admissibility::Unchecked);
  const CpCirculantMap phic(circulant_from_symbol(window), Admissibility::Unchecked);
  const WcltGenerator gen(coeffs, n);
  const auto diag = BasisOrdering::diagonal(n);
  const auto cyc = BasisOrdering::cyclic(n);

  CheckLog log{out};
  const BlockDiagonalRep rep = block_rep_toeplitz(phi);
  log.at_most("toeplitz_block_rep", max_abs(full_superoperator(phi, diag) - rep.dense()), tol);
  log.at_most("toeplitz_cyclic_regroup", max_abs(full_superoperator(phi, cyc) - regroup_cyclic(rep, n).dense()), tol);
  log.at_most("circulant_block_rep", max_abs(full_superoperator(phic, cyc) - block_rep_circulant(phic).dense()), tol);
  log.at_most("wclt_block_rep", max_abs(full_superoperator(gen, diag) - block_rep_wclt(gen).dense()), tol);
  log.at_most("wclt_identity", max_abs(gen(Eigen::MatrixXcd::Identity(n, n))), tol);
  const Eigen::MatrixXcd x = random_matrix(rng, n);
  log.at_most("wclt_adjoint", max_abs(gen(x.adjoint()) - gen(x).adjoint()), tol);

  if (cfg.expect_cp) {
    if (n > kChoiMaxOrder) {
      out << "SKIP choi n=" << n << " exceeds " << kChoiMaxOrder << '\n';
    } else {
      const double floor = -1e-10;
      const double toeplitz_min = min_hermitian_eigenvalue(choi_matrix(phi, n));
      const double circulant_min = min_hermitian_eigenvalue(choi_matrix(phic, n));
      log.check("choi_toeplitz_min_eig", toeplitz_min, floor, toeplitz_min >= floor);
      log.check("choi_circulant_min_eig", circulant_min, floor, circulant_min >= floor);
    }
  }
  return log.ok ? kExitPass : kExitVerdict;
}

int cmd_spectrum(const Config& cfg, std::ostream& out) {
  const int n = cfg.n < 0 ? 8 : cfg.n;
  if (n < 1) throw UsageError("--n must be >= 1");
  if (cfg.bins < 1) throw UsageError("--bins must be >= 1");
  const double tol = tol_or(cfg, 1e-9);
  const TruncatedSymbol window = truncate(load_symbol(cfg), n);
  const CpToeplitzMap phi(window, Admissibility::Unchecked);
  const BlockDiagonalRep rep = block_rep_toeplitz(phi);
  const auto labeled = block_eigenvalues(rep);
  ComplexVector values;
  for (const auto& v : labeled) values.push_back(v.value);

  CheckLog log{out};
  log.at_most("t0_eigenvalue", distance_to_spectrum(window[0], values), tol);
  if (n >= 3 && window[1] > 0.0 && window[-1] > 0.0) {
    for (const auto& pair : guaranteed_eigenpairs(phi)) {
      const std::string tag = "(" + format_real(pair.value) + ")";
      log.at_most("guaranteed_eigenvalue" + tag, distance_to_spectrum(pair.value, values), tol);
      log.at_most("guaranteed_eigenvector" + tag, max_abs(phi(pair.vector) - pair.value * pair.vector), tol);
    }
  }
  if (n <= kChoiMaxOrder) {
    const auto match = match_multisets(eigenvalues(full_superoperator(phi, BasisOrdering::diagonal(n))), values, 1e-8);
    log.check("spectrum_union", match.max_deviation, 1e-8, match.matched);
  }
  const CirculantMatrix circ = circulant_from_symbol(window);
  const ComplexVector dft = circulant_eigenvalues(circ);
  const auto circ_match = match_multisets(dft, eigenvalues(circ.dense()), tol);
  log.check("circulant_dft", circ_match.max_deviation, tol, circ_match.matched);

  if (!cfg.out.empty()) {
    std::ostringstream eig, circ_csv, hist;
    write_eigenvalue_csv(eig, labeled);
    std::vector<LabeledEigenvalue> circ_labeled;
    for (std::size_t k = 0; k < dft.size(); ++k) circ_labeled.push_back({static_cast<int>(k), dft[k]});
    write_eigenvalue_csv(circ_csv, circ_labeled);
    write_csv(hist, eigenvalue_histogram(values, cfg.bins));
    write_text_file(cfg.out + ".csv", eig.str());
    write_text_file(cfg.out + "_circulant.csv", circ_csv.str());
    write_text_file(cfg.out + "_hist.csv", hist.str());
  }
  return log.ok ? kExitPass : kExitVerdict;
}

int cmd_moments(const Config& cfg, std::ostream& out) {
  if (cfg.s_max < 1 || cfg.s_max > 8) throw UsageError("--s-max must lie in [1, 8]");
  const auto grid = parse_grid(cfg.grid);
  const MomentReport report = moment_compare(load_symbol(cfg), cfg.s_max, grid);
  out << "n,s,gap_toeplitz_circulant,gap_toeplitz_limit\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.s << ',' << format_real(r.gap_toeplitz_circulant) << ','
        << format_real(r.gap_toeplitz_limit) << '\n';
  }
  CheckLog log{out};
  log.check("gap_shrink", 0.0, 0.0, report.shrink_ok);
  std::ostringstream csv;
  write_csv(csv, report);
  write_reports(cfg.out, to_json(report), csv.str());
  return log.ok ? kExitPass : kExitVerdict;
}

}  // namespace

std::vector<int> parse_grid(const std::string& text) {
  std::vector<int> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("grid entry '" + item + "' is not an integer");
    }
    if (used != item.size()) throw std::invalid_argument("grid entry '" + item + "' is not an integer");
    if (v < 2) throw std::invalid_argument("grid entries must be >= 2");
    if (!grid.empty() && v <= grid.back()) throw std::invalid_argument("grid must be strictly increasing");
    grid.push_back(v);
  }
  if (grid.empty()) throw std::invalid_argument("grid is empty");
  return grid;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Toeplitz and circulant CP maps, GKSL generators and their asymptotic equivalence"};
  app.require_subcommand(1);

  auto add_symbol = [&](CLI::App* sub) {
    sub->add_option("--symbol", cfg.symbol, "geo:<r>[:<scale>], delta:<c>, JSON text or a JSON file");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "output path prefix"); };
  auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", cfg.tol, "tolerance override"); };
  auto add_grid = [&](CLI::App* sub) { sub->add_option("--grid", cfg.grid, "comma-separated n-grid")->capture_default_str(); };

  auto* equiv = app.add_subcommand("equiv", "asymptotic-equivalence study");
  equiv->require_subcommand(1);
  auto* cp = equiv->add_subcommand("cp", "CP Toeplitz vs circulant maps");
  auto* wclt = equiv->add_subcommand("wclt", "WCLT generator vs circulant generator");
  for (auto* sub : {cp, wclt}) {
    add_grid(sub);
    add_out(sub);
    add_tol(sub);
    sub->add_option("--ratio", cfg.ratio, "decay-ratio threshold")->capture_default_str();
  }
  add_symbol(cp);
  wclt->add_option("--coeffs", cfg.coeffs, "WCLT coefficients as JSON text or a JSON file");

  auto* oracle = app.add_subcommand("oracle", "dense oracle checks at small n");
  add_symbol(oracle);
  oracle->add_option("--coeffs", cfg.coeffs, "WCLT coefficients (random when omitted)");
  oracle->add_option("--n", cfg.n, "matrix order (default 6, at most 12)");
  oracle->add_option("--seed", cfg.seed, "SplitMix64 seed")->capture_default_str();
  oracle->add_flag("--expect-cp", cfg.expect_cp, "also require positive Choi matrices");
  add_tol(oracle);

  auto* spec = app.add_subcommand("spectrum", "block spectrum of the CP Toeplitz map");
  add_symbol(spec);
  spec->add_option("--n", cfg.n, "matrix order (default 8)");
  spec->add_option("--bins", cfg.bins, "histogram bins")->capture_default_str();
  add_out(spec);
  add_tol(spec);

  auto* moments = app.add_subcommand("moments", "eigenvalue moments against the symbol integral");
  add_symbol(moments);
  add_grid(moments);
  moments->add_option("--s-max", cfg.s_max, "largest moment exponent, 1..8")->capture_default_str();
  add_out(moments);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (cp->parsed()) return cmd_equiv(cfg, StudyKind::Cp, out);
    if (wclt->parsed()) return cmd_equiv(cfg, StudyKind::Wclt, out);
    if (oracle->parsed()) return cmd_oracle(cfg, out);
    if (spec->parsed()) return cmd_spectrum(cfg, out);
    return cmd_moments(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace qmsa
