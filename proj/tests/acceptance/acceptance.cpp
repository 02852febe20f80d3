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


// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "qmsa/asymptotics.hpp"
#include "qmsa/gksl.hpp"
#include "qmsa/random.hpp"
#include "qmsa/spectral.hpp"
#include "qmsa/superop.hpp"

using namespace qmsa;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double max_abs(const Eigen::MatrixXcd& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

double rel_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::vector<double> random_row(SplitMix64& rng, int n) {
  std::vector<double> row(static_cast<std::size_t>(n));
  for (auto& v : row) v = rng.uniform();
  return row;
}

SymbolSequence tridiag() { return SymbolSequence::explicit_coeffs({{-1, 1.0}, {0, 2.0}, {1, 1.0}}); }

Outcome oracle_equivalence() {
  SplitMix64 rng(42);
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const auto diag = BasisOrdering::diagonal(n);
    const auto cyc = BasisOrdering::cyclic(n);
    for (int trial = 0; trial < 20; ++trial) {
      const CpToeplitzMap phi(truncate(random_symbol(rng, n - 1), n));
      worst = std::max(worst, max_abs(full_superoperator(phi, diag) - block_rep_toeplitz(phi).dense()));
      const CpCirculantMap phic{CirculantMatrix(random_row(rng, n))};
      worst = std::max(worst, max_abs(full_superoperator(phic, cyc) - block_rep_circulant(phic).dense()));
      const WcltGenerator gen(random_coefficients(rng, n - 1), n);
      worst = std::max(worst, max_abs(full_superoperator(gen, diag) - block_rep_wclt(gen).dense()));
    }
  }
  return {worst <= 1e-12, "max entry deviation " + fmt("%.3e", worst) + " (tol 1e-12)"};
}

Outcome complete_positivity() {
  SplitMix64 rng(42);
  double worst = INFINITY;
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const CpToeplitzMap phi(truncate(random_symbol(rng, n - 1), n));
      worst = std::min(worst, min_hermitian_eigenvalue(choi_matrix(phi, n)));
      const CpCirculantMap phic{CirculantMatrix(random_row(rng, n))};
      worst = std::min(worst, min_hermitian_eigenvalue(choi_matrix(phic, n)));
    }
  }
  const CpToeplitzMap bad(SymbolSequence::explicit_coeffs({{-1, 0.5}, {0, 1.0}, {1, -0.5}}), 4,
                          Admissibility::Unchecked);
  const double control = min_hermitian_eigenvalue(choi_matrix(bad, 4));
  return {worst >= -1e-10 && control < -1e-10,
          "min Choi eigenvalue " + fmt("%.3e", worst) + ", negated-t1 control " + fmt("%.3e", control)};
}

Outcome block_norm_identities() {
  SplitMix64 rng(42);
  double item1 = 0.0;
  double item2 = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = random_symbol(rng, rng.integer(0, 7));
    for (int n : {4, 8, 16, 32, 64}) {
      const auto w = truncate(t, n);
      double direct_total = 0.0;
      for (int j = 1; j < n; ++j) {
        const double direct = cyclic_block_hs2_direct(w, j);
        item1 = std::max(item1, rel_gap(direct, cyclic_block_hs2_closed_form(w, j)));
        direct_total += direct;
      }
      item2 = std::max(item2, rel_gap(direct_total, cyclic_blocks_hs2_closed_form(w)));
    }
  }
  return {item1 <= 1e-10 && item2 <= 1e-10,
          "per-block rel " + fmt("%.3e", item1) + ", summed rel " + fmt("%.3e", item2) + " (tol 1e-10)"};
}

Outcome aux_relations() {
  SplitMix64 rng(42);
  double printed = 0.0;
  double corrected = 0.0;
  double tail = 0.0;
  double margin = INFINITY;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(2, 64);
    const auto r = aux_identities(random_coefficients(rng, rng.integer(1, 10)), n);
    printed = std::max(printed, std::abs(r.pair_residual_printed));
    corrected = std::max(corrected, std::abs(r.pair_residual));
    tail = std::max(tail, std::abs(r.tail_residual));
    margin = std::min(margin, r.margin);
  }
  return {printed <= 1e-12 && tail <= 1e-12 && margin >= 0.0,
          "item (2) residual " + fmt("%.3e", printed) + " [with (n-1)/2 factor: " + fmt("%.3e", corrected) +
              "], item (3) residual " + fmt("%.3e", tail) + ", item (1) margin " + fmt("%.3e", margin)};
}

std::string study_detail(const EquivalenceReport& r) {
  double top = 0.0;
  for (const auto& rec : r.records) top = std::max({top, rec.norm_a, rec.norm_b});
  return "d_16 " + fmt("%.6f", r.records.front().distance) + ", d_256 " + fmt("%.6f", r.records.back().distance) +
         ", ratio " + fmt("%.4f", r.decay_ratio) + ", monotone " + (r.monotone_ok ? "yes" : "no") +
         ", max norm " + fmt("%.12f", top) + " (M " + fmt("%.4f", r.bound) + ")";
}

Outcome cp_decay() {
  StudyOptions opts;
  opts.ratio = 0.5;
  const auto r = cp_equivalence_study(SymbolSequence::geometric(1.0, 0.5), kDefaultGrid, opts);
  bool norms = true;
  for (const auto& rec : r.records) norms = norms && rec.norm_a <= 3.0 + 1e-10 && rec.norm_b <= 3.0 + 1e-10;
  return {r.monotone_ok && r.decay_ok && norms, study_detail(r)};
}

Outcome wclt_decay() {
  StudyOptions opts;
  opts.ratio = 0.6;
  const auto coeffs = parse_coefficients_spec(
      R"({"gamma_plus":"geo:0.6","gamma_minus":"geo:0.6","zeta_plus":"geo:0.4","zeta_minus":"geo:0.4"})");
  const auto r = wclt_equivalence_study(coeffs, kDefaultGrid, opts);
  double residual = 0.0;
  for (const auto& rec : r.records) residual = std::max(residual, rec.decomposition_residual);
  return {r.monotone_ok && r.decay_ok && residual <= 1e-10,
          study_detail(r) + ", four-term rel " + fmt("%.3e", residual)};
}

Outcome moment_agreement() {
  const std::vector<int> grid = {3, 4, 8, 16, 32, 64, 128, 256};
  const auto rep = moment_compare(tridiag(), 4, grid);
  double second_t = 0.0;
  double second_c = 0.0;
  double limit = 0.0;
  for (int n : grid) {
    const auto& row = rep.at(n, 2);
    second_t = std::max(second_t, std::abs(row.toeplitz - Complex(6.0 - 2.0 / n)));
    second_c = std::max(second_c, std::abs(row.circulant - Complex(6.0)));
    limit = std::max(limit, std::abs(row.limit - Complex(6.0)));
  }
  const auto& s3 = rep.at(256, 3);
  const auto& s4 = rep.at(256, 4);
  const bool pass = second_t <= 1e-12 && second_c <= 1e-12 && limit <= 1e-12 && s3.gap_toeplitz_circulant <= 0.05 &&
                    s4.gap_toeplitz_circulant <= 0.05;
  return {pass, "s=2 dev toeplitz " + fmt("%.1e", second_t) + " circulant " + fmt("%.1e", second_c) + " limit " +
                    fmt("%.1e", limit) + "; n=256 gap s=3 " + fmt("%.6f", s3.gap_toeplitz_circulant) + " s=4 " +
                    fmt("%.6f", s4.gap_toeplitz_circulant) + " (tol 0.05; relative s=4 " +
                    fmt("%.6f", s4.gap_toeplitz_circulant / std::abs(s4.circulant)) + ")"};
}

Outcome spectrum_corollary() {
  double eig = 0.0;
  double vec = 0.0;
  for (int n : {4, 8, 16}) {
    const CpToeplitzMap phi(tridiag(), n);
    const auto values = spectrum(block_rep_toeplitz(phi));
    for (double want : {1.0, 2.0, 3.0}) eig = std::max(eig, distance_to_spectrum(want, values));
    for (const auto& p : guaranteed_eigenpairs(phi)) vec = std::max(vec, max_abs(phi(p.vector) - p.value * p.vector));
  }
  SplitMix64 rng(42);
  bool unions = true;
  double union_dev = 0.0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& t : {tridiag(), random_symbol(rng, 3)}) {
      const CpToeplitzMap phi(t, n);
      const auto m = match_multisets(eigenvalues(full_superoperator(phi, BasisOrdering::diagonal(n))),
                                     spectrum(block_rep_toeplitz(phi)), 1e-8);
      unions = unions && m.matched;
      union_dev = std::max(union_dev, m.max_deviation);
    }
  }
  return {eig <= 1e-9 && vec <= 1e-9 && unions,
          "eigenvalue dist " + fmt("%.1e", eig) + ", eigenvector residual " + fmt("%.1e", vec) +
              ", union max dev " + fmt("%.1e", union_dev)};
}

Outcome wclt_structure() {
  SplitMix64 rng(42);
  double g_gap = 0.0;
  double psi_excess = -INFINITY;
  double dissipative_excess = -INFINITY;
  double hypot_excess = -INFINITY;
  double identity = 0.0;
  double adjoint = 0.0;
  for (int n : {2, 3, 5, 8, 16, 32, 64}) {
    for (int trial = 0; trial < 3; ++trial) {
      auto coeffs = random_coefficients(rng, rng.integer(1, 10));
      const auto w = truncate(coeffs, n);
      const WcltGenerator gen(w);
      const double s = partial_sums(w).s;
      g_gap = std::max(g_gap, max_abs(Eigen::MatrixXcd(g_diagonal(w).asDiagonal()) - g_operator_shift_sum(w)));
      const double psi = strong_norm(regroup_cyclic(block_rep_psi(gen), n));
      psi_excess = std::max(psi_excess, psi - s);
      double sigma = 0.0;
      for (int m = 1; m < n; ++m) {
        sigma += std::abs(w.zeta_plus[static_cast<std::size_t>(m)]) + std::abs(w.zeta_minus[static_cast<std::size_t>(m)]);
      }
      hypot_excess = std::max(hypot_excess, psi - std::hypot(s, sigma));
      coeffs.zeta_plus = SymbolSequence::explicit_coeffs({});
      coeffs.zeta_minus = SymbolSequence::explicit_coeffs({});
      const WcltGenerator dissipative(coeffs, n);
      dissipative_excess = std::max(dissipative_excess, strong_norm(regroup_cyclic(block_rep_psi(dissipative), n)) - s);
      identity = std::max(identity, max_abs(gen(Eigen::MatrixXcd::Identity(n, n))));
      const Eigen::MatrixXcd x = random_matrix(rng, n);
      adjoint = std::max(adjoint, max_abs(gen(x.adjoint()) - gen(x).adjoint()));
    }
  }
  return {g_gap <= 1e-12 && psi_excess <= 1e-10 && identity <= 1e-12 && adjoint <= 1e-12,
          "G closed vs shift sum " + fmt("%.1e", g_gap) + ", max(|Psi| - s) " + fmt("%.3e", psi_excess) +
              " (tol 1e-10; zeta = 0: " + fmt("%.3e", dissipative_excess) + ", vs sqrt(s^2 + sigma^2): " +
              fmt("%.3e", hypot_excess) + "), |L(I)| " + fmt("%.1e", identity) + ", |L(x*) - L(x)*| " +
              fmt("%.1e", adjoint)};
}

Outcome circulant_generator_checks() {
  SplitMix64 rng(42);
  double rows = 0.0;
  double eig = 0.0;
  double zero = 0.0;
  bool matched = true;
  for (int n : {1, 2, 5, 16, 64, 128}) {
    const auto gen = circulant_generator(random_symbol(rng, 6), n);
    const Eigen::MatrixXd q = gen.q().dense();
    rows = std::max(rows, q.rowwise().sum().cwiseAbs().maxCoeff());
    const auto values = gen.eigenvalues();
    const auto m = match_multisets(values, eigenvalues(q), 1e-9);
    matched = matched && m.matched;
    eig = std::max(eig, m.max_deviation);
    zero = std::max(zero, distance_to_spectrum(0.0, values));
  }
  return {rows <= 1e-12 && matched && zero <= 1e-12,
          "row sums " + fmt("%.1e", rows) + ", DFT vs dense " + fmt("%.1e", eig) + ", zero eigenvalue dist " +
              fmt("%.1e", zero)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget_s;
  };
  const std::vector<Criterion> criteria = {
      {1, "oracle equivalence of block representations", oracle_equivalence, 10.0},
      {2, "complete positivity via Choi matrices", complete_positivity, 0.0},
      {3, "block Hilbert-Schmidt identities", block_norm_identities, 5.0},
      {4, "auxiliary partial-sum relations", aux_relations, 0.0},
      {5, "CP decay proxy", cp_decay, 30.0},
      {6, "WCLT decay proxy", wclt_decay, 60.0},
      {7, "moment agreement", moment_agreement, 0.0},
      {8, "spectrum corollary", spectrum_corollary, 0.0},
      {9, "WCLT structure", wclt_structure, 0.0},
      {10, "circulant generator", circulant_generator_checks, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass;
    std::string timing = fmt("%.2fs", secs);
    if (c.budget_s > 0.0) {
      timing += fmt(" (budget %.0fs)", c.budget_s);
      pass = pass && secs < c.budget_s;
    }
    if (!pass) ++failures;
    std::printf("%s [%2d] %s: %s; %s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
