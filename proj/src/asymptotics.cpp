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

#include "qmsa/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qmsa/spectral.hpp"
#include "qmsa/superop.hpp"

namespace qmsa {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

double sq(double x) { return x * x; }

// |blockdiag(T_j, T_{n-j}) - C|^2 from dense T_0 and C.
double cyclic_block_hs2(const Eigen::MatrixXd& t0, const Eigen::MatrixXd& c, int j) {
  const auto n = t0.rows();
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(n, n);
  block.topLeftCorner(n - j, n - j) = t0.topLeftCorner(n - j, n - j);
  block.bottomRightCorner(j, j) = t0.topLeftCorner(j, j);
  return (block - c).squaredNorm();
}

void check_grid(const std::vector<int>& grid) {
  if (grid.empty()) throw std::invalid_argument("study grid is empty");
  for (std::size_t q = 0; q < grid.size(); ++q) {
    if (grid[q] < 1) throw std::invalid_argument("grid points must be >= 1");
    if (q > 0 && grid[q] <= grid[q - 1]) throw std::invalid_argument("grid must be strictly increasing");
  }
}

void apply_verdicts(EquivalenceReport& report) {
  const auto& opt = report.options;
  report.uniform_bound_ok = true;
  report.monotone_ok = true;
  for (std::size_t q = 0; q < report.records.size(); ++q) {
    const auto& r = report.records[q];
    if (r.norm_a > report.bound + opt.bound_slack || r.norm_b > report.bound + opt.bound_slack) {
      report.uniform_bound_ok = false;
    }
    if (q > 0 && r.distance > report.records[q - 1].distance + opt.slack) report.monotone_ok = false;
  }
  const double first = report.records.front().distance;
  const double last = report.records.back().distance;
  report.decay_ratio = first > 0.0 ? last / first : 0.0;
  report.decay_ok = report.decay_ratio <= opt.ratio;
}

}  // namespace

double toeplitz_circulant_hs2(const TruncatedSymbol& t) {
  return (toeplitz_from_symbol(t).dense() - circulant_from_symbol(t).dense()).squaredNorm();
}

double cyclic_block_hs2_direct(const TruncatedSymbol& t, int j) {
  const int n = t.order();
  if (j < 1 || j > n - 1) throw std::out_of_range("cyclic block index must lie in [1, n-1]");
  return cyclic_block_hs2(toeplitz_from_symbol(t).dense(), circulant_from_symbol(t).dense(), j);
}

double cyclic_block_hs2_closed_form(const TruncatedSymbol& t, int j) {
  const int n = t.order();
  if (j < 1 || j > n - 1) throw std::out_of_range("cyclic block index must lie in [1, n-1]");
  double off_block = 0.0;
  for (int l = 0; l < j; ++l) {
    for (int k = 1; k <= n - j; ++k) off_block += sq(t[-n + k + l] + t[k + l]);
  }
  double upper = 0.0;
  for (int k = j; k < n; ++k) upper += (k - j) * (sq(t[k]) + sq(t[-k]));
  double lower = 0.0;
  for (int k = 1; k < j; ++k) lower += (j - k) * (sq(t[n - k]) + sq(t[-(n - k)]));
  return 2.0 * off_block + upper + lower;
}

double cyclic_blocks_hs2_closed_form(const TruncatedSymbol& t) {
  const int n = t.order();
  double wrap = 0.0;
  for (int j = 1; j < n; ++j) wrap += static_cast<double>(j) * (n - j) * sq(t[-j] + t[n - j]);
  double tails = 0.0;
  for (int j = 2; j < n; ++j) tails += static_cast<double>(j) * (j - 1) * (sq(t[j]) + sq(t[-j]));
  return 2.0 * wrap + tails;
}

double hs_distance_cp_direct(const TruncatedSymbol& t) {
  const int n = t.order();
  const Eigen::MatrixXd t0 = toeplitz_from_symbol(t).dense();
  const Eigen::MatrixXd c = circulant_from_symbol(t).dense();
  double total = (t0 - c).squaredNorm();
  for (int j = 1; j < n; ++j) total += cyclic_block_hs2(t0, c, j);
  return std::sqrt(total) / n;
}

double hs_distance_cp_direct(const SymbolSequence& t, int n) { return hs_distance_cp_direct(truncate(t, n)); }

double hs_distance_cp_closed_form(const TruncatedSymbol& t) {
  const int n = t.order();
  return std::sqrt(toeplitz_circulant_hs2(t) + cyclic_blocks_hs2_closed_form(t)) / n;
}

double hs_distance_cp_closed_form(const SymbolSequence& t, int n) { return hs_distance_cp_closed_form(truncate(t, n)); }

WcltDistanceParts wclt_distance_parts(const WcltWindow& w) {
  const int n = w.order;
  const double n2 = static_cast<double>(n) * n;
  const TruncatedSymbol t = w.toeplitz_symbol();
  const Eigen::MatrixXd t0 = toeplitz_from_symbol(t).dense();
  const Eigen::MatrixXd c = circulant_from_symbol(t).dense();
  const auto sums = partial_sums(w);
  const double s = sums.s;
  const Eigen::MatrixXcd q = (c - c.row(0).sum() * Eigen::MatrixXd::Identity(n, n)).cast<Complex>();

  WcltDistanceParts parts;
  parts.toeplitz_core = (t0 - c).squaredNorm() / n2;
  parts.toeplitz_cyclic_closed = cyclic_blocks_hs2_closed_form(t) / n2;

  double direct = (t0.cast<Complex>() + Eigen::MatrixXcd(g_block_diagonal(w, 0).asDiagonal()) - q).squaredNorm();
  double toeplitz_cyclic = 0.0;
  for (int j = 1; j < n; ++j) {
    toeplitz_cyclic += cyclic_block_hs2(t0, c, j);
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(n, n);
    block.topLeftCorner(n - j, n - j) = t0.topLeftCorner(n - j, n - j).cast<Complex>();
    block.topLeftCorner(n - j, n - j).diagonal() += g_block_diagonal(w, -j);
    block.bottomRightCorner(j, j) = t0.topLeftCorner(j, j).cast<Complex>();
    block.bottomRightCorner(j, j).diagonal() += g_block_diagonal(w, n - j);
    direct += (block - q).squaredNorm();
  }
  parts.toeplitz_cyclic = toeplitz_cyclic / n2;
  parts.direct_squared = direct / n2;

  const auto& sk = sums.s_k;
  const auto& zk = sums.s_tilde_k;
  double g_core = 0.0;
  for (int k = 0; k < n; ++k) g_core += sq(s - sk[idx(k)]);
  parts.g_core = g_core / n2;

  // G_{-j} covers pairs (k, k+j); G_{n-j} covers pairs (k, k+n-j), k < j.
  double real = 0.0;
  double imag = 0.0;
  auto add_pair = [&](int k, int gap) {
    const double r = 0.5 * (sk[idx(k)] + sk[idx(k + gap)]);
    const double i = zk[idx(k)] - zk[idx(k + gap)];
    real += sq(s - r);
    imag += sq(i);
  };
  for (int j = 1; j < n; ++j) {
    for (int k = 0; k + j < n; ++k) add_pair(k, j);
    for (int k = 0; k < j; ++k) add_pair(k, n - j);
  }
  parts.g_cyclic_real = real / n2;
  parts.g_cyclic_imag = imag / n2;
  return parts;
}

EquivalenceReport cp_equivalence_study(const SymbolSequence& t, const std::vector<int>& grid,
                                       const StudyOptions& options) {
  check_grid(grid);
  if (!t.nonnegative()) throw std::invalid_argument("CP study requires a non-negative symbol");
  EquivalenceReport report;
  report.kind = StudyKind::Cp;
  report.grid = grid;
  report.options = options;
  report.bound = t.l1_norm();

  for (int n : grid) {
    const TruncatedSymbol window = truncate(t, n);
    const CpToeplitzMap phi(window);
    const CpCirculantMap phi_circ(circulant_from_symbol(window));
    const double n2 = static_cast<double>(n) * n;

    EquivalenceRecord r;
    r.n = n;
    r.norm_a = strong_norm(block_rep_toeplitz(phi));
    r.norm_b = strong_norm(block_rep_circulant(phi_circ));
    r.norm_core_a = strong_norm(phi.toeplitz().dense());
    r.norm_core_b = strong_norm(phi_circ.circulant().dense());
    r.distance = hs_distance_cp_direct(window);
    r.distance_closed = hs_distance_cp_closed_form(window);
    r.toeplitz_core = toeplitz_circulant_hs2(window) / n2;
    r.toeplitz_cyclic = r.distance * r.distance - r.toeplitz_core;
    const double closed_sq = r.toeplitz_core + cyclic_blocks_hs2_closed_form(window) / n2;
    const double direct_sq = r.distance * r.distance;
    r.decomposition_residual = direct_sq > 0.0 ? std::abs(closed_sq - direct_sq) / direct_sq : 0.0;
    report.records.push_back(r);
  }
  apply_verdicts(report);
  return report;
}

EquivalenceReport wclt_equivalence_study(const WcltCoefficients& coeffs, const std::vector<int>& grid,
                                         const StudyOptions& options) {
  check_grid(grid);
  coeffs.validate();
  EquivalenceReport report;
  report.kind = StudyKind::Wclt;
  report.grid = grid;
  report.options = options;
  report.bound = 2.0 * coeffs.gamma_l1();

  for (int n : grid) {
    const WcltWindow window = truncate(coeffs, n);
    const WcltGenerator gen(window);
    const CirculantGenerator circ = circulant_generator(window);
    const auto parts = wclt_distance_parts(window);

    EquivalenceRecord r;
    r.n = n;
    const BlockDiagonalRep rep = block_rep_wclt(gen);
    r.norm_a = strong_norm(rep);
    r.norm_b = strong_norm(circ.block_rep());
    r.norm_core_a = strong_norm(*rep.block(0).matrix);
    r.norm_core_b = strong_norm(circ.q().dense());
    r.distance = std::sqrt(parts.direct_squared);
    r.distance_closed = std::sqrt(parts.toeplitz_core + parts.toeplitz_cyclic_closed + parts.g_core + parts.g_cyclic());
    r.toeplitz_core = parts.toeplitz_core;
    r.toeplitz_cyclic = parts.toeplitz_cyclic;
    r.g_core = parts.g_core;
    r.g_cyclic_real = parts.g_cyclic_real;
    r.g_cyclic_imag = parts.g_cyclic_imag;
    double zeta_abs = 0.0;
    for (int m = 1; m < n; ++m) zeta_abs += std::abs(window.zeta_plus[idx(m)]) + std::abs(window.zeta_minus[idx(m)]);
    r.imag_bound = 2.0 * zeta_abs * zeta_abs / n;
    r.decomposition_residual = parts.direct_squared > 0.0
                                   ? std::abs(parts.four_term_sum() - parts.direct_squared) / parts.direct_squared
                                   : 0.0;
    report.records.push_back(r);
  }
  apply_verdicts(report);
  return report;
}

const MomentRow& MomentReport::at(int n, int s) const {
  for (const auto& row : rows) {
    if (row.n == n && row.s == s) return row;
  }
  throw std::out_of_range("no moment row for n = " + std::to_string(n) + ", s = " + std::to_string(s));
}

namespace {

Complex mean_power(const ComplexVector& values, int s) {
  Complex total = 0.0;
  for (Complex v : values) total += std::pow(v, s);
  return total / static_cast<double>(values.size());
}

}  // namespace

MomentReport moment_compare(const SymbolSequence& t, int s_max, const std::vector<int>& grid) {
  check_grid(grid);
  if (s_max < 1) throw std::invalid_argument("s_max must be >= 1");
  MomentReport report;
  report.s_max = s_max;
  report.grid = grid;
  report.hermitian = t.hermitian();

  const TruncatedSymbol limit_window = truncate(t, grid.back());
  std::vector<Complex> limits;
  for (int s = 1; s <= s_max; ++s) limits.push_back(symbol_moment(limit_window, s).value);

  for (int n : grid) {
    const TruncatedSymbol window = truncate(t, n);
    const ComplexVector toeplitz_eigs = eigenvalues(toeplitz_from_symbol(window).dense());
    const ComplexVector circulant_eigs = circulant_eigenvalues(circulant_from_symbol(window));
    for (int s = 1; s <= s_max; ++s) {
      MomentRow row;
      row.n = n;
      row.s = s;
      row.toeplitz = mean_power(toeplitz_eigs, s);
      row.circulant = mean_power(circulant_eigs, s);
      row.limit = limits[idx(s - 1)];
      if (report.hermitian) {
        row.toeplitz = row.toeplitz.real();
        row.circulant = row.circulant.real();
      }
      row.gap_toeplitz_circulant = std::abs(row.toeplitz - row.circulant);
      row.gap_toeplitz_limit = std::abs(row.toeplitz - row.limit);
      row.gap_circulant_limit = std::abs(row.circulant - row.limit);
      report.rows.push_back(row);
    }
  }

  report.shrink_ok = true;
  for (int s = 1; s <= s_max; ++s) {
    double k_fit = 0.0;
    for (std::size_t q = 0; q < grid.size(); ++q) {
      const auto& row = report.at(grid[q], s);
      const double scaled = row.n * row.gap_toeplitz_circulant;
      if (q < 2) {
        k_fit = std::max(k_fit, scaled);
      } else if (scaled > k_fit * (1.0 + 1e-6) + 1e-9) {
        report.shrink_ok = false;
      }
    }
    report.gap_constants.push_back(k_fit);
  }
  return report;
}

std::size_t Histogram::total() const {
  std::size_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

namespace {

void widen(double& lo, double& hi) {
  if (hi > lo) return;
  lo -= 0.5;
  hi += 0.5;
}

int bin_of(double x, double lo, double hi, int bins) {
  const auto b = static_cast<int>(std::floor((x - lo) / (hi - lo) * bins));
  return std::clamp(b, 0, bins - 1);
}

}  // namespace

Histogram eigenvalue_histogram(const ComplexVector& values, int bins, double imag_tol) {
  if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");
  if (values.empty()) throw std::invalid_argument("histogram of an empty spectrum");
  Histogram h;
  h.bins = bins;
  double scale = 1.0;
  for (Complex v : values) scale = std::max(scale, std::abs(v));
  h.re_min = h.re_max = values.front().real();
  h.im_min = h.im_max = values.front().imag();
  for (Complex v : values) {
    h.re_min = std::min(h.re_min, v.real());
    h.re_max = std::max(h.re_max, v.real());
    h.im_min = std::min(h.im_min, v.imag());
    h.im_max = std::max(h.im_max, v.imag());
    if (std::abs(v.imag()) > imag_tol * scale) h.two_dimensional = true;
  }
  widen(h.re_min, h.re_max);
  if (!h.two_dimensional) {
    h.im_min = h.im_max = 0.0;
    h.counts.assign(idx(bins), 0);
    for (Complex v : values) ++h.counts[idx(bin_of(v.real(), h.re_min, h.re_max, bins))];
    return h;
  }
  widen(h.im_min, h.im_max);
  h.counts.assign(idx(bins) * idx(bins), 0);
  for (Complex v : values) {
    const int a = bin_of(v.real(), h.re_min, h.re_max, bins);
    const int b = bin_of(v.imag(), h.im_min, h.im_max, bins);
    ++h.counts[idx(a) * idx(bins) + idx(b)];
  }
  return h;
}

Histogram eigenvalue_histogram(const Eigen::MatrixXcd& a, int bins) { return eigenvalue_histogram(eigenvalues(a), bins); }

Histogram eigenvalue_histogram(const BlockDiagonalRep& rep, int bins) { return eigenvalue_histogram(spectrum(rep), bins); }

}  // namespace qmsa
