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

#ifndef QMSA_ASYMPTOTICS_HPP_
#define QMSA_ASYMPTOTICS_HPP_

#include <cstddef>
#include <vector>

#include "qmsa/gksl.hpp"
#include "qmsa/structured_linalg.hpp"
#include "qmsa/symbols.hpp"

namespace qmsa {

// Squared (unnormalized) Hilbert-Schmidt norms of the blocks of Phi - Phi~ in
// cyclic ordering. Block 0 is T_0 - C; block j >= 1 is (T_j (+) T_{n-j}) - C.

double toeplitz_circulant_hs2(const TruncatedSymbol& t);
double cyclic_block_hs2_direct(const TruncatedSymbol& t, int j);
/// Per-block closed form, valid for 1 <= j <= n-1.
double cyclic_block_hs2_closed_form(const TruncatedSymbol& t, int j);
/// sum_{j=1}^{n-1} of the block norms:
/// 2 sum_j j(n-j)(t_{-j}+t_{n-j})^2 + sum_{j>=2} j(j-1)(t_j^2+t_{-j}^2).
double cyclic_blocks_hs2_closed_form(const TruncatedSymbol& t);

/// |Phi - Phi~|_{n^2}, summing dense block differences.
double hs_distance_cp_direct(const TruncatedSymbol& t);
double hs_distance_cp_direct(const SymbolSequence& t, int n);
/// Same distance with the cyclic blocks taken from the closed form.
double hs_distance_cp_closed_form(const TruncatedSymbol& t);
double hs_distance_cp_closed_form(const SymbolSequence& t, int n);

/// Squared normalized terms of |L_T - L_C|^2_{n^2}: two Toeplitz-part terms
/// and two G-part terms. The G cyclic term is split into the contributions of
/// the real parts (s - R(k,k+j))^2 and imaginary parts I(k,k+j)^2.
struct WcltDistanceParts {
  double toeplitz_core = 0.0;
  double toeplitz_cyclic = 0.0;
  double toeplitz_cyclic_closed = 0.0;
  double g_core = 0.0;
  double g_cyclic_real = 0.0;
  double g_cyclic_imag = 0.0;
  /// Direct blockwise |L_T - L_C|^2 / n^2.
  double direct_squared = 0.0;

  double g_cyclic() const { return g_cyclic_real + g_cyclic_imag; }
  double four_term_sum() const { return toeplitz_core + toeplitz_cyclic + g_core + g_cyclic(); }
};

WcltDistanceParts wclt_distance_parts(const WcltWindow& w);

enum class StudyKind { Cp, Wclt };

struct EquivalenceRecord {
  int n = 0;
  /// Strong norms of the Toeplitz-type and circulant-type members.
  double norm_a = 0.0;
  double norm_b = 0.0;
  /// ||T_0|| (CP) or ||T_0 + G_0|| (WCLT); and ||C|| or ||Q||.
  double norm_core_a = 0.0;
  double norm_core_b = 0.0;
  double distance = 0.0;
  double distance_closed = 0.0;
  double toeplitz_core = 0.0;
  double toeplitz_cyclic = 0.0;
  double g_core = 0.0;
  double g_cyclic_real = 0.0;
  double g_cyclic_imag = 0.0;
  /// 2 s~^2 / n with s~ = sum |zeta|; zero for CP studies.
  double imag_bound = 0.0;
  /// |four-term sum - d^2| / d^2 (0 when d = 0).
  double decomposition_residual = 0.0;
};

struct StudyOptions {
  double ratio = 0.5;
  /// Allowed increase between consecutive distances.
  double slack = 1e-12;
  double bound_slack = 1e-10;
};

struct EquivalenceReport {
  StudyKind kind = StudyKind::Cp;
  std::vector<int> grid;
  std::vector<EquivalenceRecord> records;
  /// Declared uniform bound M.
  double bound = 0.0;
  StudyOptions options;
  bool uniform_bound_ok = false;
  bool monotone_ok = false;
  double decay_ratio = 0.0;
  bool decay_ok = false;

  bool passed() const { return uniform_bound_ok && monotone_ok && decay_ok; }
};

inline const std::vector<int> kDefaultGrid = {16, 32, 64, 128, 256};

/// Throws std::invalid_argument for negative symbols or a grid that is not
/// strictly increasing with n >= 1.
EquivalenceReport cp_equivalence_study(const SymbolSequence& t, const std::vector<int>& grid,
                                       const StudyOptions& options = {});
EquivalenceReport wclt_equivalence_study(const WcltCoefficients& coeffs, const std::vector<int>& grid,
                                         const StudyOptions& options = {});

struct MomentRow {
  int n = 0;
  int s = 0;
  Complex toeplitz;
  Complex circulant;
  Complex limit;
  double gap_toeplitz_circulant = 0.0;
  double gap_toeplitz_limit = 0.0;
  double gap_circulant_limit = 0.0;
};

struct MomentReport {
  int s_max = 0;
  std::vector<int> grid;
  bool hermitian = true;
  std::vector<MomentRow> rows;
  /// K_s fitted as max n * gap over the two smallest grid points, per s.
  std::vector<double> gap_constants;
  /// n * gap(n, s) <= K_s on every remaining grid point.
  bool shrink_ok = false;

  const MomentRow& at(int n, int s) const;
};

/// (1/n) sum lambda^s for T_0 eigenvalues and for circulant DFT eigenvalues,
/// against the symbol integral evaluated on the window of the largest grid point.
MomentReport moment_compare(const SymbolSequence& t, int s_max, const std::vector<int>& grid);

struct Histogram {
  bool two_dimensional = false;
  int bins = 0;
  double re_min = 0.0;
  double re_max = 0.0;
  double im_min = 0.0;
  double im_max = 0.0;
  /// bins entries, or bins * bins indexed [re_bin * bins + im_bin].
  std::vector<std::size_t> counts;

  std::size_t total() const;
};

/// Spectra with |im| <= imag_tol * max(1, max|lambda|) everywhere give a 1-D
/// histogram over [min re, max re]; others a 2-D (re, im) histogram.
Histogram eigenvalue_histogram(const ComplexVector& values, int bins, double imag_tol = 1e-12);
Histogram eigenvalue_histogram(const Eigen::MatrixXcd& a, int bins);
Histogram eigenvalue_histogram(const BlockDiagonalRep& rep, int bins);

}  // namespace qmsa

#endif  // QMSA_ASYMPTOTICS_HPP_
