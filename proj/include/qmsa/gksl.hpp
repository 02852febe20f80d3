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

#ifndef QMSA_GKSL_HPP_
#define QMSA_GKSL_HPP_

#include <vector>

#include "qmsa/structured_linalg.hpp"
#include "qmsa/superop.hpp"
#include "qmsa/symbols.hpp"

namespace qmsa {

/// s = sum Gamma, s~ = sum zeta, and the per-level sums
/// s(k) = sum_{m=1}^{n-1-k} Gamma+_m + sum_{m=1}^{k} Gamma-_m (likewise s~(k)).
struct PartialSums {
  double s = 0.0;
  double s_tilde = 0.0;
  std::vector<double> s_k;
  std::vector<double> s_tilde_k;
};

PartialSums partial_sums(const WcltWindow& w);
PartialSums partial_sums(const WcltCoefficients& coeffs, int n);

/// Diagonal of G: -(s(k)/2 + i s~(k)).
Eigen::VectorXcd g_diagonal(const WcltWindow& w);
Eigen::MatrixXcd g_operator(const WcltCoefficients& coeffs, int n);

/// G = -1/2 Phi(I) - iH assembled from explicit shift-matrix products
/// S*^m S^m and S^m S*^m. Independent of the partial-sum closed form.
Eigen::MatrixXcd g_operator_shift_sum(const WcltWindow& w);

/// Diagonal of G_l, the restriction of Psi(x) = G*x + xG to V_l.
Eigen::VectorXcd g_block_diagonal(const WcltWindow& w, int l);
Eigen::MatrixXcd g_block(const WcltCoefficients& coeffs, int n, int l);

/// L(x) = Phi(x) + G*x + xG with the Toeplitz dissipative part
/// t_m = Gamma-_m, t_{-m} = Gamma+_m.
class WcltGenerator {
 public:
  explicit WcltGenerator(WcltWindow window);
  WcltGenerator(const WcltCoefficients& coeffs, int n);

  int order() const { return window_.order; }
  const WcltWindow& window() const { return window_; }
  const CpToeplitzMap& dissipative() const { return phi_; }
  const Eigen::VectorXcd& g() const { return g_; }

  Eigen::MatrixXcd operator()(const Eigen::MatrixXcd& x) const;
  /// Psi(x) = G*x + xG.
  Eigen::MatrixXcd psi(const Eigen::MatrixXcd& x) const;

 private:
  WcltWindow window_;
  CpToeplitzMap phi_;
  Eigen::VectorXcd g_;
};

Eigen::MatrixXcd apply_wclt(const WcltGenerator& gen, const Eigen::MatrixXcd& x);

/// Blocks T_{|l|} + G_l in diagonal ordering.
BlockDiagonalRep block_rep_wclt(const WcltGenerator& gen);
/// Blocks G_l of Psi alone, diagonal ordering.
BlockDiagonalRep block_rep_psi(const WcltGenerator& gen);

/// L_C(x) = Phi~(x) - s x with s = sum_j c_j; associated matrix Q = C - s I.
class CirculantGenerator {
 public:
  /// Throws std::invalid_argument for negative coefficients.
  explicit CirculantGenerator(CirculantMatrix c);

  int order() const { return c_.order(); }
  const CirculantMatrix& circulant() const { return c_; }
  double total() const { return s_; }
  /// Circulant matrix Q = C - s I.
  CirculantMatrix q() const;

  Eigen::MatrixXcd operator()(const Eigen::MatrixXcd& x) const;
  /// n shared copies of Q in cyclic ordering.
  BlockDiagonalRep block_rep() const;
  /// gamma_k - s.
  ComplexVector eigenvalues() const;

 private:
  CirculantMatrix c_;
  CpCirculantMap phi_;
  double s_;
};

CirculantGenerator circulant_generator(const SymbolSequence& t, int n);
CirculantGenerator circulant_generator(std::vector<double> row);
/// Comparison generator built from the Toeplitz symbol of a WCLT window.
CirculantGenerator circulant_generator(const WcltWindow& w);

/// Residuals of the auxiliary partial-sum relations.
///
/// margin: min over j, k of s - (s(k)+s(k+j))/2 (zero when there are no pairs).
/// weighted_sum: sum_m m (Gamma+_m + Gamma-_m).
/// pair_sum: sum_{j,k} [s - (s(k)+s(k+j))/2].
/// pair_residual_printed: pair_sum - (n-1) * weighted_sum, the relation as it
///   is usually quoted. It does not vanish: every level k belongs to n-1
///   pairs, so pair_sum == (n-1)/2 * weighted_sum.
/// pair_residual: pair_sum - (n-1)/2 * weighted_sum.
/// tail_residual: sum_k [sum_{m=n-k}^{n-1} Gamma+_m + sum_{m=k+1}^{n-1} Gamma-_m] - weighted_sum.
struct AuxIdentityReport {
  double margin = 0.0;
  double weighted_sum = 0.0;
  double pair_sum = 0.0;
  double pair_residual_printed = 0.0;
  double pair_residual = 0.0;
  double tail_sum = 0.0;
  double tail_residual = 0.0;
};

AuxIdentityReport aux_identities(const WcltWindow& w);
AuxIdentityReport aux_identities(const WcltCoefficients& coeffs, int n);

}  // namespace qmsa

#endif  // QMSA_GKSL_HPP_
