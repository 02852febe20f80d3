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

#include "qmsa/gksl.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace qmsa {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// prefix[k] = sum_{m=1}^{k} v[m], k = 0..n-1.
std::vector<long double> prefix_sums(const std::vector<double>& v) {
  std::vector<long double> prefix(v.size(), 0.0L);
  for (std::size_t m = 1; m < v.size(); ++m) prefix[m] = prefix[m - 1] + v[m];
  return prefix;
}

struct LevelSums {
  long double total = 0.0L;
  std::vector<long double> level;
};

LevelSums level_sums(const std::vector<double>& plus, const std::vector<double>& minus, int n) {
  const auto p = prefix_sums(plus);
  const auto q = prefix_sums(minus);
  LevelSums out;
  out.total = p[idx(n - 1)] + q[idx(n - 1)];
  out.level.resize(idx(n));
  for (int k = 0; k < n; ++k) out.level[idx(k)] = p[idx(n - 1 - k)] + q[idx(k)];
  return out;
}

}  // namespace

PartialSums partial_sums(const WcltWindow& w) {
  const int n = w.order;
  const auto gamma = level_sums(w.gamma_plus, w.gamma_minus, n);
  const auto zeta = level_sums(w.zeta_plus, w.zeta_minus, n);
  PartialSums out;
  out.s = static_cast<double>(gamma.total);
  out.s_tilde = static_cast<double>(zeta.total);
  out.s_k.assign(gamma.level.begin(), gamma.level.end());
  out.s_tilde_k.assign(zeta.level.begin(), zeta.level.end());
  return out;
}

PartialSums partial_sums(const WcltCoefficients& coeffs, int n) { return partial_sums(truncate(coeffs, n)); }

Eigen::VectorXcd g_diagonal(const WcltWindow& w) {
  const auto sums = partial_sums(w);
  Eigen::VectorXcd g(w.order);
  for (int k = 0; k < w.order; ++k) g(k) = -Complex(sums.s_k[idx(k)] / 2.0, sums.s_tilde_k[idx(k)]);
  return g;
}

Eigen::MatrixXcd g_operator(const WcltCoefficients& coeffs, int n) {
  return g_diagonal(truncate(coeffs, n)).asDiagonal();
}

Eigen::MatrixXcd g_operator_shift_sum(const WcltWindow& w) {
  const int n = w.order;
  const Eigen::MatrixXd s = left_shift(n);
  Eigen::MatrixXd s_power = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd phi_identity = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd hamiltonian = Eigen::MatrixXd::Zero(n, n);
  for (int m = 1; m < n; ++m) {
    s_power = s_power * s;
    const Eigen::MatrixXd lower = s_power.transpose() * s_power;  // S*^m S^m
    const Eigen::MatrixXd upper = s_power * s_power.transpose();  // S^m S*^m
    phi_identity += w.gamma_minus[idx(m)] * lower + w.gamma_plus[idx(m)] * upper;
    hamiltonian += w.zeta_minus[idx(m)] * lower + w.zeta_plus[idx(m)] * upper;
  }
  return -0.5 * phi_identity.cast<Complex>() - Complex(0.0, 1.0) * hamiltonian.cast<Complex>();
}

Eigen::VectorXcd g_block_diagonal(const WcltWindow& w, int l) {
  const int n = w.order;
  const int a = std::abs(l);
  if (a > n - 1) {
    throw std::out_of_range("block label " + std::to_string(l) + " outside [-(n-1), n-1]");
  }
  const auto sums = partial_sums(w);
  Eigen::VectorXcd d(n - a);
  for (int k = 0; k + a < n; ++k) {
    if (l == 0) {
      d(k) = -sums.s_k[idx(k)];
      continue;
    }
    const double real = 0.5 * (sums.s_k[idx(k)] + sums.s_k[idx(k + a)]);
    const double imag = (l > 0 ? 1.0 : -1.0) * (sums.s_tilde_k[idx(k)] - sums.s_tilde_k[idx(k + a)]);
    d(k) = -Complex(real, imag);
  }
  return d;
}

Eigen::MatrixXcd g_block(const WcltCoefficients& coeffs, int n, int l) {
  return g_block_diagonal(truncate(coeffs, n), l).asDiagonal();
}

WcltGenerator::WcltGenerator(WcltWindow window)
    : window_(std::move(window)), phi_(window_.toeplitz_symbol()), g_(g_diagonal(window_)) {}

WcltGenerator::WcltGenerator(const WcltCoefficients& coeffs, int n) : WcltGenerator(truncate(coeffs, n)) {}

Eigen::MatrixXcd WcltGenerator::psi(const Eigen::MatrixXcd& x) const {
  if (x.rows() != order() || x.cols() != order()) {
    throw std::invalid_argument("generator input must be " + std::to_string(order()) + "x" +
                                std::to_string(order()));
  }
  return g_.conjugate().asDiagonal() * x + x * g_.asDiagonal();
}

Eigen::MatrixXcd WcltGenerator::operator()(const Eigen::MatrixXcd& x) const { return phi_(x) + psi(x); }

Eigen::MatrixXcd apply_wclt(const WcltGenerator& gen, const Eigen::MatrixXcd& x) { return gen(x); }

namespace {

BlockDiagonalRep wclt_blocks(const WcltGenerator& gen, bool with_dissipative) {
  const int n = gen.order();
  const ToeplitzMatrix t0 = gen.dissipative().toeplitz();
  BlockDiagonalRep rep(Ordering::Diagonal);
  auto make = [&](int l) {
    Eigen::MatrixXcd block = g_block_diagonal(gen.window(), l).asDiagonal();
    if (with_dissipative) block += principal_submatrix(t0, std::abs(l)).dense().cast<Complex>();
    return std::make_shared<const Eigen::MatrixXcd>(std::move(block));
  };
  rep.add(0, make(0));
  for (int l = 1; l < n; ++l) {
    auto lower = make(-l);
    auto upper = make(l);
    rep.add(-l, lower);
    rep.add(l, *upper == *lower ? lower : upper);
  }
  return rep;
}

}  // namespace

BlockDiagonalRep block_rep_wclt(const WcltGenerator& gen) { return wclt_blocks(gen, true); }

BlockDiagonalRep block_rep_psi(const WcltGenerator& gen) { return wclt_blocks(gen, false); }

namespace {

const CirculantMatrix& checked(const CirculantMatrix& c) {
  for (double v : c.row()) {
    if (v < 0.0) throw std::invalid_argument("circulant generator requires non-negative coefficients");
  }
  return c;
}

}  // namespace

CirculantGenerator::CirculantGenerator(CirculantMatrix c)
    : c_(checked(c)), phi_(c_), s_(c_.row_sum()) {}

CirculantMatrix CirculantGenerator::q() const {
  std::vector<double> row = c_.row();
  row[0] -= s_;
  return CirculantMatrix(std::move(row));
}

Eigen::MatrixXcd CirculantGenerator::operator()(const Eigen::MatrixXcd& x) const { return phi_(x) - s_ * x; }

BlockDiagonalRep CirculantGenerator::block_rep() const {
  auto block = std::make_shared<const Eigen::MatrixXcd>(q().dense().cast<Complex>());
  BlockDiagonalRep rep(Ordering::Cyclic);
  for (int j = 0; j < order(); ++j) rep.add(j, block);
  return rep;
}

ComplexVector CirculantGenerator::eigenvalues() const {
  ComplexVector values = circulant_eigenvalues(c_);
  for (auto& v : values) v -= s_;
  return values;
}

CirculantGenerator circulant_generator(const SymbolSequence& t, int n) {
  return CirculantGenerator(circulant_from_symbol(t, n));
}

CirculantGenerator circulant_generator(std::vector<double> row) { return CirculantGenerator(CirculantMatrix(std::move(row))); }

CirculantGenerator circulant_generator(const WcltWindow& w) {
  return CirculantGenerator(circulant_from_symbol(w.toeplitz_symbol()));
}

AuxIdentityReport aux_identities(const WcltWindow& w) {
  const int n = w.order;
  const auto sums = level_sums(w.gamma_plus, w.gamma_minus, n);
  const long double s = sums.total;

  long double weighted = 0.0L;
  for (int m = 1; m < n; ++m) weighted += static_cast<long double>(m) * (w.gamma_plus[idx(m)] + w.gamma_minus[idx(m)]);

  long double pair_sum = 0.0L;
  long double margin = std::numeric_limits<long double>::infinity();
  for (int j = 1; j < n; ++j) {
    for (int k = 0; k + j < n; ++k) {
      const long double gap = s - (sums.level[idx(k)] + sums.level[idx(k + j)]) / 2.0L;
      pair_sum += gap;
      margin = std::min(margin, gap);
    }
  }
  if (n < 2) margin = 0.0L;

  long double tail = 0.0L;
  for (int k = 0; k < n; ++k) {
    for (int m = n - k; m <= n - 1; ++m) tail += w.gamma_plus[idx(m)];
    for (int m = k + 1; m <= n - 1; ++m) tail += w.gamma_minus[idx(m)];
  }

  AuxIdentityReport r;
  r.margin = static_cast<double>(margin);
  r.weighted_sum = static_cast<double>(weighted);
  r.pair_sum = static_cast<double>(pair_sum);
  r.pair_residual_printed = static_cast<double>(pair_sum - (n - 1) * weighted);
  r.pair_residual = static_cast<double>(pair_sum - (n - 1) * weighted / 2.0L);
  r.tail_sum = static_cast<double>(tail);
  r.tail_residual = static_cast<double>(tail - weighted);
  return r;
}

AuxIdentityReport aux_identities(const WcltCoefficients& coeffs, int n) { return aux_identities(truncate(coeffs, n)); }

}  // namespace qmsa
