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

#include "qmsa/superop.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qmsa {

namespace {

void require_square(const Eigen::MatrixXcd& x, int n) {
  if (x.rows() != n || x.cols() != n) {
    throw std::invalid_argument("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix, got " +
                                std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
}

}  // namespace

void BasisOrdering::push(int row, int col) {
  positions_[static_cast<std::size_t>(row * n_ + col)] = static_cast<int>(units_.size());
  units_.emplace_back(row, col);
}

BasisOrdering BasisOrdering::diagonal(int n) {
  if (n < 1) throw std::invalid_argument("ordering needs n >= 1");
  BasisOrdering o(Ordering::Diagonal, n);
  o.positions_.assign(static_cast<std::size_t>(n * n), -1);
  o.segments_.push_back({0, 0, n});
  for (int i = 0; i < n; ++i) o.push(i, i);
  for (int l = 1; l < n; ++l) {
    o.segments_.push_back({-l, static_cast<int>(o.units_.size()), n - l});
    for (int i = 0; i + l < n; ++i) o.push(i, i + l);
    o.segments_.push_back({l, static_cast<int>(o.units_.size()), n - l});
    for (int i = 0; i + l < n; ++i) o.push(i + l, i);
  }
  return o;
}

BasisOrdering BasisOrdering::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("ordering needs n >= 1");
  BasisOrdering o(Ordering::Cyclic, n);
  o.positions_.assign(static_cast<std::size_t>(n * n), -1);
  for (int j = 0; j < n; ++j) {
    o.segments_.push_back({j, static_cast<int>(o.units_.size()), n});
    for (int i = 0; i < n; ++i) o.push(i, (i + j) % n);
  }
  return o;
}

const BasisOrdering::Segment& BasisOrdering::segment(int label) const {
  for (const auto& s : segments_) {
    if (s.label == label) return s;
  }
  throw std::out_of_range("no segment with label " + std::to_string(label));
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& x, const BasisOrdering& ordering) {
  require_square(x, ordering.order());
  Eigen::VectorXcd v(ordering.size());
  for (int p = 0; p < ordering.size(); ++p) {
    const auto [row, col] = ordering.unit(p);
    v(p) = x(row, col);
  }
  return v;
}

Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, const BasisOrdering& ordering) {
  if (v.size() != ordering.size()) {
    throw std::invalid_argument("vector of length " + std::to_string(v.size()) + " does not match n^2 = " +
                                std::to_string(ordering.size()));
  }
  const int n = ordering.order();
  Eigen::MatrixXcd x(n, n);
  for (int p = 0; p < ordering.size(); ++p) {
    const auto [row, col] = ordering.unit(p);
    x(row, col) = v(p);
  }
  return x;
}

namespace {

int order_from_length(Eigen::Index length) {
  const auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(length))));
  if (n < 1 || static_cast<Eigen::Index>(n) * n != length) {
    throw std::invalid_argument("vector length " + std::to_string(length) + " is not a positive square");
  }
  return n;
}

}  // namespace

Eigen::VectorXcd vec_diagonal(const Eigen::MatrixXcd& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("vectorization needs a square matrix");
  return vectorize(x, BasisOrdering::diagonal(static_cast<int>(x.rows())));
}

Eigen::MatrixXcd unvec_diagonal(const Eigen::VectorXcd& v) {
  return unvectorize(v, BasisOrdering::diagonal(order_from_length(v.size())));
}

Eigen::VectorXcd vec_cyclic(const Eigen::MatrixXcd& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("vectorization needs a square matrix");
  return vectorize(x, BasisOrdering::cyclic(static_cast<int>(x.rows())));
}

Eigen::MatrixXcd unvec_cyclic(const Eigen::VectorXcd& v) {
  return unvectorize(v, BasisOrdering::cyclic(order_from_length(v.size())));
}

std::vector<int> permutation_diag_to_cyclic(int n) {
  const auto diag = BasisOrdering::diagonal(n);
  const auto cyc = BasisOrdering::cyclic(n);
  std::vector<int> perm(static_cast<std::size_t>(n * n));
  for (int c = 0; c < cyc.size(); ++c) {
    const auto [row, col] = cyc.unit(c);
    perm[static_cast<std::size_t>(c)] = diag.position(row, col);
  }
  return perm;
}

Eigen::MatrixXd left_shift(int n) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) s(i - 1, i) = 1.0;
  return s;
}

Eigen::MatrixXd cyclic_shift(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) j((i - 1 + n) % n, i) = 1.0;
  return j;
}

CpToeplitzMap::CpToeplitzMap(TruncatedSymbol t, Admissibility check) : t_(std::move(t)) {
  if (check == Admissibility::Enforce && !t_.nonnegative()) {
    throw std::invalid_argument("CP Toeplitz map requires non-negative coefficients");
  }
}

CpToeplitzMap::CpToeplitzMap(const SymbolSequence& t, int n, Admissibility check)
    : CpToeplitzMap(truncate(t, n), check) {}

Eigen::MatrixXcd CpToeplitzMap::operator()(const Eigen::MatrixXcd& x) const {
  const int n = order();
  require_square(x, n);
  // S*^j x S^j moves x down the diagonal by j; S^j x S*^j moves it up.
  Eigen::MatrixXcd out = t_[0] * x;
  for (int j = 1; j < n; ++j) {
    const int m = n - j;
    if (t_[j] != 0.0) out.bottomRightCorner(m, m) += t_[j] * x.topLeftCorner(m, m);
    if (t_[-j] != 0.0) out.topLeftCorner(m, m) += t_[-j] * x.bottomRightCorner(m, m);
  }
  return out;
}

CpCirculantMap::CpCirculantMap(CirculantMatrix c, Admissibility check) : c_(std::move(c)) {
  if (check == Admissibility::Enforce) {
    for (double v : c_.row()) {
      if (v < 0.0) throw std::invalid_argument("CP circulant map requires non-negative coefficients");
    }
  }
}

Eigen::MatrixXcd CpCirculantMap::operator()(const Eigen::MatrixXcd& x) const {
  const int n = order();
  require_square(x, n);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    const double weight = c_.row()[static_cast<std::size_t>((n - j) % n)];
    if (weight == 0.0) continue;
    // (J*^j x J^j)(a, b) = x(a - j, b - j), indices mod n.
    for (int b = 0; b < n; ++b) {
      const int src_col = (b - j + n) % n;
      for (int a = 0; a < n; ++a) out(a, b) += weight * x((a - j + n) % n, src_col);
    }
  }
  return out;
}

Eigen::MatrixXcd apply_cp_toeplitz(const CpToeplitzMap& phi, const Eigen::MatrixXcd& x) { return phi(x); }

Eigen::MatrixXcd apply_cp_circulant(const CpCirculantMap& phi, const Eigen::MatrixXcd& x) { return phi(x); }

BlockDiagonalRep block_rep_toeplitz(const CpToeplitzMap& phi) {
  const int n = phi.order();
  const ToeplitzMatrix t0 = phi.toeplitz();
  BlockDiagonalRep rep(Ordering::Diagonal);
  rep.add(0, Eigen::MatrixXcd(t0.dense().cast<Complex>()));
  for (int l = 1; l < n; ++l) {
    auto block = std::make_shared<const Eigen::MatrixXcd>(principal_submatrix(t0, l).dense().cast<Complex>());
    rep.add(-l, block);
    rep.add(l, block);
  }
  return rep;
}

BlockDiagonalRep block_rep_circulant(const CpCirculantMap& phi) {
  auto block = std::make_shared<const Eigen::MatrixXcd>(phi.circulant().dense().cast<Complex>());
  BlockDiagonalRep rep(Ordering::Cyclic);
  for (int j = 0; j < phi.order(); ++j) rep.add(j, block);
  return rep;
}

BlockDiagonalRep regroup_cyclic(const BlockDiagonalRep& diagonal_rep, int n) {
  if (diagonal_rep.ordering() != Ordering::Diagonal) {
    throw std::invalid_argument("regroup_cyclic expects a diagonal-ordering representation");
  }
  BlockDiagonalRep rep(Ordering::Cyclic);
  rep.add(0, diagonal_rep.block(0).matrix);
  for (int j = 1; j < n; ++j) {
    const auto& lower = *diagonal_rep.block(-j).matrix;
    const auto& upper = *diagonal_rep.block(n - j).matrix;
    Eigen::MatrixXcd combined = Eigen::MatrixXcd::Zero(n, n);
    combined.topLeftCorner(lower.rows(), lower.cols()) = lower;
    combined.bottomRightCorner(upper.rows(), upper.cols()) = upper;
    rep.add(j, std::move(combined));
  }
  return rep;
}

Eigen::MatrixXcd full_superoperator(const LinearMap& map, const BasisOrdering& ordering) {
  const int n = ordering.order();
  if (n > kSuperoperatorMaxOrder) {
    throw std::invalid_argument("full superoperator is limited to n <= " + std::to_string(kSuperoperatorMaxOrder) +
                                " (got n = " + std::to_string(n) + ")");
  }
  Eigen::MatrixXcd out(ordering.size(), ordering.size());
  for (int p = 0; p < ordering.size(); ++p) {
    const auto [row, col] = ordering.unit(p);
    Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(n, n);
    unit(row, col) = 1.0;
    out.col(p) = vectorize(map(unit), ordering);
  }
  return out;
}

Eigen::MatrixXcd choi_matrix(const LinearMap& map, int n) {
  if (n < 1 || n > kChoiMaxOrder) {
    throw std::invalid_argument("Choi matrix is limited to 1 <= n <= " + std::to_string(kChoiMaxOrder) +
                                " (got n = " + std::to_string(n) + ")");
  }
  Eigen::MatrixXcd choi(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      Eigen::MatrixXcd unit = Eigen::MatrixXcd::Zero(n, n);
      unit(i, k) = 1.0;
      choi.block(i * n, k * n, n, n) = map(unit);
    }
  }
  return choi;
}

std::vector<GuaranteedEigenpair> guaranteed_eigenpairs(const CpToeplitzMap& phi) {
  const int n = phi.order();
  const auto& t = phi.symbol();
  if (n < 3) throw std::invalid_argument("guaranteed eigenpairs need n >= 3");
  if (!(t[1] > 0.0 && t[-1] > 0.0)) throw std::invalid_argument("guaranteed eigenpairs need t_1, t_{-1} > 0");
  const double a = std::sqrt(t[-1]);
  const double b = std::sqrt(t[1]);
  const double root = std::sqrt(t[1] * t[-1]);

  auto unit_pair = [n](int r0, int c0, double w0, int r1, int c1, double w1) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(n, n);
    x(r0, c0) = w0;
    x(r1, c1) = w1;
    return x;
  };

  std::vector<GuaranteedEigenpair> pairs;
  for (double sign : {-1.0, 1.0}) {
    const double value = t[0] + sign * root;
    pairs.push_back({value, unit_pair(n - 2, 0, sign * a, n - 1, 1, b)});
    pairs.push_back({value, unit_pair(0, n - 2, sign * a, 1, n - 1, b)});
  }
  Eigen::MatrixXcd corner = Eigen::MatrixXcd::Zero(n, n);
  corner(0, n - 1) = 1.0;
  pairs.push_back({t[0], corner});
  corner.setZero();
  corner(n - 1, 0) = 1.0;
  pairs.push_back({t[0], corner});
  return pairs;
}

}  // namespace qmsa
