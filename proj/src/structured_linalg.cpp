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

#include "qmsa/structured_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace qmsa {

ToeplitzMatrix::ToeplitzMatrix(TruncatedSymbol diagonals) : diagonals_(std::move(diagonals)) {}

ToeplitzMatrix ToeplitzMatrix::leading(int size) const {
  if (size < 1 || size > order()) throw std::out_of_range("leading block size out of range");
  TruncatedSymbol window(size);
  for (int j = -(size - 1); j <= size - 1; ++j) window.set(j, diagonals_[j]);
  return ToeplitzMatrix(std::move(window));
}

Eigen::MatrixXd ToeplitzMatrix::dense() const {
  const int n = order();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) a(i, k) = (*this)(i, k);
  }
  return a;
}

CirculantMatrix::CirculantMatrix(std::vector<double> row) : row_(std::move(row)) {
  if (row_.empty()) throw std::invalid_argument("circulant matrix needs order >= 1");
}

double CirculantMatrix::operator()(int i, int k) const {
  const int n = order();
  return row_[static_cast<std::size_t>(((k - i) % n + n) % n)];
}

double CirculantMatrix::row_sum() const {
  double total = 0.0;
  for (double c : row_) total += c;
  return total;
}

Eigen::MatrixXd CirculantMatrix::dense() const {
  const int n = order();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) a(i, k) = (*this)(i, k);
  }
  return a;
}

ToeplitzMatrix toeplitz_from_symbol(const TruncatedSymbol& t) { return ToeplitzMatrix(t); }

ToeplitzMatrix toeplitz_from_symbol(const SymbolSequence& t, int n) { return ToeplitzMatrix(truncate(t, n)); }

ToeplitzMatrix principal_submatrix(const ToeplitzMatrix& t, int j) {
  if (j < 0 || j > t.order() - 1) {
    throw std::out_of_range("principal submatrix index " + std::to_string(j) + " outside [0, n-1]");
  }
  return t.leading(t.order() - j);
}

CirculantMatrix circulant_from_symbol(const TruncatedSymbol& t) {
  const int n = t.order();
  std::vector<double> row(static_cast<std::size_t>(n));
  row[0] = t[0];
  for (int j = 1; j < n; ++j) row[static_cast<std::size_t>(j)] = t[-j] + t[n - j];
  return CirculantMatrix(std::move(row));
}

CirculantMatrix circulant_from_symbol(const SymbolSequence& t, int n) { return circulant_from_symbol(truncate(t, n)); }

ComplexVector circulant_eigenvalues(const CirculantMatrix& c) {
  const int n = c.order();
  ComplexVector twiddle(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    twiddle[static_cast<std::size_t>(q)] = std::polar(1.0, 2.0 * std::numbers::pi * q / n);
  }
  ComplexVector gamma(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Complex total = 0.0;
    for (int j = 0; j < n; ++j) {
      const auto phase = static_cast<std::size_t>((static_cast<long long>(j) * k) % n);
      total += c.row()[static_cast<std::size_t>(j)] * twiddle[phase];
    }
    gamma[static_cast<std::size_t>(k)] = total;
  }
  return gamma;
}

void BlockDiagonalRep::add(int label, std::shared_ptr<const Eigen::MatrixXcd> block) {
  if (!block || block->rows() != block->cols()) throw std::invalid_argument("blocks must be square");
  for (const auto& b : blocks_) {
    if (b.label == label) throw std::invalid_argument("duplicate block label " + std::to_string(label));
  }
  blocks_.push_back({label, std::move(block)});
}

void BlockDiagonalRep::add(int label, Eigen::MatrixXcd block) {
  add(label, std::make_shared<const Eigen::MatrixXcd>(std::move(block)));
}

const BlockDiagonalRep::Block& BlockDiagonalRep::block(int label) const {
  for (const auto& b : blocks_) {
    if (b.label == label) return b;
  }
  throw std::out_of_range("no block with label " + std::to_string(label));
}

Eigen::Index BlockDiagonalRep::dimension() const {
  Eigen::Index total = 0;
  for (const auto& b : blocks_) total += b.size();
  return total;
}

Eigen::MatrixXcd BlockDiagonalRep::dense() const {
  const Eigen::Index dim = dimension();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::Index offset = 0;
  for (const auto& b : blocks_) {
    a.block(offset, offset, b.size(), b.size()) = *b.matrix;
    offset += b.size();
  }
  return a;
}

Eigen::VectorXcd BlockDiagonalRep::apply(const Eigen::VectorXcd& v) const {
  if (v.size() != dimension()) throw std::invalid_argument("vector length does not match representation");
  Eigen::VectorXcd out(v.size());
  Eigen::Index offset = 0;
  for (const auto& b : blocks_) {
    out.segment(offset, b.size()) = (*b.matrix) * v.segment(offset, b.size());
    offset += b.size();
  }
  return out;
}

double strong_norm(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return 0.0;
  if (a == a.adjoint()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues()(0);
}

double strong_norm(const Eigen::MatrixXd& a) {
  if (a.size() == 0) return 0.0;
  if (a == a.transpose()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().maxCoeff();
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
  return svd.singularValues()(0);
}

double strong_norm(const BlockDiagonalRep& rep) {
  std::unordered_map<const Eigen::MatrixXcd*, double> seen;
  double best = 0.0;
  for (const auto& b : rep.blocks()) {
    auto [it, inserted] = seen.try_emplace(b.matrix.get(), 0.0);
    if (inserted) it->second = strong_norm(*b.matrix);
    best = std::max(best, it->second);
  }
  return best;
}

double hs_norm_squared(const Eigen::MatrixXcd& a) { return a.squaredNorm(); }

double hs_norm_squared(const BlockDiagonalRep& rep) {
  double total = 0.0;
  for (const auto& b : rep.blocks()) total += b.matrix->squaredNorm();
  return total;
}

double normalized_hs_norm(const Eigen::MatrixXcd& a, double m) {
  if (!(m > 0.0)) throw std::invalid_argument("normalization dimension must be positive");
  return std::sqrt(hs_norm_squared(a) / m);
}

double normalized_hs_norm(const BlockDiagonalRep& rep, double m) {
  if (!(m > 0.0)) throw std::invalid_argument("normalization dimension must be positive");
  return std::sqrt(hs_norm_squared(rep) / m);
}

void write_csv(std::ostream& out, const Eigen::MatrixXd& a) {
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (k) out << ',';
      out << a(i, k);
    }
    out << '\n';
  }
}

void write_csv(std::ostream& out, const Eigen::MatrixXcd& a) {
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      if (k) out << ',';
      out << a(i, k).real() << ',' << a(i, k).imag();
    }
    out << '\n';
  }
}

}  // namespace qmsa
