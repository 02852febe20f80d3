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

#ifndef QMSA_STRUCTURED_LINALG_HPP_
#define QMSA_STRUCTURED_LINALG_HPP_

#include <complex>
#include <memory>
#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "qmsa/symbols.hpp"

namespace qmsa {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// n x n Toeplitz matrix with entry (i,k) = t_{i-k}.
class ToeplitzMatrix {
 public:
  explicit ToeplitzMatrix(TruncatedSymbol diagonals);

  int order() const { return diagonals_.order(); }
  double operator()(int i, int k) const { return diagonals_[i - k]; }
  const TruncatedSymbol& diagonals() const { return diagonals_; }
  /// Leading size x size corner.
  ToeplitzMatrix leading(int size) const;
  Eigen::MatrixXd dense() const;

 private:
  TruncatedSymbol diagonals_;
};

/// n x n circulant matrix with entry (i,k) = c_{(k-i) mod n}.
class CirculantMatrix {
 public:
  explicit CirculantMatrix(std::vector<double> row);

  int order() const { return static_cast<int>(row_.size()); }
  double operator()(int i, int k) const;
  const std::vector<double>& row() const { return row_; }
  double row_sum() const;
  Eigen::MatrixXd dense() const;

 private:
  std::vector<double> row_;
};

ToeplitzMatrix toeplitz_from_symbol(const SymbolSequence& t, int n);
ToeplitzMatrix toeplitz_from_symbol(const TruncatedSymbol& t);

/// T_j: leading (n-j) x (n-j) corner, 0 <= j <= n-1.
ToeplitzMatrix principal_submatrix(const ToeplitzMatrix& t, int j);

/// c_0 = t_0, c_j = t_{-j} + t_{n-j}.
CirculantMatrix circulant_from_symbol(const SymbolSequence& t, int n);
CirculantMatrix circulant_from_symbol(const TruncatedSymbol& t);

/// gamma_k = sum_j c_j exp(2 pi i jk / n), k = 0..n-1.
///
/// Direct O(n^2) transform with the phase index jk reduced mod n, which keeps
/// every twiddle factor exact up to a single rounding.
ComplexVector circulant_eigenvalues(const CirculantMatrix& c);

enum class Ordering { Diagonal, Cyclic };

/// Block-diagonal matrix as an ordered list of labeled square blocks.
///
/// Labels are diagonal offsets (0, -1, +1, ...) for the diagonal ordering and
/// cyclic indices 0..n-1 for the cyclic ordering. Blocks are shared pointers
/// so a repeated block (T_{-l} = T_{+l}, or the n copies of C) is stored once.
class BlockDiagonalRep {
 public:
  struct Block {
    int label;
    std::shared_ptr<const Eigen::MatrixXcd> matrix;
    Eigen::Index size() const { return matrix->rows(); }
  };

  explicit BlockDiagonalRep(Ordering ordering) : ordering_(ordering) {}

  Ordering ordering() const { return ordering_; }
  /// Throws std::invalid_argument on a duplicate label or non-square block.
  void add(int label, std::shared_ptr<const Eigen::MatrixXcd> block);
  void add(int label, Eigen::MatrixXcd block);

  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(int label) const;
  /// Sum of block orders.
  Eigen::Index dimension() const;

  Eigen::MatrixXcd dense() const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;

 private:
  Ordering ordering_;
  std::vector<Block> blocks_;
};

/// Largest singular value.
double strong_norm(const Eigen::MatrixXcd& a);
double strong_norm(const Eigen::MatrixXd& a);
/// Max over blocks; each distinct shared block is decomposed once.
double strong_norm(const BlockDiagonalRep& rep);

double hs_norm_squared(const Eigen::MatrixXcd& a);
double hs_norm_squared(const BlockDiagonalRep& rep);
/// sqrt(sum |a_ij|^2 / m).
double normalized_hs_norm(const Eigen::MatrixXcd& a, double m);
double normalized_hs_norm(const BlockDiagonalRep& rep, double m);

/// Row-major CSV; complex entries take two columns (re, im).
void write_csv(std::ostream& out, const Eigen::MatrixXd& a);
void write_csv(std::ostream& out, const Eigen::MatrixXcd& a);

}  // namespace qmsa

#endif  // QMSA_STRUCTURED_LINALG_HPP_
