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

#ifndef QMSA_SUPEROP_HPP_
#define QMSA_SUPEROP_HPP_

#include <functional>
#include <utility>
#include <vector>

#include "qmsa/structured_linalg.hpp"

namespace qmsa {

/// Enumeration of the matrix units |e_i><e_k| of M_n.
///
/// Diagonal ordering: V_0 (|e_i><e_i|), then for l = 1..n-1 the segment V_{-l}
/// (|e_i><e_{i+l}|) followed by V_{+l} (|e_{i+l}><e_i|), i = 0..n-1-l.
/// Cyclic ordering: for j = 0..n-1 the segment B_j (|e_i><e_{i+j mod n}|).
class BasisOrdering {
 public:
  struct Segment {
    int label;
    int offset;
    int size;
  };

  static BasisOrdering diagonal(int n);
  static BasisOrdering cyclic(int n);

  Ordering kind() const { return kind_; }
  int order() const { return n_; }
  int size() const { return n_ * n_; }
  /// (row, col) of the matrix unit at a position.
  std::pair<int, int> unit(int position) const { return units_[static_cast<std::size_t>(position)]; }
  /// Position of |e_row><e_col|.
  int position(int row, int col) const { return positions_[static_cast<std::size_t>(row * n_ + col)]; }
  const std::vector<Segment>& segments() const { return segments_; }
  const Segment& segment(int label) const;

 private:
  BasisOrdering(Ordering kind, int n) : kind_(kind), n_(n) {}
  void push(int row, int col);

  Ordering kind_;
  int n_;
  std::vector<std::pair<int, int>> units_;
  std::vector<int> positions_;
  std::vector<Segment> segments_;
};

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& x, const BasisOrdering& ordering);
Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, const BasisOrdering& ordering);

Eigen::VectorXcd vec_diagonal(const Eigen::MatrixXcd& x);
Eigen::MatrixXcd unvec_diagonal(const Eigen::VectorXcd& v);
Eigen::VectorXcd vec_cyclic(const Eigen::MatrixXcd& x);
Eigen::MatrixXcd unvec_cyclic(const Eigen::VectorXcd& v);

/// perm with vec_cyclic(x)[c] == vec_diagonal(x)[perm[c]].
std::vector<int> permutation_diag_to_cyclic(int n);

/// Left shift S e_i = e_{i-1}, S e_0 = 0.
Eigen::MatrixXd left_shift(int n);
/// Cyclic left shift J e_i = e_{i-1 mod n}.
Eigen::MatrixXd cyclic_shift(int n);

enum class Admissibility { Enforce, Unchecked };

/// Phi(x) = sum_{j>=0} t_j S*^j x S^j + sum_{j>=1} t_{-j} S^j x S*^j.
class CpToeplitzMap {
 public:
  /// Enforce rejects negative coefficients with std::invalid_argument.
  explicit CpToeplitzMap(TruncatedSymbol t, Admissibility check = Admissibility::Enforce);
  CpToeplitzMap(const SymbolSequence& t, int n, Admissibility check = Admissibility::Enforce);

  int order() const { return t_.order(); }
  const TruncatedSymbol& symbol() const { return t_; }
  ToeplitzMatrix toeplitz() const { return ToeplitzMatrix(t_); }
  Eigen::MatrixXcd operator()(const Eigen::MatrixXcd& x) const;

 private:
  TruncatedSymbol t_;
};

/// Phi~(x) = sum_j c_{(n-j) mod n} J*^j x J^j.
class CpCirculantMap {
 public:
  explicit CpCirculantMap(CirculantMatrix c, Admissibility check = Admissibility::Enforce);

  int order() const { return c_.order(); }
  const CirculantMatrix& circulant() const { return c_; }
  Eigen::MatrixXcd operator()(const Eigen::MatrixXcd& x) const;

 private:
  CirculantMatrix c_;
};

Eigen::MatrixXcd apply_cp_toeplitz(const CpToeplitzMap& phi, const Eigen::MatrixXcd& x);
Eigen::MatrixXcd apply_cp_circulant(const CpCirculantMap& phi, const Eigen::MatrixXcd& x);

/// Blocks labeled 0, -1, +1, ..., -(n-1), +(n-1); the block at +-l is the
/// shared principal submatrix T_l.
BlockDiagonalRep block_rep_toeplitz(const CpToeplitzMap& phi);
/// n shared copies of C, labeled 0..n-1.
BlockDiagonalRep block_rep_circulant(const CpCirculantMap& phi);

/// Reorders a diagonal-ordering representation into cyclic segments:
/// block j is the direct sum of the -j and +(n-j) blocks. The 0 block carries over.
BlockDiagonalRep regroup_cyclic(const BlockDiagonalRep& diagonal_rep, int n);

using LinearMap = std::function<Eigen::MatrixXcd(const Eigen::MatrixXcd&)>;

inline constexpr int kSuperoperatorMaxOrder = 12;
inline constexpr int kChoiMaxOrder = 8;

/// Matrix of a linear map on M_n, one column per basis unit in the given
/// ordering. Throws std::invalid_argument for n > 12.
Eigen::MatrixXcd full_superoperator(const LinearMap& map, const BasisOrdering& ordering);

/// sum_{i,k} |e_i><e_k| (x) map(|e_i><e_k|). Throws std::invalid_argument for n > 8.
Eigen::MatrixXcd choi_matrix(const LinearMap& map, int n);

/// Eigenpairs of Phi that exist for every n >= 3 when t_1, t_{-1} > 0.
struct GuaranteedEigenpair {
  double value;
  Eigen::MatrixXcd vector;
};

/// t_0 -+ sqrt(t_1 t_{-1}) on V_{n-2} and V_{-(n-2)}, and t_0 on V_{-(n-1)}, V_{n-1}.
/// Throws std::invalid_argument when n < 3 or t_{+-1} <= 0.
std::vector<GuaranteedEigenpair> guaranteed_eigenpairs(const CpToeplitzMap& phi);

}  // namespace qmsa

#endif  // QMSA_SUPEROP_HPP_
