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

#ifndef QMSA_SPECTRAL_HPP_
#define QMSA_SPECTRAL_HPP_

#include <cstddef>
#include <vector>

#include "qmsa/structured_linalg.hpp"

namespace qmsa {

/// Dense eigenvalues; Hermitian input takes the self-adjoint solver.
ComplexVector eigenvalues(const Eigen::MatrixXcd& a);
ComplexVector eigenvalues(const Eigen::MatrixXd& a);

struct LabeledEigenvalue {
  int label;
  Complex value;
};

/// Spectra of all blocks, in block order.
std::vector<LabeledEigenvalue> block_eigenvalues(const BlockDiagonalRep& rep);
ComplexVector spectrum(const BlockDiagonalRep& rep);

double min_hermitian_eigenvalue(const Eigen::MatrixXcd& a);

/// Sort by (re, im).
void sort_spectrum(ComplexVector& values);

struct MultisetMatch {
  bool matched = false;
  double max_deviation = 0.0;
  std::size_t unmatched = 0;
};

/// Greedy nearest pairing after sorting both sides by (re, im).
MultisetMatch match_multisets(ComplexVector a, ComplexVector b, double tol);

double distance_to_spectrum(Complex value, const ComplexVector& values);

}  // namespace qmsa

#endif  // QMSA_SPECTRAL_HPP_
