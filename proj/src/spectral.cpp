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

#include "qmsa/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qmsa {

ComplexVector eigenvalues(const Eigen::MatrixXcd& a) {
  ComplexVector out;
  out.reserve(static_cast<std::size_t>(a.rows()));
  if (a.rows() == 0) return out;
  if (a == a.adjoint()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.emplace_back(es.eigenvalues()(i), 0.0);
    return out;
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, false);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

ComplexVector eigenvalues(const Eigen::MatrixXd& a) { return eigenvalues(Eigen::MatrixXcd(a.cast<Complex>())); }

std::vector<LabeledEigenvalue> block_eigenvalues(const BlockDiagonalRep& rep) {
  std::vector<LabeledEigenvalue> out;
  out.reserve(static_cast<std::size_t>(rep.dimension()));
  for (const auto& b : rep.blocks()) {
    for (Complex v : eigenvalues(*b.matrix)) out.push_back({b.label, v});
  }
  return out;
}

ComplexVector spectrum(const BlockDiagonalRep& rep) {
  ComplexVector out;
  for (const auto& e : block_eigenvalues(rep)) out.push_back(e.value);
  return out;
}

double min_hermitian_eigenvalue(const Eigen::MatrixXcd& a) {
  const Eigen::MatrixXcd sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void sort_spectrum(ComplexVector& values) {
  std::sort(values.begin(), values.end(), [](Complex x, Complex y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
}

MultisetMatch match_multisets(ComplexVector a, ComplexVector b, double tol) {
  MultisetMatch result;
  if (a.size() != b.size()) {
    result.unmatched = a.size() > b.size() ? a.size() - b.size() : b.size() - a.size();
  }
  sort_spectrum(a);
  sort_spectrum(b);
  std::vector<bool> used(b.size(), false);
  for (Complex x : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_index = b.size();
    for (std::size_t q = 0; q < b.size(); ++q) {
      if (used[q]) continue;
      const double d = std::abs(x - b[q]);
      if (d < best) {
        best = d;
        best_index = q;
      }
    }
    if (best_index == b.size()) continue;
    used[best_index] = true;
    result.max_deviation = std::max(result.max_deviation, best);
    if (best > tol) ++result.unmatched;
  }
  result.matched = result.unmatched == 0;
  return result;
}

double distance_to_spectrum(Complex value, const ComplexVector& values) {
  double best = std::numeric_limits<double>::infinity();
  for (Complex v : values) best = std::min(best, std::abs(value - v));
  return best;
}

}  // namespace qmsa
