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


#ifndef QMSA_RANDOM_HPP_
#define QMSA_RANDOM_HPP_

#include <cstdint>
#include <map>

#include <Eigen/Dense>

#include "qmsa/structured_linalg.hpp"
#include "qmsa/symbols.hpp"

namespace qmsa {

/// SplitMix64 (Steele, Lea, Flood). Portable: same stream on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = 42) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1) from the top 53 bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

/// t_j uniform in [0, 1) for |j| <= support.
inline SymbolSequence random_symbol(SplitMix64& rng, int support) {
  std::map<int, double> c;
  for (int j = -support; j <= support; ++j) c[j] = rng.uniform();
  return SymbolSequence::explicit_coeffs(std::move(c));
}

/// Gamma uniform in [0, 1), zeta uniform in [-1, 1), for 1 <= m <= support.
inline WcltCoefficients random_coefficients(SplitMix64& rng, int support) {
  std::map<int, double> gp, gm, zp, zm;
  for (int m = 1; m <= support; ++m) {
    gp[m] = rng.uniform();
    gm[m] = rng.uniform();
    zp[m] = rng.uniform(-1.0, 1.0);
    zm[m] = rng.uniform(-1.0, 1.0);
  }
  return {SymbolSequence::explicit_coeffs(gp), SymbolSequence::explicit_coeffs(gm),
          SymbolSequence::explicit_coeffs(zp), SymbolSequence::explicit_coeffs(zm)};
}

inline Eigen::MatrixXcd random_matrix(SplitMix64& rng, int n) {
  Eigen::MatrixXcd x(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) x(i, k) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  }
  return x;
}

}  // namespace qmsa

#endif  // QMSA_RANDOM_HPP_
