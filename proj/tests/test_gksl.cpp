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


#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "qmsa/gksl.hpp"
#include "qmsa/random.hpp"
#include "qmsa/spectral.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace qmsa;

namespace {

WcltCoefficients example() {
  return parse_coefficients_spec(R"({"gamma_plus":{"1":1,"2":2},"gamma_minus":{"1":3,"2":4}})");
}

double max_abs(const Eigen::MatrixXcd& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

Eigen::MatrixXcd unit(int n, int i, int k) {
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
  e(i, k) = 1.0;
  return e;
}

}  // namespace

TEST_CASE("partial sums", "[gksl]") {
  const auto p = partial_sums(example(), 3);
  CHECK(p.s == 10.0);
  CHECK(p.s_k == std::vector<double>{3.0, 4.0, 7.0});

  const auto two = partial_sums(parse_coefficients_spec(R"({"gamma_plus":{"1":0.5},"gamma_minus":{"1":2}})"), 2);
  CHECK(two.s == 2.5);
  CHECK(two.s_k == std::vector<double>{0.5, 2.0});

  const auto zero = partial_sums(WcltCoefficients{}, 5);
  CHECK(zero.s == 0.0);
  for (double v : zero.s_k) CHECK(v == 0.0);

  SplitMix64 rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    const auto w = truncate(random_coefficients(rng, 6), 9);
    const auto ps = partial_sums(w);
    for (int k = 0; k < 9; ++k) CHECK(ps.s_k[static_cast<std::size_t>(k)] <= ps.s + 1e-14);
    // s coincides with the row sum of the comparison circulant.
    CHECK_THAT(circulant_generator(w).total(), WithinRel(ps.s, 1e-14));
  }
}

TEST_CASE("G operator", "[gksl]") {
  const Eigen::MatrixXcd g = g_operator(example(), 3);
  CHECK(g.diagonal() == Eigen::VectorXcd(Eigen::Vector3cd(-1.5, -2.0, -3.5)));
  CHECK(max_abs(g - Eigen::MatrixXcd(g.diagonal().asDiagonal())) == 0.0);
  CHECK(g_operator(WcltCoefficients{}, 4).isZero(0.0));

  CHECK(g_block(example(), 3, 0).diagonal() == Eigen::VectorXcd(Eigen::Vector3cd(-3.0, -4.0, -7.0)));
  CHECK_THROWS_AS(g_block(example(), 3, 3), std::out_of_range);
  CHECK_THROWS_AS(g_block(example(), 3, -3), std::out_of_range);

  for (int l = 1; l < 3; ++l) CHECK(g_block(example(), 3, l) == g_block(example(), 3, -l));

  SplitMix64 rng(67);
  for (int n : {1, 2, 5, 16, 64}) {
    const auto w = truncate(random_coefficients(rng, 8), n);
    const Eigen::MatrixXcd closed = g_diagonal(w).asDiagonal();
    CHECK(max_abs(closed - g_operator_shift_sum(w)) <= 1e-12);
  }
}

TEST_CASE("G blocks match the direct Psi on matrix units", "[gksl]") {
  SplitMix64 rng(71);
  for (int n : {2, 5, 9, 16}) {
    const auto w = truncate(random_coefficients(rng, 6), n);
    const Eigen::MatrixXcd g = g_operator_shift_sum(w);
    for (int l = -(n - 1); l <= n - 1; ++l) {
      const auto d = g_block_diagonal(w, l);
      for (int k = 0; k + std::abs(l) < n; ++k) {
        // V_{-l}: |e_k><e_{k+l}|, V_{+l}: |e_{k+l}><e_k|.
        const int row = l < 0 ? k : k + l;
        const int col = l < 0 ? k - l : k;
        const Eigen::MatrixXcd e = unit(n, row, col);
        const Eigen::MatrixXcd psi = g.adjoint() * e + e * g;
        CHECK(std::abs(psi(row, col) - d(k)) <= 1e-12);
        CHECK(max_abs(psi - d(k) * e) <= 1e-12);
      }
    }
  }
}

TEST_CASE("WCLT generator identities", "[gksl]") {
  SplitMix64 rng(73);
  for (int n : {1, 2, 4, 9, 30}) {
    const WcltGenerator gen(random_coefficients(rng, 5), n);
    CHECK(max_abs(gen(Eigen::MatrixXcd::Identity(n, n))) <= 1e-12);
    const Eigen::MatrixXcd x = random_matrix(rng, n);
    CHECK(max_abs(gen(x.adjoint()) - gen(x).adjoint()) <= 1e-12);
    CHECK(max_abs(apply_wclt(gen, x) - gen(x)) == 0.0);
  }
  const WcltGenerator zero(WcltCoefficients{}, 4);
  SplitMix64 rng2(79);
  CHECK(zero(random_matrix(rng2, 4)).isZero(0.0));
  CHECK_THROWS_AS(zero(Eigen::MatrixXcd::Zero(3, 3)), std::invalid_argument);
}

TEST_CASE("WCLT example on a matrix unit", "[gksl]") {
  const auto w = truncate(example(), 3);
  const WcltGenerator gen(w);
  const auto ps = partial_sums(w);
  const Eigen::MatrixXcd e01 = unit(3, 0, 1);
  const Complex g_part = -Complex((ps.s_k[0] + ps.s_k[1]) / 2.0, ps.s_tilde_k[1] - ps.s_tilde_k[0]);
  const Eigen::MatrixXcd want = gen.dissipative()(e01) + g_part * e01;
  CHECK(max_abs(gen(e01) - want) <= 1e-14);
  const auto rep = block_rep_wclt(gen);
  CHECK((vec_diagonal(gen(e01)) - rep.apply(vec_diagonal(e01))).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("WCLT block representation", "[gksl]") {
  SplitMix64 rng(83);
  for (int n = 1; n <= 8; ++n) {
    const WcltGenerator gen(random_coefficients(rng, n), n);
    const auto rep = block_rep_wclt(gen);
    CHECK(max_abs(full_superoperator(gen, BasisOrdering::diagonal(n)) - rep.dense()) <= 1e-12);
    CHECK(max_abs(full_superoperator([&](const Eigen::MatrixXcd& x) { return gen.psi(x); },
                                     BasisOrdering::diagonal(n)) -
                  block_rep_psi(gen).dense()) <= 1e-12);
  }
  for (int n : {20, 64}) {
    const WcltGenerator gen(random_coefficients(rng, 7), n);
    const Eigen::MatrixXcd x = random_matrix(rng, n);
    CHECK((vec_diagonal(gen(x)) - block_rep_wclt(gen).apply(vec_diagonal(x))).cwiseAbs().maxCoeff() <= 1e-12);
  }

  const WcltGenerator sym(parse_coefficients_spec(R"({"gamma_plus":"geo:0.5","gamma_minus":"geo:0.5"})"), 6);
  const auto sym_rep = block_rep_wclt(sym);
  for (const auto& b : sym_rep.blocks()) {
    CHECK(b.matrix->imag().isZero(0.0));
    CHECK(max_abs(*b.matrix - b.matrix->transpose()) == 0.0);
  }

  const WcltGenerator ham(parse_coefficients_spec(R"({"zeta_plus":{"1":0.7,"3":-0.2},"zeta_minus":"geo:0.3"})"), 6);
  for (const auto& v : spectrum(block_rep_wclt(ham))) CHECK(std::abs(v.real()) <= 1e-14);
}

TEST_CASE("Psi norm against s", "[gksl]") {
  SplitMix64 rng(89);
  for (int n : {2, 7, 32, 64}) {
    auto c = random_coefficients(rng, 6);
    const auto w_full = truncate(c, n);
    c.zeta_plus = SymbolSequence::explicit_coeffs({});
    c.zeta_minus = SymbolSequence::explicit_coeffs({});
    const WcltGenerator dissipative(c, n);
    const double s = partial_sums(dissipative.window()).s;
    CHECK(strong_norm(regroup_cyclic(block_rep_psi(dissipative), n)) <= s + 1e-10);
    CHECK(strong_norm(block_rep_psi(dissipative)) <= s + 1e-10);

    // With energies present only sqrt(s^2 + sigma^2), sigma = sum |zeta|, holds.
    const WcltGenerator gen(w_full);
    double sigma = 0.0;
    for (int m = 1; m < n; ++m) {
      sigma += std::abs(w_full.zeta_plus[static_cast<std::size_t>(m)]) +
               std::abs(w_full.zeta_minus[static_cast<std::size_t>(m)]);
    }
    CHECK(strong_norm(block_rep_psi(gen)) <= std::hypot(s, sigma) + 1e-10);
  }
  // Pure energy term: s = 0 while Psi does not vanish.
  const WcltGenerator ham(parse_coefficients_spec(R"({"zeta_plus":{"1":1}})"), 2);
  CHECK(partial_sums(ham.window()).s == 0.0);
  CHECK_THAT(strong_norm(block_rep_psi(ham)), WithinAbs(1.0, 1e-15));
}

TEST_CASE("circulant generator", "[gksl]") {
  CHECK(circulant_generator(std::vector<double>{2.0, 0, 0}).q().dense().isZero(0.0));
  const auto gen = circulant_generator(std::vector<double>{1.0, 0.25, 0.0, 0.5});
  CHECK(gen.total() == 1.75);
  CHECK(gen.q().row() == std::vector<double>{-0.75, 0.25, 0.0, 0.5});
  CHECK_THROWS_AS(circulant_generator(std::vector<double>{1.0, -0.25}), std::invalid_argument);

  SplitMix64 rng(97);
  for (int n : {1, 3, 6}) {
    const auto c = circulant_generator(random_symbol(rng, 3), n);
    const Eigen::MatrixXcd x = random_matrix(rng, n);
    CHECK(max_abs(c(Eigen::MatrixXcd::Identity(n, n))) <= 1e-12);
    CHECK(max_abs(c(x.adjoint()) - c(x).adjoint()) <= 1e-12);
    CHECK(max_abs(full_superoperator(c, BasisOrdering::cyclic(n)) - c.block_rep().dense()) <= 1e-12);

    ComplexVector want;
    for (int copy = 0; copy < n; ++copy) {
      for (auto v : c.eigenvalues()) want.push_back(v);
    }
    CHECK(match_multisets(eigenvalues(full_superoperator(c, BasisOrdering::diagonal(n))), want, 1e-8).matched);
    CHECK(std::abs(c.eigenvalues()[0]) <= 1e-12);
    const auto q = c.q().dense();
    for (int i = 0; i < n; ++i) {
      CHECK(std::abs(q.row(i).sum()) <= 1e-12);
      for (int k = 0; k < n; ++k) {
        if (k != i) CHECK(q(i, k) >= 0.0);
      }
    }
  }
}

TEST_CASE("auxiliary partial-sum relations", "[gksl]") {
  const auto ex = aux_identities(example(), 3);
  CHECK(ex.tail_sum == 16.0);
  CHECK(ex.weighted_sum == 16.0);
  CHECK(ex.tail_residual == 0.0);

  const auto zero = aux_identities(WcltCoefficients{}, 6);
  CHECK(zero.margin == 0.0);
  CHECK(zero.pair_residual == 0.0);
  CHECK(zero.pair_residual_printed == 0.0);
  CHECK(zero.tail_residual == 0.0);

  // Strict margin needs every Gamma_m > 0; finite support leaves equal levels.
  const auto geo = aux_identities(parse_coefficients_spec(R"({"gamma_plus":"geo:0.5","gamma_minus":"geo:0.3"})"), 12);
  CHECK(geo.margin > 0.0);
  const auto short_range = aux_identities(parse_coefficients_spec(R"({"gamma_plus":{"1":1},"gamma_minus":{"1":1}})"), 6);
  CHECK(short_range.margin == 0.0);

  SplitMix64 rng(101);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.integer(2, 64);
    const auto w = truncate(random_coefficients(rng, rng.integer(1, 10)), n);
    const auto r = aux_identities(w);
    CHECK(r.margin >= 0.0);
    CHECK(std::abs(r.tail_residual) <= 1e-12);
    CHECK(std::abs(r.pair_residual) <= 1e-12);
    // The (n-1) * sum m Gamma form overshoots by a factor of two.
    CHECK_THAT(r.pair_residual_printed, WithinRel(-(n - 1) * r.weighted_sum / 2.0, 1e-12));

    // Direct double sum.
    const auto ps = partial_sums(w);
    double pairs = 0.0;
    for (int j = 1; j < n; ++j) {
      for (int k = 0; k + j < n; ++k) {
        pairs += ps.s - (ps.s_k[static_cast<std::size_t>(k)] + ps.s_k[static_cast<std::size_t>(k + j)]) / 2.0;
      }
    }
    CHECK_THAT(r.pair_sum, WithinRel(pairs, 1e-10));
  }
}
