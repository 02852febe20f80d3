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

#ifndef QMSA_SYMBOLS_HPP_
#define QMSA_SYMBOLS_HPP_

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace qmsa {

enum class SymbolKind { Explicit, Geometric };

/// Two-sided, absolutely summable coefficient sequence {t_j}.
///
/// Explicit symbols have finite support. Geometric symbols follow the rule
/// t_j = scale * ratio^|j| with 0 < ratio < 1 and scale > 0. Signs are not
/// restricted here; maps that need t_j >= 0 check it when they are built.
class SymbolSequence {
 public:
  SymbolSequence() = default;

  static SymbolSequence explicit_coeffs(std::map<int, double> coeffs);
  static SymbolSequence geometric(double scale, double ratio);
  static SymbolSequence delta(double value);

  SymbolKind kind() const { return kind_; }
  double coefficient(int j) const;
  double operator[](int j) const { return coefficient(j); }

  /// Sum of |t_j| over all j.
  double l1_norm() const;
  bool nonnegative() const;
  /// t_{-j} == t_j for every j (exact comparison).
  bool hermitian() const;

  const std::map<int, double>& coeffs() const { return coeffs_; }
  double scale() const { return scale_; }
  double ratio() const { return ratio_; }

 private:
  SymbolKind kind_ = SymbolKind::Explicit;
  std::map<int, double> coeffs_;
  double scale_ = 0.0;
  double ratio_ = 0.0;
};

/// Window of a symbol with |j| <= order - 1, stored densely.
class TruncatedSymbol {
 public:
  TruncatedSymbol() = default;
  explicit TruncatedSymbol(int order);
  TruncatedSymbol(int order, std::vector<double> values);

  int order() const { return order_; }
  int radius() const { return order_ - 1; }
  /// Zero outside the window.
  double operator[](int j) const;
  void set(int j, double value);

  /// Values for j = -(order-1) .. order-1.
  const std::vector<double>& values() const { return values_; }
  bool nonnegative() const;
  bool hermitian() const;
  double sum() const;
  double l1_norm() const;

 private:
  int order_ = 0;
  std::vector<double> values_;
};

TruncatedSymbol truncate(const SymbolSequence& t, int n);

/// f(eta) restricted to |k| <= n-1.
std::complex<double> eval_symbol(const SymbolSequence& t, double eta, int n);
std::complex<double> eval_symbol(const TruncatedSymbol& t, double eta);

struct SymbolMoment {
  std::complex<double> value;
  /// False when the symbol is not Hermitian; value is then the complex mean of f^s.
  bool real_valued = true;
};

/// (1/2pi) * integral of f(eta)^s over [0, 2pi) by the trapezoid rule.
///
/// The default node count 2*s*n exceeds the degree s*(n-1) of f^s, so the
/// rule is exact up to rounding for the truncated symbol.
SymbolMoment symbol_moment(const SymbolSequence& t, int s, int n, int nodes = 0);
SymbolMoment symbol_moment(const TruncatedSymbol& t, int s, int nodes = 0);

/// Rates and Hamiltonian weights of a WCLT generator, indexed by m >= 1.
///
/// Each sequence is read at positive indices only; index 0 and negative keys
/// are ignored.
struct WcltCoefficients {
  SymbolSequence gamma_plus;
  SymbolSequence gamma_minus;
  SymbolSequence zeta_plus;
  SymbolSequence zeta_minus;

  /// Throws std::invalid_argument if some Gamma is negative.
  void validate() const;
  /// Sum over m >= 1 of Gamma+_m + Gamma-_m.
  double gamma_l1() const;
  double zeta_l1() const;
};

/// Coefficients restricted to m = 1..n-1; entry 0 of each vector is unused.
struct WcltWindow {
  int order = 0;
  std::vector<double> gamma_plus;
  std::vector<double> gamma_minus;
  std::vector<double> zeta_plus;
  std::vector<double> zeta_minus;

  /// Symbol of the dissipative part: t_m = Gamma-_m, t_{-m} = Gamma+_m, t_0 = 0.
  TruncatedSymbol toeplitz_symbol() const;
};

WcltWindow truncate(const WcltCoefficients& coeffs, int n);

// JSON forms: {"kind":"explicit","coeffs":{"-1":0.25,"0":1}} or
// {"kind":"geometric","scale":1,"ratio":0.5}.
SymbolSequence symbol_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SymbolSequence& t);

/// Accepts JSON text or the shorthands geo:<r>[:<scale>] and delta:<c>.
SymbolSequence parse_symbol_spec(const std::string& text);

/// {"gamma_plus":..., "gamma_minus":..., "zeta_plus":..., "zeta_minus":...}.
/// Each entry is a key map {"1":0.6,...}, a symbol object, or a shorthand
/// string; missing entries are zero.
WcltCoefficients coefficients_from_json(const nlohmann::json& j);
WcltCoefficients parse_coefficients_spec(const std::string& text);
nlohmann::json to_json(const WcltCoefficients& c);

}  // namespace qmsa

#endif  // QMSA_SYMBOLS_HPP_
