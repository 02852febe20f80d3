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

#include "qmsa/symbols.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmsa {

namespace {

int parse_index(const std::string& key) {
  int value = 0;
  const char* first = key.data();
  const char* last = key.data() + key.size();
  if (!key.empty() && key.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("symbol key is not a signed integer: '" + key + "'");
  }
  return value;
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse " + what + " from '" + text + "'");
  }
}

}  // namespace

SymbolSequence SymbolSequence::explicit_coeffs(std::map<int, double> coeffs) {
  for (const auto& [j, v] : coeffs) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("symbol coefficient t_" + std::to_string(j) + " is not finite");
    }
  }
  SymbolSequence t;
  t.kind_ = SymbolKind::Explicit;
  t.coeffs_ = std::move(coeffs);
  return t;
}

SymbolSequence SymbolSequence::geometric(double scale, double ratio) {
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw std::invalid_argument("geometric symbol needs 0 < ratio < 1");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("geometric symbol needs scale > 0");
  }
  SymbolSequence t;
  t.kind_ = SymbolKind::Geometric;
  t.scale_ = scale;
  t.ratio_ = ratio;
  return t;
}

SymbolSequence SymbolSequence::delta(double value) { return explicit_coeffs({{0, value}}); }

double SymbolSequence::coefficient(int j) const {
  if (kind_ == SymbolKind::Geometric) {
    return scale_ * std::pow(ratio_, std::abs(j));
  }
  auto it = coeffs_.find(j);
  return it == coeffs_.end() ? 0.0 : it->second;
}

double SymbolSequence::l1_norm() const {
  if (kind_ == SymbolKind::Geometric) {
    return scale_ * (1.0 + ratio_) / (1.0 - ratio_);
  }
  double total = 0.0;
  for (const auto& [j, v] : coeffs_) total += std::abs(v);
  return total;
}

bool SymbolSequence::nonnegative() const {
  if (kind_ == SymbolKind::Geometric) return true;
  for (const auto& [j, v] : coeffs_) {
    if (v < 0.0) return false;
  }
  return true;
}

bool SymbolSequence::hermitian() const {
  if (kind_ == SymbolKind::Geometric) return true;
  for (const auto& [j, v] : coeffs_) {
    if (coefficient(-j) != v) return false;
  }
  return true;
}

TruncatedSymbol::TruncatedSymbol(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("truncation order must be >= 1");
  values_.assign(static_cast<std::size_t>(2 * order - 1), 0.0);
}

TruncatedSymbol::TruncatedSymbol(int order, std::vector<double> values)
    : order_(order), values_(std::move(values)) {
  if (order < 1) throw std::invalid_argument("truncation order must be >= 1");
  if (values_.size() != static_cast<std::size_t>(2 * order - 1)) {
    throw std::invalid_argument("truncated symbol needs 2n-1 values");
  }
}

double TruncatedSymbol::operator[](int j) const {
  if (j < -radius() || j > radius()) return 0.0;
  return values_[static_cast<std::size_t>(j + radius())];
}

void TruncatedSymbol::set(int j, double value) {
  if (j < -radius() || j > radius()) {
    throw std::out_of_range("index outside truncation window");
  }
  values_[static_cast<std::size_t>(j + radius())] = value;
}

bool TruncatedSymbol::nonnegative() const {
  for (double v : values_) {
    if (v < 0.0) return false;
  }
  return true;
}

bool TruncatedSymbol::hermitian() const {
  for (int j = 1; j <= radius(); ++j) {
    if ((*this)[j] != (*this)[-j]) return false;
  }
  return true;
}

double TruncatedSymbol::sum() const {
  double total = 0.0;
  for (double v : values_) total += v;
  return total;
}

double TruncatedSymbol::l1_norm() const {
  double total = 0.0;
  for (double v : values_) total += std::abs(v);
  return total;
}

TruncatedSymbol truncate(const SymbolSequence& t, int n) {
  TruncatedSymbol window(n);
  for (int j = -(n - 1); j <= n - 1; ++j) window.set(j, t.coefficient(j));
  return window;
}

std::complex<double> eval_symbol(const TruncatedSymbol& t, double eta) {
  std::complex<double> total = 0.0;
  for (int k = -t.radius(); k <= t.radius(); ++k) {
    const double c = t[k];
    if (c != 0.0) total += c * std::polar(1.0, k * eta);
  }
  return total;
}

std::complex<double> eval_symbol(const SymbolSequence& t, double eta, int n) {
  return eval_symbol(truncate(t, n), eta);
}

SymbolMoment symbol_moment(const TruncatedSymbol& t, int s, int nodes) {
  if (s < 1) throw std::invalid_argument("moment exponent must be >= 1");
  if (nodes <= 0) nodes = 2 * s * t.order();
  const bool real = t.hermitian();
  std::complex<double> total = 0.0;
  for (int q = 0; q < nodes; ++q) {
    const double eta = 2.0 * std::numbers::pi * q / nodes;
    std::complex<double> f = eval_symbol(t, eta);
    if (real) f = f.real();
    total += std::pow(f, s);
  }
  total /= static_cast<double>(nodes);
  if (real) total = total.real();
  return {total, real};
}

SymbolMoment symbol_moment(const SymbolSequence& t, int s, int n, int nodes) {
  return symbol_moment(truncate(t, n), s, nodes);
}

void WcltCoefficients::validate() const {
  auto check = [](const SymbolSequence& seq, const char* name) {
    if (seq.kind() == SymbolKind::Geometric) return;
    for (const auto& [m, v] : seq.coeffs()) {
      if (m >= 1 && v < 0.0) {
        throw std::invalid_argument(std::string(name) + "_" + std::to_string(m) + " is negative");
      }
    }
  };
  check(gamma_plus, "gamma_plus");
  check(gamma_minus, "gamma_minus");
}

namespace {

double positive_l1(const SymbolSequence& seq) {
  if (seq.kind() == SymbolKind::Geometric) {
    return seq.scale() * seq.ratio() / (1.0 - seq.ratio());
  }
  double total = 0.0;
  for (const auto& [m, v] : seq.coeffs()) {
    if (m >= 1) total += std::abs(v);
  }
  return total;
}

std::vector<double> positive_window(const SymbolSequence& seq, int n) {
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int m = 1; m < n; ++m) out[static_cast<std::size_t>(m)] = seq.coefficient(m);
  return out;
}

}  // namespace

double WcltCoefficients::gamma_l1() const { return positive_l1(gamma_plus) + positive_l1(gamma_minus); }

double WcltCoefficients::zeta_l1() const { return positive_l1(zeta_plus) + positive_l1(zeta_minus); }

TruncatedSymbol WcltWindow::toeplitz_symbol() const {
  TruncatedSymbol t(order);
  for (int m = 1; m < order; ++m) {
    t.set(m, gamma_minus[static_cast<std::size_t>(m)]);
    t.set(-m, gamma_plus[static_cast<std::size_t>(m)]);
  }
  return t;
}

WcltWindow truncate(const WcltCoefficients& coeffs, int n) {
  if (n < 1) throw std::invalid_argument("generator order must be >= 1");
  coeffs.validate();
  return WcltWindow{n, positive_window(coeffs.gamma_plus, n), positive_window(coeffs.gamma_minus, n),
                    positive_window(coeffs.zeta_plus, n), positive_window(coeffs.zeta_minus, n)};
}

SymbolSequence symbol_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("symbol spec must be a JSON object");
  const std::string kind = j.value("kind", std::string("explicit"));
  if (kind == "geometric") {
    if (!j.contains("ratio")) throw std::invalid_argument("geometric symbol needs 'ratio'");
    return SymbolSequence::geometric(j.value("scale", 1.0), j.at("ratio").get<double>());
  }
  if (kind != "explicit") throw std::invalid_argument("unknown symbol kind '" + kind + "'");
  if (!j.contains("coeffs") || !j.at("coeffs").is_object()) {
    throw std::invalid_argument("explicit symbol needs a 'coeffs' object");
  }
  std::map<int, double> coeffs;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    if (!value.is_number()) throw std::invalid_argument("coefficient '" + key + "' is not a number");
    coeffs[parse_index(key)] = value.get<double>();
  }
  return SymbolSequence::explicit_coeffs(std::move(coeffs));
}

nlohmann::json to_json(const SymbolSequence& t) {
  if (t.kind() == SymbolKind::Geometric) {
    return {{"kind", "geometric"}, {"scale", t.scale()}, {"ratio", t.ratio()}};
  }
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [j, v] : t.coeffs()) coeffs[std::to_string(j)] = v;
  return {{"kind", "explicit"}, {"coeffs", coeffs}};
}

SymbolSequence parse_symbol_spec(const std::string& text) {
  if (text.rfind("geo:", 0) == 0) {
    const std::string rest = text.substr(4);
    const auto colon = rest.find(':');
    const double ratio = parse_number(rest.substr(0, colon), "geometric ratio");
    const double scale =
        colon == std::string::npos ? 1.0 : parse_number(rest.substr(colon + 1), "geometric scale");
    return SymbolSequence::geometric(scale, ratio);
  }
  if (text.rfind("delta:", 0) == 0) {
    return SymbolSequence::delta(parse_number(text.substr(6), "delta value"));
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed symbol JSON: ") + e.what());
  }
  return symbol_from_json(j);
}

namespace {

SymbolSequence one_sided_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_symbol_spec(j.get<std::string>());
  if (!j.is_object()) throw std::invalid_argument("coefficient sequence must be an object or string");
  if (j.contains("kind")) return symbol_from_json(j);
  return symbol_from_json({{"kind", "explicit"}, {"coeffs", j}});
}

}  // namespace

WcltCoefficients coefficients_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("coefficient spec must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "gamma_plus" && key != "gamma_minus" && key != "zeta_plus" && key != "zeta_minus") {
      throw std::invalid_argument("unknown coefficient sequence '" + key + "'");
    }
  }
  auto read = [&](const char* key) {
    return j.contains(key) ? one_sided_from_json(j.at(key)) : SymbolSequence::explicit_coeffs({});
  };
  WcltCoefficients c{read("gamma_plus"), read("gamma_minus"), read("zeta_plus"), read("zeta_minus")};
  c.validate();
  return c;
}

WcltCoefficients parse_coefficients_spec(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed coefficient JSON: ") + e.what());
  }
  return coefficients_from_json(j);
}

nlohmann::json to_json(const WcltCoefficients& c) {
  return {{"gamma_plus", to_json(c.gamma_plus)},
          {"gamma_minus", to_json(c.gamma_minus)},
          {"zeta_plus", to_json(c.zeta_plus)},
          {"zeta_minus", to_json(c.zeta_minus)}};
}

}  // namespace qmsa
