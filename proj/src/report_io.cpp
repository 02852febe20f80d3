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


#include "qmsa/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qmsa {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

// json dumps doubles in shortest round-trip form, which is already exact.
nlohmann::json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

nlohmann::json num(Complex z) { return nlohmann::json::array({num(z.real()), num(z.imag())}); }

const char* kind_name(StudyKind k) { return k == StudyKind::Cp ? "cp" : "wclt"; }

}  // namespace

nlohmann::json to_json(const EquivalenceReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json row;
    row["n"] = r.n;
    row["norm_a"] = num(r.norm_a);
    row["norm_b"] = num(r.norm_b);
    row["norm_core_a"] = num(r.norm_core_a);
    row["norm_core_b"] = num(r.norm_core_b);
    row["d_n"] = num(r.distance);
    row["d_n_closed"] = num(r.distance_closed);
    row["toeplitz_core"] = num(r.toeplitz_core);
    row["toeplitz_cyclic"] = num(r.toeplitz_cyclic);
    if (report.kind == StudyKind::Wclt) {
      row["g_core"] = num(r.g_core);
      row["g_cyclic_real"] = num(r.g_cyclic_real);
      row["g_cyclic_imag"] = num(r.g_cyclic_imag);
      row["imag_bound"] = num(r.imag_bound);
    }
    row["decomposition_residual"] = num(r.decomposition_residual);
    records.push_back(row);
  }
  nlohmann::json j;
  j["kind"] = kind_name(report.kind);
  j["grid"] = report.grid;
  j["bound"] = num(report.bound);
  j["options"] = {{"ratio", num(report.options.ratio)},
                  {"slack", num(report.options.slack)},
                  {"bound_slack", num(report.options.bound_slack)}};
  j["records"] = records;
  j["verdicts"] = {{"uniform_bound", report.uniform_bound_ok},
                   {"monotone", report.monotone_ok},
                   {"decay_ratio", num(report.decay_ratio)},
                   {"decay", report.decay_ok},
                   {"passed", report.passed()}};
  return j;
}

nlohmann::json to_json(const MomentReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"s", r.s},
                    {"toeplitz", num(r.toeplitz)},
                    {"circulant", num(r.circulant)},
                    {"limit", num(r.limit)},
                    {"gap_toeplitz_circulant", num(r.gap_toeplitz_circulant)},
                    {"gap_toeplitz_limit", num(r.gap_toeplitz_limit)},
                    {"gap_circulant_limit", num(r.gap_circulant_limit)}});
  }
  nlohmann::json constants = nlohmann::json::array();
  for (double k : report.gap_constants) constants.push_back(num(k));
  return {{"s_max", report.s_max},
          {"grid", report.grid},
          {"hermitian", report.hermitian},
          {"rows", rows},
          {"gap_constants", constants},
          {"shrink", report.shrink_ok}};
}

nlohmann::json to_json(const Histogram& h) {
  return {{"two_dimensional", h.two_dimensional},
          {"bins", h.bins},
          {"re_range", {num(h.re_min), num(h.re_max)}},
          {"im_range", {num(h.im_min), num(h.im_max)}},
          {"counts", h.counts}};
}

void write_csv(std::ostream& out, const EquivalenceReport& report) {
  out << "n,norm_a,norm_b,d_n,d_n_closed,norm_core_a,norm_core_b,toeplitz_core,toeplitz_cyclic,"
         "g_core,g_cyclic_real,g_cyclic_imag,imag_bound,decomposition_residual\n";
  for (const auto& r : report.records) {
    out << r.n;
    for (double v : {r.norm_a, r.norm_b, r.distance, r.distance_closed, r.norm_core_a, r.norm_core_b,
                     r.toeplitz_core, r.toeplitz_cyclic, r.g_core, r.g_cyclic_real, r.g_cyclic_imag,
                     r.imag_bound, r.decomposition_residual}) {
      out << ',' << format_real(v);
    }
    out << '\n';
  }
}

void write_csv(std::ostream& out, const MomentReport& report) {
  out << "n,s,toeplitz_re,toeplitz_im,circulant_re,circulant_im,limit_re,limit_im,"
         "gap_toeplitz_circulant,gap_toeplitz_limit,gap_circulant_limit\n";
  for (const auto& r : report.rows) {
    out << r.n << ',' << r.s;
    for (double v : {r.toeplitz.real(), r.toeplitz.imag(), r.circulant.real(), r.circulant.imag(), r.limit.real(),
                     r.limit.imag(), r.gap_toeplitz_circulant, r.gap_toeplitz_limit, r.gap_circulant_limit}) {
      out << ',' << format_real(v);
    }
    out << '\n';
  }
}

void write_csv(std::ostream& out, const Histogram& h) {
  const double re_w = (h.re_max - h.re_min) / h.bins;
  const double im_w = (h.im_max - h.im_min) / h.bins;
  if (!h.two_dimensional) {
    out << "bin_left,bin_right,count\n";
    for (int b = 0; b < h.bins; ++b) {
      out << format_real(h.re_min + b * re_w) << ',' << format_real(h.re_min + (b + 1) * re_w) << ','
          << h.counts[static_cast<std::size_t>(b)] << '\n';
    }
    return;
  }
  out << "re_left,re_right,im_left,im_right,count\n";
  for (int a = 0; a < h.bins; ++a) {
    for (int b = 0; b < h.bins; ++b) {
      out << format_real(h.re_min + a * re_w) << ',' << format_real(h.re_min + (a + 1) * re_w) << ','
          << format_real(h.im_min + b * im_w) << ',' << format_real(h.im_min + (b + 1) * im_w) << ','
          << h.counts[static_cast<std::size_t>(a * h.bins + b)] << '\n';
    }
  }
}

void write_eigenvalue_csv(std::ostream& out, const std::vector<LabeledEigenvalue>& values) {
  out << "label,re,im\n";
  for (const auto& v : values) {
    out << v.label << ',' << format_real(v.value.real()) << ',' << format_real(v.value.imag()) << '\n';
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path);
}

}  // namespace qmsa
