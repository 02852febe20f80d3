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


#ifndef QMSA_REPORT_IO_HPP_
#define QMSA_REPORT_IO_HPP_

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmsa/asymptotics.hpp"
#include "qmsa/spectral.hpp"

namespace qmsa {

/// 17 significant digits, "%.17g".
std::string format_real(double x);

nlohmann::json to_json(const EquivalenceReport& report);
nlohmann::json to_json(const MomentReport& report);
nlohmann::json to_json(const Histogram& h);

/// One row per n: n, norm_a, norm_b, d_n, d_n_closed, then the parts.
void write_csv(std::ostream& out, const EquivalenceReport& report);
/// One row per (n, s); complex moments as re/im column pairs.
void write_csv(std::ostream& out, const MomentReport& report);
/// bin_left, bin_right, count; 2-D form re_left, re_right, im_left, im_right, count.
void write_csv(std::ostream& out, const Histogram& h);
/// label, re, im.
void write_eigenvalue_csv(std::ostream& out, const std::vector<LabeledEigenvalue>& values);

/// Writes text to path; throws std::runtime_error when the file cannot be opened.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qmsa

#endif  // QMSA_REPORT_IO_HPP_
