// Copyright 2026 The nonlincp Authors
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

// JSON and CSV encodings for matrices and trajectories.
//
// CMat JSON: {"dim": d, "entries": [[re, im], ...]} in row-major order.
// Doubles are written in shortest round-trip form, so decode(encode(x)) is
// bit-exact. CSV numbers use 17 significant digits in scientific notation.

#pragma once

#include "nonlincp/qalg.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>

namespace nonlincp::io {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json cmat_to_json(const CMat& a);
/// Throws FormatError on schema violations.
CMat cmat_from_json(const Json& j);

Json complex_to_json(Complex z);
/// Accepts a bare number or a [re, im] pair.
Complex complex_from_json(const Json& j);

/// "%.16e": 17 significant digits.
std::string format_double(double x);

/// Columns: t, then re/im of every entry in row-major order.
void write_matrix_series_csv(std::ostream& out, const TimeSeries<CMat>& series,
                             const std::string& label = "m");
void write_scalar_series_csv(std::ostream& out, const TimeSeries<double>& series,
                             const std::string& label = "value");

Json matrix_series_to_json(const TimeSeries<CMat>& series);
TimeSeries<CMat> matrix_series_from_json(const Json& j);

}  // namespace nonlincp::io
