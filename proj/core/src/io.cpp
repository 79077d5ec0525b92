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

#include "nonlincp/io.hpp"

#include <cmath>
#include <cstdio>

namespace nonlincp::io {

Json cmat_to_json(const CMat& a) {
  if (a.rows() != a.cols()) throw FormatError("cmat_to_json: matrix must be square");
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      entries.push_back(Json::array({a(i, j).real(), a(i, j).imag()}));
    }
  }
  return Json{{"dim", a.rows()}, {"entries", std::move(entries)}};
}

CMat cmat_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw FormatError("matrix JSON must be an object with 'dim' and 'entries'");
  }
  if (!j.at("dim").is_number_integer() || j.at("dim").get<long long>() <= 0) {
    throw FormatError("matrix 'dim' must be a positive integer");
  }
  const auto dim = j.at("dim").get<Eigen::Index>();
  const Json& entries = j.at("entries");
  if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != dim * dim) {
    throw FormatError("matrix 'entries' must hold dim*dim = " + std::to_string(dim * dim) +
                      " elements");
  }
  CMat a(dim, dim);
  for (Eigen::Index k = 0; k < dim * dim; ++k) {
    const Json& e = entries[static_cast<std::size_t>(k)];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw FormatError("matrix entry " + std::to_string(k) + " must be [re, im]");
    }
    const Complex z(e[0].get<double>(), e[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw FormatError("matrix entry " + std::to_string(k) + " is not finite");
    }
    a(k / dim, k % dim) = z;
  }
  return a;
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw FormatError("complex number must be a number or [re, im]");
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

void write_matrix_series_csv(std::ostream& out, const TimeSeries<CMat>& series,
                             const std::string& label) {
  const Eigen::Index dim = series.values.empty() ? 0 : series.values.front().rows();
  out << "t";
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      out << ',' << label << '_' << i << '_' << j << "_re," << label << '_' << i << '_' << j
          << "_im";
    }
  }
  out << '\n';
  for (std::size_t r = 0; r < series.size(); ++r) {
    out << format_double(series.t[r]);
    const CMat& m = series.values[r];
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        out << ',' << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag());
      }
    }
    out << '\n';
  }
}

void write_scalar_series_csv(std::ostream& out, const TimeSeries<double>& series,
                             const std::string& label) {
  out << "t," << label << '\n';
  for (std::size_t r = 0; r < series.size(); ++r) {
    out << format_double(series.t[r]) << ',' << format_double(series.values[r]) << '\n';
  }
}

Json matrix_series_to_json(const TimeSeries<CMat>& series) {
  Json values = Json::array();
  for (const CMat& m : series.values) values.push_back(cmat_to_json(m));
  return Json{{"t", series.t}, {"values", std::move(values)}};
}

TimeSeries<CMat> matrix_series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("t") || !j.contains("values")) {
    throw FormatError("time series JSON must have 't' and 'values'");
  }
  TimeSeries<CMat> out;
  out.t = j.at("t").get<std::vector<double>>();
  for (const Json& v : j.at("values")) out.values.push_back(cmat_from_json(v));
  if (out.t.size() != out.values.size()) {
    throw FormatError("time series 't' and 'values' differ in length");
  }
  return out;
}

}  // namespace nonlincp::io
