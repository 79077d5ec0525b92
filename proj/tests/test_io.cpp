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
#include "nonlincp/random.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstring>
#include <sstream>

namespace nonlincp {
namespace {

bool bit_equal(const CMat& a, const CMat& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(), sizeof(Complex) * static_cast<std::size_t>(a.size())) == 0;
}

TEST(MatrixJson, SchemaIsRowMajor) {
  CMat a(2, 2);
  a << Complex(1, 2), Complex(3, 4), Complex(5, 6), Complex(7, 8);
  const io::Json j = io::cmat_to_json(a);
  EXPECT_EQ(j.at("dim"), 2);
  EXPECT_EQ(j.at("entries")[1], io::Json::array({3.0, 4.0}));
  EXPECT_EQ(j.at("entries")[2], io::Json::array({5.0, 6.0}));
}

TEST(MatrixJson, TextRoundTripIsBitExact) {
  CaseGenerator gen(21);
  for (int trial = 0; trial < 20; ++trial) {
    const CMat a = gen.complex_matrix(4, 4) * 1e3 * gen.uniform();
    const std::string text = io::cmat_to_json(a).dump();
    EXPECT_TRUE(bit_equal(io::cmat_from_json(io::Json::parse(text)), a));
  }
  CMat tiny(1, 1);
  tiny(0, 0) = Complex(5e-324, -1.0 / 3.0);
  EXPECT_TRUE(bit_equal(io::cmat_from_json(io::Json::parse(io::cmat_to_json(tiny).dump())), tiny));
}

TEST(MatrixJson, RejectsMalformedInput) {
  using io::Json;
  EXPECT_THROW(io::cmat_from_json(Json::array()), io::FormatError);
  EXPECT_THROW(io::cmat_from_json(Json{{"dim", 2}}), io::FormatError);
  EXPECT_THROW(io::cmat_from_json(Json{{"dim", 0}, {"entries", Json::array()}}), io::FormatError);
  EXPECT_THROW(io::cmat_from_json(Json{{"dim", 1.5}, {"entries", Json::array()}}), io::FormatError);
  EXPECT_THROW(io::cmat_from_json(Json{{"dim", 1}, {"entries", Json::array({Json::array({1.0, 0.0}), Json::array({1.0, 0.0})})}}),
               io::FormatError);
  EXPECT_THROW(io::cmat_from_json(Json{{"dim", 1}, {"entries", Json::array({Json::array({1.0})})}}), io::FormatError);
  EXPECT_THROW(io::cmat_from_json(Json{{"dim", 1}, {"entries", Json::array({Json::array({"x", 0.0})})}}), io::FormatError);
  EXPECT_THROW(io::cmat_to_json(CMat::Zero(2, 3)), io::FormatError);
}

TEST(ComplexJson, AcceptsNumberOrPair) {
  EXPECT_EQ(io::complex_from_json(io::Json(2.5)), Complex(2.5, 0.0));
  EXPECT_EQ(io::complex_from_json(io::Json::array({1.0, -2.0})), Complex(1.0, -2.0));
  EXPECT_EQ(io::complex_from_json(io::complex_to_json(Complex(0.1, 0.2))), Complex(0.1, 0.2));
  EXPECT_THROW(io::complex_from_json(io::Json("1")), io::FormatError);
  EXPECT_THROW(io::complex_from_json(io::Json::array({1.0, 2.0, 3.0})), io::FormatError);
}

TEST(Csv, SeventeenSignificantDigitsRoundTrip) {
  EXPECT_EQ(io::format_double(0.0), "0.0000000000000000e+00");
  EXPECT_EQ(io::format_double(-0.25), "-2.5000000000000000e-01");
  CaseGenerator gen(22);
  for (int i = 0; i < 1000; ++i) {
    const double x = gen.uniform() * std::pow(10.0, gen.uniform_int(-300, 300));
    EXPECT_EQ(std::stod(io::format_double(x)), x);
  }
}

TEST(Csv, MatrixSeriesLayout) {
  TimeSeries<CMat> s;
  CMat a(1, 1);
  a(0, 0) = Complex(1.0, -1.0);
  s.push(0.5, a);
  std::ostringstream out;
  io::write_matrix_series_csv(out, s, "rho");
  EXPECT_EQ(out.str(),
            "t,rho_0_0_re,rho_0_0_im\n"
            "5.0000000000000000e-01,1.0000000000000000e+00,-1.0000000000000000e+00\n");
  TimeSeries<double> sc;
  sc.push(1.0, 2.0);
  std::ostringstream out2;
  io::write_scalar_series_csv(out2, sc, "norm");
  EXPECT_EQ(out2.str(), "t,norm\n1.0000000000000000e+00,2.0000000000000000e+00\n");
}

TEST(SeriesJson, RoundTripAndLengthCheck) {
  CaseGenerator gen(23);
  TimeSeries<CMat> s;
  for (int i = 0; i < 3; ++i) s.push(0.1 * i, gen.complex_matrix(2, 2));
  const auto back = io::matrix_series_from_json(io::Json::parse(io::matrix_series_to_json(s).dump()));
  ASSERT_EQ(back.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_EQ(back.t[i], s.t[i]);
    EXPECT_TRUE(bit_equal(back.values[i], s.values[i]));
  }
  io::Json j = io::matrix_series_to_json(s);
  j["t"].push_back(1.0);
  EXPECT_THROW(io::matrix_series_from_json(j), io::FormatError);
  EXPECT_THROW(io::matrix_series_from_json(io::Json::object()), io::FormatError);
}

}  // namespace
}  // namespace nonlincp
