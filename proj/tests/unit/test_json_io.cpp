// Copyright 2026 The circle-npd Authors
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

#include <string>

#include <doctest.h>
#include <json.hpp>

#include "circle_npd/errors.hpp"
#include "circle_npd/json_io.hpp"
#include "circle_npd/npd.hpp"
#include "test_helpers.hpp"

using nlohmann::json;
using npd::parse_function_spec;
using npd::PeriodicFunction;

TEST_CASE("fourier spec round trip preserves exact coefficients") {
  const PeriodicFunction f =
      PeriodicFunction::fourier(0.1234567890123456, {1.0 / 3.0, -2e-17}, {0.5});
  const PeriodicFunction g = parse_function_spec(npd::function_spec_json(f));
  REQUIRE(g.backend() == PeriodicFunction::Backend::fourier);
  CHECK(g.a0() == f.a0());
  REQUIRE(g.cos_coeffs().size() == f.cos_coeffs().size());
  for (std::size_t i = 0; i < f.cos_coeffs().size(); ++i) {
    CHECK(g.cos_coeffs()[i] == f.cos_coeffs()[i]);
    CHECK(g.sin_coeffs()[i] == f.sin_coeffs()[i]);
  }
}

TEST_CASE("samples spec round trip preserves exact values") {
  const PeriodicFunction f = PeriodicFunction::samples({0.25, 1.0, -0.125, -1.0 / 3.0, 0.0});
  const PeriodicFunction g = parse_function_spec(npd::function_spec_json(f));
  REQUIRE(g.backend() == PeriodicFunction::Backend::samples);
  REQUIRE(g.sample_values().size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(g.sample_values()[i] == f.sample_values()[i]);
}

TEST_CASE("malformed specs fail with a field diagnostic") {
  using npd::FunctionSpecError;
  CHECK_THROWS_AS(parse_function_spec("not json at all"), FunctionSpecError);
  CHECK_THROWS_AS(parse_function_spec("[1,2,3]"), FunctionSpecError);
  CHECK_THROWS_AS(parse_function_spec("{\"cos\":[1]}"), FunctionSpecError);
  CHECK_THROWS_AS(parse_function_spec("{\"type\":\"spline\"}"), FunctionSpecError);
  CHECK_THROWS_AS(parse_function_spec("{\"type\":\"fourier\"}"), FunctionSpecError);
  CHECK_THROWS_AS(parse_function_spec("{\"type\":\"fourier\",\"cos\":[1,\"x\"]}"),
                  FunctionSpecError);
  CHECK_THROWS_AS(parse_function_spec("{\"type\":\"samples\"}"), FunctionSpecError);
  CHECK_THROWS_AS(parse_function_spec("{\"type\":\"samples\",\"values\":[1,2]}"),
                  FunctionSpecError);
  CHECK_THROWS_AS(npd::load_function_spec("/nonexistent/path.json"), FunctionSpecError);
}

TEST_CASE("angles print with ten significant digits and re-parse to the printed value") {
  CHECK(npd::round_sig10(npd_test::kPi) == 3.141592654);
  CHECK(npd::round_sig10(0.0) == 0.0);
  CHECK(npd::round_sig10(npd::round_sig10(1.0 / 3.0)) == npd::round_sig10(1.0 / 3.0));
}

TEST_CASE("result serialization carries the full structure") {
  const npd::NpdResult r =
      npd::compute_npd(npd_test::pair_b_phi(), npd_test::pair_b_psi());
  const std::string text = npd::npd_result_json(r);
  REQUIRE(!text.empty());
  CHECK(text.back() == '\n');
  const json j = json::parse(text);
  CHECK(j["distance"].get<double>() == r.distance);
  CHECK(j["bracket"]["lower"].get<double>() == r.bracket.lower);
  CHECK(j["bracket"]["upper"].get<double>() == r.bracket.upper);
  REQUIRE(j["optimal_alphas"].size() == r.optimal_alphas.size());
  REQUIRE(j["certificates"].size() == r.certificates.size());
  for (const auto& cert : j["certificates"]) {
    CHECK(cert.contains("alpha"));
    CHECK(cert["condition"]["type"].is_string());
  }
  CHECK(j["profile_resolution"].get<std::size_t>() == r.profile_resolution);
  // Serialization is deterministic byte-for-byte.
  CHECK(npd::npd_result_json(r) == text);
}

TEST_CASE("certificate serialization names each condition") {
  const auto zero = npd::certify(npd_test::pair_b_psi(), npd_test::pair_b_psi(), 0.0, 0.0);
  CHECK(json::parse(npd::certificate_json(zero))["condition"]["type"] ==
        "zero_distance_match");
  const auto saddle = npd::certify(npd_test::pair_a_phi(), npd_test::pair_a_psi(), 0.0, 0.5);
  const json js = json::parse(npd::certificate_json(saddle));
  CHECK(js["condition"]["type"] == "critical_point_of_F");
  CHECK(js.contains("hessian_det"));
}

TEST_CASE("oracle and critical-point reports serialize cleanly") {
  const auto oracle = npd::grid_oracle(npd_test::pair_a_phi(), npd_test::pair_a_psi(), 256, 256);
  const json jo = json::parse(npd::oracle_json(oracle));
  CHECK(jo["lower"].get<double>() == oracle.bracket.lower);
  CHECK(jo["upper"].get<double>() == oracle.bracket.upper);
  CHECK(jo["argmin_cells"].is_array());

  const auto pts = npd::critical_points(npd_test::pair_b_phi());
  const auto rep = npd::is_morse(npd_test::pair_b_phi());
  const json jc = json::parse(npd::critical_report_json(pts, rep));
  CHECK(jc["morse"].get<bool>());
  REQUIRE(jc["points"].size() == 4);
  CHECK(jc["points"][0]["kind"].is_string());

  const std::string csv = npd::critical_report_csv(pts, rep);
  CHECK(csv.rfind("# theta,value,second_derivative,kind\n", 0) == 0);
  CHECK(csv.find("# morse,true") != std::string::npos);
}

TEST_CASE("profile csv has the two documented sections") {
  const std::string csv = npd::profile_csv(npd_test::pair_a_phi(), npd_test::pair_a_psi(), 64,
                                           64, 0.0);
  CHECK(csv.rfind("# alpha,g\n", 0) == 0);
  CHECK(csv.find("# theta,phi,psi_shifted,absdiff") != std::string::npos);
  // 64 profile rows + 64 overlay rows + 2 headers.
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 130);
}
