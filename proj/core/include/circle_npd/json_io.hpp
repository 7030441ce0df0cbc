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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "circle_npd/certify.hpp"
#include "circle_npd/critical_points.hpp"
#include "circle_npd/grid_oracle.hpp"
#include "circle_npd/npd.hpp"

namespace npd {

/// Angles are printed with 10 significant digits; this is the value that
/// printing produces, so serialized output re-parses to exactly what reads on
/// screen.
double round_sig10(double x);

/// Function specs:
///   {"type":"fourier","a0":0.0,"cos":[...],"sin":[...]}   (index k = 1..K)
///   {"type":"samples","values":[...]}                     (theta_j = 2*pi*j/M)
/// Throws FunctionSpecError with a field diagnostic on malformed input.
PeriodicFunction parse_function_spec(const std::string& json_text);
PeriodicFunction load_function_spec(const std::string& path);
std::string function_spec_json(const PeriodicFunction& f);

std::string npd_result_json(const NpdResult& result);
std::string certificate_json(const OptimalityCertificate& cert);
std::string oracle_json(const GridOracleResult& oracle);

std::string critical_report_json(const std::vector<CriticalPoint>& points,
                                 const MorseReport& report);
std::string critical_report_csv(const std::vector<CriticalPoint>& points,
                                const MorseReport& report);

/// Plot-ready data: n_alpha rows of `alpha,g`, then n_theta rows of
/// `theta,phi,psi_shifted,absdiff` at the first optimal rotation.
std::string profile_csv(const PeriodicFunction& phi, const PeriodicFunction& psi,
                        std::size_t n_alpha, std::size_t n_theta, double best_alpha);

}  // namespace npd
