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

#include "circle_npd/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "circle_npd/alpha_max.hpp"
#include "circle_npd/errors.hpp"
#include "circle_npd/parallel.hpp"

namespace npd {
namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<double> number_array(const ordered_json& j, const char* field) {
  if (!j.is_array()) throw FunctionSpecError(std::string("field '") + field + "' must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number()) {
      throw FunctionSpecError(std::string("field '") + field + "' must contain only numbers");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

ordered_json condition_json(const OptimalityCertificate& cert) {
  ordered_json c;
  if (const auto* cp = std::get_if<CriticalPointCondition>(&cert.condition)) {
    c["type"] = "critical_point_of_F";
    c["theta"] = round_sig10(cp->theta);
    c["grad_residual"] = cp->grad_residual;
  } else if (const auto* os = std::get_if<OppositeSignsCondition>(&cert.condition)) {
    c["type"] = "opposite_signs";
    c["theta1"] = round_sig10(os->theta1);
    c["theta2"] = round_sig10(os->theta2);
    c["slope1"] = os->slope1;
    c["slope2"] = os->slope2;
  } else if (const auto* zd = std::get_if<ZeroDistanceCondition>(&cert.condition)) {
    c["type"] = "zero_distance_match";
    ordered_json pairs = ordered_json::array();
    for (const MatchedCriticalPair& p : zd->pairs) {
      ordered_json pj;
      pj["theta_phi"] = round_sig10(p.theta_phi);
      pj["theta_psi"] = round_sig10(p.theta_psi);
      pj["value"] = p.value;
      pairs.push_back(pj);
    }
    c["pairs"] = std::move(pairs);
  } else {
    const auto& un = std::get<UncertifiedCondition>(cert.condition);
    c["type"] = "uncertified";
    c["reason"] = un.reason;
    ordered_json rows = ordered_json::array();
    for (const ResidualRow& r : un.residuals) {
      ordered_json rj;
      rj["theta"] = round_sig10(r.theta);
      rj["f"] = r.f_value;
      rj["df_dtheta"] = r.df_dtheta;
      rj["df_dalpha"] = r.df_dalpha;
      rows.push_back(rj);
    }
    c["residuals"] = std::move(rows);
  }
  return c;
}

ordered_json certificate_node(const OptimalityCertificate& cert) {
  ordered_json j;
  j["alpha"] = round_sig10(cert.alpha);
  j["condition"] = condition_json(cert);
  if (cert.hessian_det) j["hessian_det"] = *cert.hessian_det;
  return j;
}

}  // namespace

double round_sig10(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return std::strtod(buf, nullptr);
}

PeriodicFunction parse_function_spec(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text, nullptr, false);
  if (j.is_discarded()) throw FunctionSpecError("function spec is not valid JSON");
  if (!j.is_object()) throw FunctionSpecError("function spec must be a JSON object");
  if (!j.contains("type") || !j["type"].is_string()) {
    throw FunctionSpecError("function spec needs a string field 'type'");
  }
  const std::string type = j["type"].get<std::string>();
  if (type == "fourier") {
    double a0 = 0.0;
    if (j.contains("a0")) {
      if (!j["a0"].is_number()) throw FunctionSpecError("field 'a0' must be a number");
      a0 = j["a0"].get<double>();
    }
    std::vector<double> cos_coeffs, sin_coeffs;
    if (j.contains("cos")) cos_coeffs = number_array(j["cos"], "cos");
    if (j.contains("sin")) sin_coeffs = number_array(j["sin"], "sin");
    if (cos_coeffs.empty() && sin_coeffs.empty() && a0 == 0.0) {
      throw FunctionSpecError("fourier spec has no coefficients at all");
    }
    return PeriodicFunction::fourier(a0, std::move(cos_coeffs), std::move(sin_coeffs));
  }
  if (type == "samples") {
    if (!j.contains("values")) throw FunctionSpecError("samples spec needs field 'values'");
    return PeriodicFunction::samples(number_array(j["values"], "values"));
  }
  throw FunctionSpecError("unknown function spec type '" + type + "' (want fourier or samples)");
}

PeriodicFunction load_function_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FunctionSpecError("cannot open function spec '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_function_spec(buf.str());
  } catch (const FunctionSpecError& e) {
    throw FunctionSpecError(path + ": " + e.what());
  }
}

std::string function_spec_json(const PeriodicFunction& f) {
  ordered_json j;
  if (f.backend() == PeriodicFunction::Backend::fourier) {
    j["type"] = "fourier";
    j["a0"] = f.a0();
    j["cos"] = f.cos_coeffs();
    j["sin"] = f.sin_coeffs();
  } else {
    j["type"] = "samples";
    j["values"] = f.sample_values();
  }
  return j.dump(2) + "\n";
}

std::string npd_result_json(const NpdResult& result) {
  ordered_json j;
  j["distance"] = result.distance;
  j["bracket"] = {{"lower", result.bracket.lower}, {"upper", result.bracket.upper}};
  ordered_json alphas = ordered_json::array();
  for (double a : result.optimal_alphas) alphas.push_back(round_sig10(a));
  j["optimal_alphas"] = std::move(alphas);
  ordered_json certs = ordered_json::array();
  for (const OptimalityCertificate& c : result.certificates) certs.push_back(certificate_node(c));
  j["certificates"] = std::move(certs);
  j["profile_resolution"] = result.profile_resolution;
  return j.dump(2) + "\n";
}

std::string certificate_json(const OptimalityCertificate& cert) {
  return certificate_node(cert).dump(2) + "\n";
}

std::string oracle_json(const GridOracleResult& oracle) {
  ordered_json j;
  j["lower"] = oracle.bracket.lower;
  j["upper"] = oracle.bracket.upper;
  ordered_json cells = ordered_json::array();
  for (double a : oracle.argmin_cells) cells.push_back(round_sig10(a));
  j["argmin_cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

std::string critical_report_json(const std::vector<CriticalPoint>& points,
                                 const MorseReport& report) {
  ordered_json j;
  j["morse"] = report.morse;
  ordered_json rows = ordered_json::array();
  for (const CriticalPoint& p : points) {
    ordered_json row;
    row["theta"] = round_sig10(p.theta);
    row["value"] = p.value;
    row["second_derivative"] = p.second_derivative;
    row["kind"] = p.kind == CriticalKind::maximum ? "max" : "min";
    rows.push_back(row);
  }
  j["points"] = std::move(rows);
  ordered_json witnesses = ordered_json::array();
  for (const CriticalPoint& p : report.witnesses) witnesses.push_back(round_sig10(p.theta));
  j["witnesses"] = std::move(witnesses);
  return j.dump(2) + "\n";
}

std::string critical_report_csv(const std::vector<CriticalPoint>& points,
                                const MorseReport& report) {
  std::string out = "# theta,value,second_derivative,kind\n";
  char buf[160];
  for (const CriticalPoint& p : points) {
    std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g,%s\n", round_sig10(p.theta), p.value,
                  p.second_derivative, p.kind == CriticalKind::maximum ? "max" : "min");
    out += buf;
  }
  out += report.morse ? "# morse,true\n" : "# morse,false\n";
  return out;
}

std::string profile_csv(const PeriodicFunction& phi, const PeriodicFunction& psi,
                        std::size_t n_alpha, std::size_t n_theta, double best_alpha) {
  const double h_alpha = kTau / static_cast<double>(n_alpha);
  const double h_theta = kTau / static_cast<double>(n_theta);

  std::vector<double> g(n_alpha);
  parallel_for(n_alpha, [&](std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) {
      g[j] = f_alpha_max(phi, psi, static_cast<double>(j) * h_alpha, n_theta).g_value;
    }
  });

  std::string out = "# alpha,g\n";
  char buf[160];
  for (std::size_t j = 0; j < n_alpha; ++j) {
    std::snprintf(buf, sizeof buf, "%.10g,%.10g\n", round_sig10(static_cast<double>(j) * h_alpha),
                  g[j]);
    out += buf;
  }

  std::vector<double> phi_row(n_theta), psi_row(n_theta);
  phi.eval_grid(0.0, h_theta, n_theta, 0, phi_row.data());
  psi.eval_grid(best_alpha, h_theta, n_theta, 0, psi_row.data());
  std::snprintf(buf, sizeof buf, "# theta,phi,psi_shifted,absdiff  (alpha = %.10g)\n",
                round_sig10(best_alpha));
  out += buf;
  for (std::size_t i = 0; i < n_theta; ++i) {
    std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g,%.10g\n",
                  round_sig10(static_cast<double>(i) * h_theta), phi_row[i], psi_row[i],
                  std::fabs(phi_row[i] - psi_row[i]));
    out += buf;
  }
  return out;
}

}  // namespace npd
