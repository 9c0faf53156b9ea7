// Copyright 2026 The omegak Authors
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

#include <cstdio>
#include <sstream>
#include <string>

#include "json.hpp"
#include "omegak/certify.hpp"

namespace omegak {
namespace {

using Json = nlohmann::ordered_json;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json point_json(const BoundPoint& p) {
  Json j;
  j["n"] = p.n;
  j["m"] = p.m;
  j["ell"] = p.ell;
  j["xt"] = p.xt;
  return j;
}

Json record_json(const BoundCheckRecord& r) {
  Json j;
  j["point"] = point_json(r.point);
  j["lhs"] = r.lhs;
  j["lhs_err"] = r.lhs_err;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["relative_margin"] = r.rhs > 0.0 ? r.margin / r.rhs : r.margin;
  j["pass"] = r.pass;
  j["reliable"] = r.reliable;
  j["tight"] = r.tight;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

const char* reading_name(MajorantReading r) {
  return r == MajorantReading::kRowOrder ? "row-order (A_1^(0) = 0)" : "m=0 row (A_1^(0) = 1/sqrt(2))";
}

}  // namespace

std::string report_json(const CertReport& report) {
  Json root;
  root["schema"] = report.schema;
  root["tool_version"] = report.tool_version;
  root["grid_hash"] = report.grid_hash;
  root["status"] = status_name(report.status());
  Json bounds = Json::array();
  for (const auto& b : report.bounds) {
    const BoundSpec& spec = find_bound(b.bound_id);
    Json j;
    j["id"] = b.bound_id;
    j["status"] = status_name(b.status);
    j["formula"] = spec.formula;
    j["region"] = spec.region.description;
    j["log_base_sensitive"] = spec.log_base_sensitive;
    Json consts;
    consts["gamma"] = b.constants.gamma;
    consts["C"] = b.constants.C;
    consts["c"] = b.constants.c;
    j["constants"] = consts;
    Json fit;
    fit["applicable"] = b.fit.applicable;
    if (b.fit.applicable) {
      fit["success"] = b.fit.success;
      fit["gamma_min"] = b.fit.gamma;
      fit["reliable_points"] = b.fit.reliable_points;
      fit["excluded_unreliable"] = b.fit.excluded_unreliable;
      if (b.fit.worst_offender) fit["worst_offender"] = record_json(*b.fit.worst_offender);
    }
    j["fit"] = fit;
    Json counts;
    counts["points"] = b.points;
    counts["passed"] = b.passed;
    counts["failed"] = b.failed;
    counts["unreliable"] = b.unreliable;
    counts["unreliable_failed"] = b.unreliable_failed;
    counts["tight"] = b.tight;
    counts["errors"] = b.errors;
    j["counts"] = counts;
    j["worst_margin"] = b.worst ? record_json(*b.worst) : Json(nullptr);
    bounds.push_back(j);
  }
  root["bounds"] = bounds;
  Json maj = Json::array();
  for (const auto& c : report.majorants) {
    Json j;
    j["reading"] = reading_name(c.reading);
    j["samples"] = c.samples;
    j["violations"] = c.violations;
    j["worst_ratio"] = c.worst_ratio;
    j["worst_point"] = {{"n", c.worst_n}, {"m", c.worst_m}, {"t", c.worst_t}};
    maj.push_back(j);
  }
  root["majorant_checks"] = maj;
  return root.dump(2) + "\n";
}

std::string report_csv(const CertReport& report) {
  std::ostringstream os;
  os << "bound_id,n,m,ell,xt,lhs,lhs_err,rhs,margin,pass,reliable,tight\n";
  for (const auto& b : report.bounds) {
    for (const auto& r : b.records) {
      os << r.bound_id << ',' << r.point.n << ',' << r.point.m << ',' << r.point.ell << ',' << num(r.point.xt)
         << ',' << num(r.lhs) << ',' << num(r.lhs_err) << ',' << num(r.rhs) << ',' << num(r.margin) << ','
         << (r.pass ? 1 : 0) << ',' << (r.reliable ? 1 : 0) << ',' << (r.tight ? 1 : 0) << '\n';
    }
  }
  return os.str();
}

}  // namespace omegak
