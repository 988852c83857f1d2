// Copyright 2026 The hadamard-toolkit Authors
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

#ifndef HADAMARD_CLI_REPORT_HPP
#define HADAMARD_CLI_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hadamard/geometry/singular.hpp"
#include "hadamard/invariants.hpp"
#include "hadamard/parse.hpp"
#include "hadamard/predictor.hpp"

namespace hadamard::cli {

using Json = nlohmann::json;

enum class Status { Match, Mismatch, NotApplicable };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Match: return "match";
    case Status::Mismatch: return "mismatch";
    default: return "not_applicable";
  }
}

struct Verdict {
  std::string id;     // claim identifier, e.g. "product.degree"
  std::string claim;  // the claim in words
  Json expected;
  Json computed;
  Status status = Status::NotApplicable;
};

inline Verdict compare(std::string id, std::string claim, const Json& expected, const Json& computed) {
  return {std::move(id), std::move(claim), expected, computed, expected == computed ? Status::Match : Status::Mismatch};
}

inline Verdict check(std::string id, std::string claim, const Json& expected, const Json& computed, bool ok) {
  return {std::move(id), std::move(claim), expected, computed, ok ? Status::Match : Status::Mismatch};
}

inline Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

inline Json to_json(const InvariantReport& r) {
  Json j;
  j["dimension"] = r.dimension;
  j["degree"] = r.degree ? integer_json(*r.degree) : Json(nullptr);
  j["empty"] = r.empty();
  Json hf = Json::array();
  for (const auto& v : r.hilbert_function) hf.push_back(integer_json(v));
  j["hilbert_function"] = hf;
  j["hilbert_numerator"] = r.numerator.to_string();
  return j;
}

template <Field K>
Json generators_json(const std::vector<Polynomial<K>>& gens) {
  Json a = Json::array();
  for (const auto& g : gens) a.push_back(to_string(g));
  return a;
}

template <Field K>
Json to_json(const SingularReport<K>& s) {
  Json j;
  j["smooth"] = s.smooth;
  j["codimension"] = s.codimension;
  j["minor_count"] = s.minor_count;
  j["invariants"] = to_json(s.invariants);
  j["ideal"] = generators_json(s.ideal.groebner_basis());
  return j;
}

inline Json to_json(const FactorSignature& f) { return Json{{"r", f.r}, {"d", f.d}, {"h", f.span()}}; }

inline Json to_json(const TableHit& h) {
  Json j{{"table", h.table}, {"row", h.row}, {"inequality", h.inequality}, {"holds", h.holds}};
  if (h.table == "singular_range") j["n_range"] = Json::array({h.n_min, h.n_max});
  return j;
}

inline Json to_json(const Prediction& p) {
  Json j;
  j["threshold"] = p.threshold;
  j["threshold_mode"] = p.mode == ThresholdMode::Span ? "span" : "parametric";
  j["regime"] = to_string(p.regime);
  j["exceeds_dimension_sum"] = p.exceeds_dimension_sum;
  j["dimension"] = p.dimension;
  j["degree"] = integer_json(p.degree);
  j["degree_product_of_d"] = integer_json(p.degree_literal);
  j["hf_relation"] = to_string(p.hf);
  j["secant_dimension"] = p.secant_dimension;
  j["smoothness"] = to_string(p.smoothness);
  if (p.smoothness == Smoothness::SingularWithBound) j["singular_dimension_at_least"] = p.singular_bound;
  Json hits = Json::array();
  for (const auto& h : p.hits) hits.push_back(to_json(h));
  j["table_hits"] = hits;
  return j;
}

inline Json to_json(const Verdict& v) {
  return Json{{"id", v.id}, {"claim", v.claim}, {"expected", v.expected}, {"computed", v.computed},
              {"status", to_string(v.status)}};
}

inline Json verdicts_json(const std::vector<Verdict>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

inline bool any_mismatch(const std::vector<Verdict>& vs) {
  for (const auto& v : vs)
    if (v.status == Status::Mismatch) return true;
  return false;
}

inline Json make_report(const std::string& command, Json computed, Json predicted, const std::vector<Verdict>& verdicts,
                        Json certificates) {
  Json r;
  r["command"] = command;
  r["computed"] = computed.is_null() ? Json::object() : std::move(computed);
  r["predicted"] = predicted.is_null() ? Json::object() : std::move(predicted);
  r["verdicts"] = verdicts_json(verdicts);
  r["certificates"] = certificates.is_null() ? Json::object() : std::move(certificates);
  return r;
}

namespace detail {

inline void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
  if (j.is_object()) {
    if (j.empty() && !path.empty()) out << path << ": {}\n";
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace detail

/// Text form: one "path: value" line per leaf, verdicts summarized first.
inline std::string render_text(const Json& report) {
  std::ostringstream out;
  if (report.contains("verdicts"))
    for (const auto& v : report["verdicts"])
      out << "[" << v["status"].get<std::string>() << "] " << v["id"].get<std::string>() << ": expected "
          << v["expected"].dump() << ", computed " << v["computed"].dump() << "\n";
  Json rest = report;
  rest.erase("verdicts");
  detail::flatten(rest, "", out);
  return out.str();
}

inline std::string render(const Json& report, bool json) { return json ? report.dump(2) + "\n" : render_text(report); }

}  // namespace hadamard::cli

#endif  // HADAMARD_CLI_REPORT_HPP
