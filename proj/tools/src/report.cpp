// Copyright 2026 The nsgroup Authors
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

#include "nsgroup/cli/report.hpp"

namespace nsgroup::cli {

Json group_json(const FiniteGroup& g) {
  return Json{{"label", g.label()}, {"order", g.order()}};
}

Json set_json(const ElementSet& s) {
  Json j;
  j["order"] = s.size();
  j["members"] = Json(std::vector<Element>(s.members().begin(),
                                           s.members().end()));
  if (s.parent().has_element_names() && s.size() <= kMaxNamedMembers) {
    Json names = Json::array();
    for (Element a : s.members()) names.push_back(s.parent().element_name(a));
    j["elements"] = std::move(names);
  }
  return j;
}

Json ns_report_json(const NsReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["primes1"] = Json(std::vector<std::size_t>(r.primes1.begin(),
                                               r.primes1.end()));
  j["primes2"] = Json(std::vector<std::size_t>(r.primes2.begin(),
                                               r.primes2.end()));
  j["pairs_scanned"] = r.pairs_scanned;
  if (r.violation) {
    j["violation"] = Json{{"h1", set_json(r.violation->h1)},
                          {"h2", set_json(r.violation->h2)},
                          {"prime", r.violation->prime}};
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

Json goursat_json(const GoursatData& g) {
  Json j;
  j["h1"] = set_json(g.h1);
  j["h2"] = set_json(g.h2);
  j["p1"] = set_json(g.p1);
  j["p2"] = set_json(g.p2);
  j["section_order"] = g.f.domain().order();
  // f as (coset representative in p1, coset representative in p2) pairs.
  Json f = Json::array();
  const auto& q1 = g.section1.quotient;
  const auto& q2 = g.section2.quotient;
  for (Element c = 0; c < q1.group.order(); ++c) {
    const Element a = g.section1.upper.to_parent[q1.representative(c)];
    const Element b = g.section2.upper.to_parent[q2.representative(g.f(c))];
    f.push_back(Json::array({a, b}));
  }
  j["f"] = std::move(f);
  return j;
}

Json verdict_json(const StandardnessVerdict& v) {
  Json j;
  j["subgroup"] = set_json(v.subgroup);
  j["standard"] = v.standard;
  if (v.factors) {
    j["factors"] = Json{{"n1", set_json(v.factors->first)},
                        {"n2", set_json(v.factors->second)}};
  } else {
    j["factors"] = nullptr;
  }
  j["goursat"] = v.goursat ? goursat_json(*v.goursat) : Json(nullptr);
  return j;
}

Json factors_json(const FactorMultiset& m) {
  Json arr = Json::array();
  for (const auto& e : m.entries()) {
    arr.push_back(Json{{"label", e.label.name},
                       {"order", e.label.order},
                       {"abelian", e.label.abelian},
                       {"multiplicity", e.multiplicity}});
  }
  return arr;
}

Json check_json(const CheckResult& c, bool with_timing) {
  Json j{{"id", c.id},
         {"title", c.title},
         {"passed", c.passed},
         {"detail", c.detail}};
  if (with_timing) j["seconds"] = c.seconds;
  return j;
}

Json make_report(const std::string& command, Json inputs, Json results,
                 std::optional<double> timing_ms) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["results"] = std::move(results);
  j["timing_ms"] = timing_ms ? Json(*timing_ms) : Json(nullptr);
  return j;
}

std::string describe_set(const ElementSet& s) {
  if (s.size() > 12) return "<order " + std::to_string(s.size()) + ">";
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) out += ", ";
    out += s.parent().element_name(s.members()[i]);
  }
  return out + "}";
}

}  // namespace nsgroup::cli
