#pragma once

// JSON views of the library's report types. Field names and array order are
// part of the tool's machine interface; arrays follow 1-based position
// order and all key order is insertion order.

#include <json.hpp>

#include "area_sequence.hpp"
#include "lab.hpp"
#include "statistics.hpp"
#include "zeta.hpp"

namespace dyck {

using json = nlohmann::ordered_json;

inline json to_json(const area_sequence& w) { return json(w.to_vector()); }

inline json stats_report_json(const area_sequence& w) {
  const auto dp = dinv_profile::of(w);
  const auto bp = bounce_profile::of(w);
  json j;
  j["n"] = w.size();
  j["w"] = w.to_vector();
  j["area"] = area(w);
  j["dinv"] = dp.total;
  j["dinv_profile"] = dp.d;
  j["bounce"] = bp.bounce;
  j["bounce_sequence"] = bp.b;
  j["bounces"] = bp.bounces;
  return j;
}

inline json map_report_json(const area_sequence& input,
                            const area_sequence& image,
                            const insertion_trace* trace = nullptr) {
  json j;
  j["input"] = input.to_vector();
  j["image"] = image.to_vector();
  if (trace != nullptr) {
    json steps = json::array();
    for (const auto& s : trace->steps) {
      json entry;
      entry["letter"] = s.letter;
      entry["position"] = s.position;
      entry["image"] = s.image.to_vector();
      steps.push_back(std::move(entry));
    }
    j["trace"] = std::move(steps);
  }
  return j;
}

inline json insertions_report_json(const area_sequence& w,
                                   const admissible_insertions& a) {
  json j;
  j["w"] = w.to_vector();
  j["maxb"] = a.maxb;
  j["maxa"] = a.maxa;
  j["i0"] = a.i0 ? json(*a.i0) : json(nullptr);
  j["order"] = a.order;
  return j;
}

inline json verify_report_json(const lab::verify_report& report) {
  json j;
  j["n"] = report.n;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["counterexample"] =
        c.counterexample ? json(c.counterexample->to_vector()) : json(nullptr);
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  j["elapsed_ms"] = report.elapsed.count();
  return j;
}

inline json matrix_report_json(const lab::qt_matrix& m) {
  json j;
  j["n"] = m.n();
  j["s1"] = lab::to_string(m.row_statistic());
  j["s2"] = lab::to_string(m.col_statistic());
  j["counts"] = m.counts();
  return j;
}

}  // namespace dyck
