#ifndef NICOM_REPORT_JSON_HPP
#define NICOM_REPORT_JSON_HPP

// JSON and CSV renderings of claim reports and certificates. Big integers
// are decimal strings and rationals "num/den" strings; key order is fixed.

#include "nicom/recurrence_prover.hpp"
#include "nicom/verify_suite.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace nicom {

using Json = nlohmann::ordered_json;

inline Json to_json(const Certificate& c) {
  Json j;
  j["claim"] = c.claim;
  j["shape"] = shape_name(c.spec.shape);
  j["bound"] = c.spec.bound;
  j["degree"] = c.degree;
  j["terms_checked"] = c.terms_agreed;
  j["window"] = c.window;
  j["verdict"] = c.certified() ? "certified" : "refuted";
  j["refuted_at"] = c.refuted_at ? Json(*c.refuted_at) : Json(nullptr);
  j["reason"] = c.reason;
  j["root_containment"] = "trusted: structural recursion for the moment sums";
  return j;
}

inline Json to_json(const ClaimReport& r) {
  Json j;
  j["claim"] = claim_name(r.claim);
  j["range"] = Json::array({r.lo, r.hi});
  Json engines = Json::array();
  for (Engine e : r.engines) engines.push_back(engine_name(e));
  j["engines"] = engines;
  j["verdict"] = r.pass() ? "pass" : "fail";
  Json failures = Json::array();
  for (const Failure& f : r.failures()) {
    failures.push_back(Json{{"index", f.index}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  }
  j["failures"] = failures;
  j["skipped"] = r.skipped;
  if (r.certificates) {
    Json certs = Json::array();
    for (const auto& c : *r.certificates) certs.push_back(to_json(c));
    j["certificate"] = certs;
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

inline std::string dump(const Json& j) { return j.dump(2); }

/// One row per comparison: claim,k,lhs,rhs,equal.
inline std::string to_csv(const ClaimReport& r) {
  std::ostringstream out;
  out << "claim,k,lhs,rhs,equal\n";
  for (const Comparison& c : r.comparisons) {
    out << claim_name(r.claim) << ',' << c.index << ',' << c.lhs << ',' << c.rhs << ','
        << (c.equal ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace nicom

#endif  // NICOM_REPORT_JSON_HPP
