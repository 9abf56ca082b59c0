#include "sp4fix/report.hpp"

#include <sstream>

namespace sp4fix {

nlohmann::ordered_json suite_to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["note"] = r.note;
  j["seed"] = r.seed;
  j["all_pass"] = r.all_pass();
  auto claims = nlohmann::ordered_json::array();
  for (const auto& c : r.claims) {
    nlohmann::ordered_json cj;
    cj["claim"] = c.claim_id;
    cj["status"] = c.status;
    cj["scanned"] = c.scanned;
    cj["violations"] = c.violations;
    if (!c.witness.empty()) cj["witness"] = c.witness;
    claims.push_back(cj);
  }
  j["claims"] = claims;
  return j;
}

nlohmann::ordered_json reports_to_json(const std::vector<SuiteReport>& rs) {
  nlohmann::ordered_json j;
  j["tool"] = "sp4fix";
  bool all = true;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) {
    all = all && r.all_pass();
    arr.push_back(suite_to_json(r));
  }
  j["all_pass"] = all;
  j["suites"] = arr;
  return j;
}

std::string render_text(const SuiteReport& r) {
  std::ostringstream os;
  os << "== suite " << r.suite << " (seed " << r.seed << ") ==\n";
  if (!r.note.empty()) os << r.note << "\n";
  for (const auto& c : r.claims) {
    os << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP")
       << "  " << c.claim_id << "  scanned=" << c.scanned;
    if (c.violations) os << " violations=" << c.violations;
    if (c.elapsed_ms >= 0) os << " (" << c.elapsed_ms << " ms)";
    os << "\n";
    if (!c.witness.empty()) os << "      witness: " << c.witness << "\n";
  }
  os << (r.all_pass() ? "suite result: PASS" : "suite result: FAIL") << "\n";
  return os.str();
}

}  // namespace sp4fix
