#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace sp4fix {

/// Structured outcome of one verified claim.
struct VerdictReport {
  std::string claim_id;
  std::string status = "pass";  // pass | fail | skipped
  uint64_t scanned = 0;
  uint64_t violations = 0;
  std::string witness;  // serialized matrix / lattice pair; empty = none
  uint64_t seed = 0;
  int64_t elapsed_ms = 0;  // shown in text output; never serialized to JSON
};

struct SuiteReport {
  std::string suite;
  std::string note;  // documents exhaustion/falsification substitutions
  uint64_t seed = 0;
  std::vector<VerdictReport> claims;

  bool all_pass() const {
    for (const auto& c : claims)
      if (c.status == "fail") return false;
    return true;
  }
};

nlohmann::ordered_json suite_to_json(const SuiteReport& r);
nlohmann::ordered_json reports_to_json(const std::vector<SuiteReport>& rs);
std::string render_text(const SuiteReport& r);

}  // namespace sp4fix
