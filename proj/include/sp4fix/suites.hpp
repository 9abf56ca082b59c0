#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sp4fix/report.hpp"

namespace sp4fix {

struct SuiteOptions {
  uint64_t seed = 42;
  uint64_t samples = 10'000;        // per falsification family
  std::optional<int64_t> ell;       // restrict per-ell claims
};

SuiteReport suite_foundations(const SuiteOptions& opts);
SuiteReport suite_sylow(const SuiteOptions& opts);
SuiteReport suite_jeff_lemma(const SuiteOptions& opts);
SuiteReport suite_serre(const SuiteOptions& opts);
SuiteReport suite_iwahori(const SuiteOptions& opts);
SuiteReport suite_parabolic(const SuiteOptions& opts);

std::vector<std::string> suite_names();  // CLI order
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names,
                                    const SuiteOptions& opts);

}  // namespace sp4fix
