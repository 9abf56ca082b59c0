#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sp4fix/catalog.hpp"
#include "sp4fix/closure.hpp"
#include "sp4fix/lattice.hpp"

namespace sp4fix {

/// User-supplied group file: integer generator matrices reduced mod ell^n on
/// load, with optional kernel augmentation.
struct GroupSpecFile {
  Modulus mod;  // n must be 2 for the counterexample decision
  std::vector<Mat4> generators;
  bool augment_gamma = false;
  bool augment_gamma_ker_f = false;
  size_t cap = 200'000;
};

GroupSpecFile parse_group_spec(const nlohmann::json& j);
GroupSpecFile parse_group_spec_text(const std::string& text);

/// Serialize a catalog entry in the GroupSpecFile schema (round-trips through
/// `check`).
nlohmann::ordered_json dump_group_spec(const NamedGroup& g);

struct GroupCheckReport {
  std::string text;
  nlohmann::ordered_json json;
};

/// Membership classes and coordinates of the generators, Fix status for
/// n = 1, 2, the stable-lattice diagram, and the counterexample verdict.
GroupCheckReport check_group(const GroupSpecFile& file);

}  // namespace sp4fix
