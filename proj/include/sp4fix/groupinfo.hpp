#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sp4fix/closure.hpp"

namespace sp4fix {

inline constexpr size_t kGroupInfoCap = 10'000;

/// Isomorphism-type invariants. Separates every isomorphism type this
/// project needs to distinguish (see catalog::known_fingerprints and the
/// oracle test that re-derives each entry from a permutation model).
struct Fingerprint {
  uint64_t order = 1;
  std::vector<std::pair<uint64_t, uint64_t>> order_histogram;  // (order, count)
  uint64_t center_order = 1;
  std::vector<uint64_t> abelian_invariants;  // invariant factors, largest first
  uint64_t derived_order = 1;

  uint64_t exponent() const;
  bool operator==(const Fingerprint& o) const {
    return order == o.order && order_histogram == o.order_histogram &&
           center_order == o.center_order &&
           abelian_invariants == o.abelian_invariants &&
           derived_order == o.derived_order;
  }
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }
  std::string str() const;
};

uint64_t element_order(const Mat4& g);

std::vector<Mat4> center_elements(const GroupClosure& G);

GroupClosure derived_subgroup(const GroupClosure& G);

/// Invariant factors (largest first) of a finite abelian group given the
/// counts N(m) = #{x : x^m = 1} for m dividing the exponent.
std::vector<uint64_t> abelian_invariants_from_counts(
    uint64_t order, const std::map<uint64_t, uint64_t>& order_histogram);

Fingerprint iso_fingerprint(const GroupClosure& G);

/// All subgroups (or those of the given order), each as a closed element set;
/// deterministic order. Requires |G| <= 10^4.
std::vector<GroupClosure> subgroup_enumerate(
    const GroupClosure& G, std::optional<uint64_t> order_filter = std::nullopt);

bool is_normal_in(const GroupClosure& G, const GroupClosure& H);

}  // namespace sp4fix
