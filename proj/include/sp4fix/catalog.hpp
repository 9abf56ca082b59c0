#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sp4fix/closure.hpp"
#include "sp4fix/groupinfo.hpp"
#include "sp4fix/mat.hpp"

namespace sp4fix {

/// A constructed group with its declared expectations. The harness re-derives
/// every expectation (order by closure, fix status by scan, counterexample by
/// the decision procedure): nothing here is trusted.
struct NamedGroup {
  std::string id;
  std::string description;
  Modulus mod;                      // n = 2
  std::vector<Mat4> generators;     // symplectic mod ell^2
  std::vector<Mat4> kernel_seed;    // X matrices mod ell (kernel subgroup seed)
  uint64_t expected_image_order = 0;
  std::string expected_image_type;  // key into known_fingerprints(), "" = none
  bool expect_in_fix = true;
  bool expect_counterexample = true;

  CosetClosure close(size_t rep_cap = 200'000) const;
};

/// The four standard generators of the mod-ell Sylow subgroup, with the same
/// integer entries at any modulus (they are integrally symplectic).
std::array<Mat4, 4> sylow_generators(Modulus m);

/// The ell = 2 kernel-of-(alpha+gamma+f) subgroup of S_2 mod 4, with the
/// three classical generators and their pairwise products.
struct SerreElements {
  Mat4 g1, g2, g3;  // mod 4
  Mat4 A, B, C;     // g1 g2, g1 g3, g2 g3
};
SerreElements serre_elements();
NamedGroup serre_group();

/// Counterexamples inside S_2: mod-2 image one of the four D4 subgroups of
/// S2-bar (choice 0..3) or all of S2-bar ("full").
NamedGroup sylow2_counterexample(int d4_choice);
NamedGroup sylow2_full();
std::vector<GroupClosure> sylow2_d4_subgroups();  // the four, canonical order

/// Iwahori families for ell in {3,5}: group generated by a seed outside S,
/// the kernel-condition subgroup, and Gamma(ell). Default seeds are the
/// worked-example matrices with epsilon = 2.
NamedGroup iwahori_family_alpha0(int64_t ell,
                                 std::optional<Mat4> g_seed = std::nullopt);
NamedGroup iwahori_family_gamma0(int64_t ell,
                                 std::optional<Mat4> g_seed = std::nullopt);

/// Parabolic (irreducible middle block) counterexamples at ell = 2.
/// Case i: image isomorphic to S3 x C2; case ii: the f-twisted S3 with full
/// Gamma(2) kernel.
NamedGroup parabolic2_family(bool case_i);

/// Frozen fingerprints of the isomorphism types named by the classification;
/// each is re-derived from an independent permutation model in the tests.
const std::map<std::string, Fingerprint>& known_fingerprints();

/// Reverse lookup into known_fingerprints(); "" when the type is not listed.
std::string fingerprint_type_name(const Fingerprint& f);

std::vector<std::string> catalog_ids();
NamedGroup catalog_get(const std::string& id);

}  // namespace sp4fix
