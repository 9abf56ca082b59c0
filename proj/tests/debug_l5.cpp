#include <cstdio>
#include "sp4fix/catalog.hpp"
#include "sp4fix/coords.hpp"
#include "sp4fix/groupinfo.hpp"
#include "sp4fix/lattice.hpp"
#include "sp4fix/sampling.hpp"
using namespace sp4fix;
int main() {
  for (int64_t ell : {3, 5}) {
    for (bool alpha : {true, false}) {
      NamedGroup g = alpha ? iwahori_family_alpha0(ell) : iwahori_family_gamma0(ell);
      CosetClosure C = g.close();
      GroupClosure img = C.mod_ell_image();
      Fingerprint fp = iso_fingerprint(img);
      bool fix = in_fix(C, 2).in_fix;
      CEVerdict v = is_counterexample(C);
      bool fpmatch = known_fingerprints().count(g.expected_image_type) &&
                     fp == known_fingerprints().at(g.expected_image_type);
      printf("%s: image=%zu (expect %llu) fpmatch=%d fix=%d verdict=%s\n",
             g.id.c_str(), img.size(),
             (unsigned long long)g.expected_image_order, (int)fpmatch, (int)fix,
             ce_status_name(v.status));
    }
  }
  // exhaustive S3-bar sweep at ell=3: subgroups x f-assignments, kerf kernel
  Modulus m1(3, 1), m2(3, 2);
  auto xs = sylow_generators(m1);
  GroupClosure S = closure({xs[0], xs[1], xs[2], xs[3]});
  auto subs = subgroup_enumerate(S);
  printf("S3-bar subgroups: %zu\n", subs.size());
  int fixcnt = 0, cecnt = 0;
  for (auto& H : subs) {
    size_t ng = H.generators.size();
    if (ng > 5) { printf("skip %zu gens\n", ng); continue; }
    uint64_t combos = 1;
    for (size_t i = 0; i < ng; ++i) combos *= 3;
    for (uint64_t fm = 0; fm < combos; ++fm) {
      std::vector<Mat4> gens;
      uint64_t code = fm;
      for (size_t i = 0; i < ng; ++i) {
        gens.push_back(with_f_value(sp_lift(H.generators[i], m2), code % 3));
        code /= 3;
      }
      CosetClosure C = coset_closure(gens, sp4_basis_ker_f(m1));
      if (C.mod_ell_image().size() != H.size()) continue;
      if (!in_fix(C, 2).in_fix) continue;
      ++fixcnt;
      if (is_counterexample(C).status == CEStatus::Counterexample) ++cecnt;
    }
  }
  printf("ell=3 sylow window: fix groups %d, counterexamples %d\n", fixcnt, cecnt);
  return 0;
}
