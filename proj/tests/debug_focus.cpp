// temporary: focused checks for the parabolic case-(i) f-assignments and the
// A4-image counterexample, cross-validated on fully materialized closures.
#include <cstdio>

#include "sp4fix/catalog.hpp"
#include "sp4fix/coords.hpp"
#include "sp4fix/groupinfo.hpp"
#include "sp4fix/lattice.hpp"
#include "sp4fix/sampling.hpp"

using namespace sp4fix;

int main() {
  Modulus m1(2, 1), m2(2, 2);
  Mat2 r(m1, {0, 1, 1, 1});
  Mat2 t(m1, {0, 1, 1, 0});
  Mat4 x4 = sylow_generators(m1)[3];

  printf("== block S3 x <x4>, all f-assignments (fr,ft,f4) ==\n");
  for (int fr = 0; fr < 2; ++fr)
    for (int ft = 0; ft < 2; ++ft)
      for (int f4 = 0; f4 < 2; ++f4) {
        std::vector<Mat4> gens = {with_f_value(sp_lift(embed_sl2(r), m2), fr),
                                  with_f_value(sp_lift(embed_sl2(t), m2), ft),
                                  with_f_value(sp_lift(x4, m2), f4)};
        CosetClosure C = coset_closure(gens, sp4_basis_ker_f(m1));
        bool fix = in_fix(C, 2).in_fix;
        const char* verdict = "-";
        if (fix) verdict = ce_status_name(is_counterexample(C).status);
        printf("  f(r)=%d f(t)=%d f(x4)=%d kerdim=%d order=%s fix=%d %s\n", fr,
               ft, f4, C.kernel.dim(), C.order_str().c_str(), (int)fix, verdict);
      }

  printf("== A4-image full preimage, cross-checked both paths ==\n");
  // generators from the sweep: embed(r') with gamma=1 twist... rebuild:
  // gen1: mid=[1,1;1,0], alpha=beta=delta=0  -> embed(mid)
  // gen2: mid=[1,1;1,0], alpha=1, gamma=1(auto), delta=1
  Mat2 rp(m1, {1, 1, 1, 0});
  Mat4 g1 = embed_sl2(rp);
  Mat4 g2 = mat_pbar(m1, rp, 1, 0, 1);
  GroupClosure img = closure({g1, g2});
  printf("image order %zu fp=%s\n", img.size(), iso_fingerprint(img).str().c_str());
  std::vector<Mat2> mids;
  for (const Mat4& g : img.elements) mids.push_back(pi_project(g));
  printf("pi irreducible: %d, pi image size: ", (int)sl2_irreducible(mids));
  GroupClosure pimg = closure({embed_sl2(pi_project(g1)), embed_sl2(pi_project(g2))});
  printf("%zu\n", pimg.size());
  // coset path
  std::vector<Mat4> lifts = {sp_lift(g1, m2), sp_lift(g2, m2)};
  CosetClosure C = coset_closure(lifts, sp4_basis(m1));
  printf("coset: reps=%zu kernel=%d fix=%d\n", C.reps.size(), C.kernel.dim(),
         (int)in_fix(C, 2).in_fix);
  CEVerdict v = is_counterexample(C);
  printf("coset verdict: %s\n", ce_status_name(v.status));
  // materialized path
  std::vector<Mat4> allgens = lifts;
  for (const Mat4& k : gamma_generators(m2)) allgens.push_back(k);
  GroupClosure G = closure(allgens);
  printf("materialized order %zu fix=%d\n", G.size(), (int)in_fix(G, 2).in_fix);
  CEVerdict v2 = is_counterexample(G);
  printf("materialized verdict: %s\n", ce_status_name(v2.status));
  // independent fix check: raw determinant scan, no lattice machinery
  Mat4 id = Mat4::identity(m2);
  size_t bad = 0;
  for (const Mat4& g : G.elements)
    if (mat_det(g - id).v % 4 != 0) ++bad;
  printf("raw det scan: %zu violations out of %zu\n", bad, G.size());
  return 0;
}
