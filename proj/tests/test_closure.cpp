#include <set>

#include "doctest.h"
#include "sp4fix/catalog.hpp"
#include "sp4fix/closure.hpp"
#include "sp4fix/coords.hpp"
#include "sp4fix/sampling.hpp"

using namespace sp4fix;

TEST_CASE("trivial closures") {
  Modulus m(3, 1);
  GroupClosure id_only = closure({Mat4::identity(m)});
  CHECK(id_only.size() == 1);
  CHECK_THROWS_AS(closure({Mat4::from_rows(
                      m, {{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}})}),
                  non_symplectic_generator);
}

TEST_CASE("sylow subgroup has order ell^4 for ell in {2,3,5}") {
  for (int64_t ell : {2, 3, 5}) {
    Modulus m(ell, 1);
    auto xs = sylow_generators(m);
    GroupClosure S = closure({xs[0], xs[1], xs[2], xs[3]});
    CHECK(S.size() == static_cast<size_t>(ell * ell * ell * ell));
    // the S-bar parametrization covers the closure exactly
    std::set<Enc128> param;
    for (int64_t a = 0; a < ell; ++a)
      for (int64_t b = 0; b < ell; ++b)
        for (int64_t c = 0; c < ell; ++c)
          for (int64_t d = 0; d < ell; ++d) {
            Mat4 s = mat_sbar(m, a, b, c, d);
            CHECK(is_sp(s));
            param.insert(s.encode());
          }
    CHECK(param.size() == S.size());
    for (const Mat4& g : S.elements) CHECK(param.count(g.encode()) == 1);
  }
}

TEST_CASE("B-bar and P-bar parametrizations are symplectic with correct counts") {
  for (int64_t ell : {2, 3}) {
    Modulus m(ell, 1);
    std::set<Enc128> bset;
    for (int64_t a = 0; a < ell; ++a)
      for (int64_t b = 0; b < ell; ++b)
        for (int64_t c = 0; c < ell; ++c)
          for (int64_t d = 0; d < ell; ++d)
            for (int64_t e = 1; e < ell; ++e) {
              Mat4 g = mat_bbar(m, a, b, c, d, e);
              CHECK(is_sp(g));
              bset.insert(g.encode());
            }
    CHECK(bset.size() == static_cast<size_t>(ell * ell * ell * ell * (ell - 1)));
  }
  // |P-bar| = ell^4 (ell^2 - 1): count via closure for ell = 2
  Modulus m2(2, 1);
  auto xs = sylow_generators(m2);
  Mat2 r(m2, {0, 1, 1, 1}), t(m2, {0, 1, 1, 0});
  GroupClosure P = closure({xs[0], xs[2], xs[3], embed_sl2(r), embed_sl2(t)});
  CHECK(P.size() == 48);
}

TEST_CASE("gamma generators and closure order ell^10 at ell = 2") {
  Modulus m2(2, 2);
  auto gens = gamma_generators(m2);
  CHECK(gens.size() == 10);
  for (const Mat4& g : gens) {
    CHECK(is_sp(g));
    CHECK(reduce_mod(g, 2).is_identity());
  }
  GroupClosure G = closure(gens);
  CHECK(G.size() == 1024);
  auto kerf = gamma_ker_f_generators(m2);
  CHECK(kerf.size() == 9);
  GroupClosure K = closure(kerf);
  CHECK(K.size() == 512);
  for (const Mat4& g : K.elements) CHECK(coord_f(g).v == 0);
}

TEST_CASE("closure cap truncates deterministically") {
  Modulus m2(2, 2);
  GroupClosure G = closure(gamma_generators(m2), 100);
  CHECK(G.truncated);
  CHECK(G.size() >= 100);
}

TEST_CASE("coset closure matches materialized closure on gamma(2)") {
  Modulus m2(2, 2);
  CosetClosure C = coset_closure({}, sp4_basis(Modulus(2, 1)));
  CHECK(C.reps.size() == 1);
  CHECK(C.kernel.dim() == 10);
  CHECK(C.order() == 1024);
}

TEST_CASE("coset closure discovers the kernel by collisions") {
  // a single generator of order 4 mod 4 whose square is in Gamma(2)
  Modulus m2(2, 2);
  Mat4 x1 = sylow_generators(m2)[0];
  CosetClosure C = coset_closure({x1}, {});
  // mod-2 image has order 2; x1^2 = 1 + 2X forces one kernel direction
  CHECK(C.reps.size() == 2);
  CHECK(C.kernel.dim() >= 1);
  uint64_t expect = 2;
  for (int i = 0; i < C.kernel.dim(); ++i) expect *= 2;
  CHECK(C.order() == expect);
  GroupClosure full = closure({x1});
  CHECK(full.size() == C.order());
}

TEST_CASE("coset closure equals full closure on serre-sized groups") {
  NamedGroup serre = serre_group();
  CosetClosure C = serre.close();
  CHECK(!C.truncated);
  CHECK(C.reps.size() == 16);
  CHECK(C.kernel.dim() == 9);
  CHECK(C.order() == 8192);
  // spot check: all reps are genuine group elements (symplectic, coset-distinct)
  std::set<Enc128> images;
  for (const Mat4& r : C.reps) {
    CHECK(is_sp(r));
    images.insert(reduce_mod(r, 2).encode());
  }
  CHECK(images.size() == 16);
}

TEST_CASE("closure(reduce) = reduce(closure) exhaustively at ell=2, n=2 to 1") {
  Modulus m2(2, 2);
  auto xs1 = sylow_generators(Modulus(2, 1));
  std::vector<Mat4> lifted;
  Sampler smp(m2, 99);
  for (const Mat4& x : {xs1[0], xs1[1], xs1[3]}) lifted.push_back(smp.lift(x));
  GroupClosure G2 = closure(lifted);
  std::set<Enc128> reduced_closure;
  for (const Mat4& g : G2.elements) reduced_closure.insert(reduce_mod(g, 2).encode());
  std::vector<Mat4> rgens;
  for (const Mat4& g : lifted) rgens.push_back(reduce_mod(g, 2));
  GroupClosure G1 = closure(rgens);
  CHECK(G1.size() == reduced_closure.size());
  for (const Mat4& g : G1.elements) CHECK(reduced_closure.count(g.encode()) == 1);
}
