#include <set>

#include "doctest.h"
#include "sp4fix/catalog.hpp"
#include "sp4fix/coords.hpp"
#include "sp4fix/lattice.hpp"
#include "sp4fix/sampling.hpp"

using namespace sp4fix;

namespace {

SubspaceFl span_of(int64_t ell, std::vector<std::vector<int64_t>> vecs) {
  SubspaceFl V(ell, 4);
  for (auto& v : vecs) V.add(v);
  return V;
}

// L_i = <ell e_1 .. ell e_i, e_{i+1} .. e_4>; its mod-ell subspace is
// spanned by the last 4-i basis vectors.
SubspaceFl Lbar(int64_t ell, int i) {
  SubspaceFl V(ell, 4);
  for (int k = i; k < 4; ++k) {
    std::vector<int64_t> v(4, 0);
    v[k] = 1;
    V.add(v);
  }
  return V;
}

}  // namespace

TEST_CASE("smith valuations and fixes_submodule basics") {
  Modulus m4(2, 2);
  SerreElements e = serre_elements();
  CHECK(fixes_submodule(e.g3, 2));  // det(g3 - 1) = 0
  Mat4 g = Mat4::identity(m4);
  g.set(1, 0, 2);  // 1 + ell E21
  CHECK(fixes_submodule(g, 2));
  // an element with unit det(g-1) mod ell fixes nothing at n=1
  Modulus m3(3, 1);
  Mat4 w = symp_J(m3);
  REQUIRE(mat_det(w - Mat4::identity(m3)).is_unit());
  CHECK(!fixes_submodule(w, 1));
}

TEST_CASE("SNF criterion equals the determinant condition") {
  for (int64_t ell : {2, 3}) {
    Modulus m2(ell, 2);
    Sampler smp(m2, 31);
    Mat4 id = Mat4::identity(m2);
    for (int i = 0; i < 20'000; ++i) {
      Mat4 g = smp.sp_mod_ell2();
      REQUIRE(is_sp(g));
      for (int n = 1; n <= 2; ++n) {
        int64_t elln = n == 1 ? ell : ell * ell;
        CHECK(fixes_submodule(g, n) == (mat_det(g - id).v % elln == 0));
      }
    }
  }
}

TEST_CASE("lattice canonical forms") {
  Modulus m4(2, 2);
  LatticeRep T = LatticeRep::full_T(m4);
  LatticeRep ellT = LatticeRep::ell_T(m4);
  CHECK(T.index_in_T() == 1);
  CHECK(ellT.index_in_T() == 16);
  CHECK(T.contains_lattice(ellT));
  CHECK(!ellT.contains_lattice(T));
  CHECK(ellT.contains_ell_T());
  CHECK(ellT == T.scaled_by_ell());
  // canonical form independent of generator order
  LatticeRep a = LatticeRep::from_generators(
      m4, {{1, 2, 0, 3}, {0, 2, 1, 0}, {2, 0, 0, 0}, {0, 0, 0, 2}});
  LatticeRep b = LatticeRep::from_generators(
      m4, {{0, 0, 0, 2}, {2, 0, 0, 0}, {1, 2, 0, 3}, {0, 2, 1, 0}});
  CHECK(a == b);
  LatticeRep c = LatticeRep::from_generators(
      m4, {{1, 2, 0, 3}, {1, 0, 1, 3}, {2, 0, 0, 0}, {0, 0, 0, 2}});
  CHECK(a == c);  // second generator = first + (0,2,1,0)
}

TEST_CASE("howell membership counts match index profile") {
  Modulus m9(3, 2);
  // L = <e2, e3, e4, 3 e1>: index 3, divisors (1,1,1,3)
  LatticeRep L1 = LatticeRep::from_subspace(m9, Lbar(3, 1));
  CHECK(L1.index_in_T() == 3);
  CHECK(L1.size() == 2187);  // 3^8 / 3
  LatticeRep L3 = LatticeRep::from_subspace(m9, Lbar(3, 3));
  CHECK(L3.index_in_T() == 27);
  CHECK(L1.contains_lattice(L3));
}

TEST_CASE("invariant subspace counts: trivial group sees all subspaces") {
  GroupClosure triv2 = closure({Mat4::identity(Modulus(2, 1))});
  CHECK(invariant_subspaces_mod_ell(triv2).size() == 67);
  GroupClosure triv3 = closure({Mat4::identity(Modulus(3, 1))});
  CHECK(invariant_subspaces_mod_ell(triv3).size() == 212);
}

TEST_CASE("invariant subspaces of an alpha-gamma-nontrivial S-group form the chain") {
  for (int64_t ell : {2, 3, 5}) {
    auto xs = sylow_generators(Modulus(ell, 1));
    GroupClosure S = closure({xs[0], xs[1], xs[2], xs[3]});
    auto spaces = invariant_subspaces_mod_ell(S);
    REQUIRE(spaces.size() == 5);
    std::vector<SubspaceFl> expect{Lbar(ell, 4), Lbar(ell, 3), Lbar(ell, 2),
                                   Lbar(ell, 1), Lbar(ell, 0)};
    for (const auto& E : expect) {
      bool found = false;
      for (const auto& V : spaces) found |= V == E;
      CHECK(found);
    }
  }
}

TEST_CASE("trivial quotient action detects f via L3 / ell L1") {
  Modulus m4(2, 2);
  LatticeRep L1 = LatticeRep::from_subspace(m4, Lbar(2, 1));
  LatticeRep L3 = LatticeRep::from_subspace(m4, Lbar(2, 3));
  // Gamma(2) with f = 0 acts trivially; a generator with f = 1 does not
  CHECK(trivial_quotient_action(gamma_ker_f_generators(m4), L3, L1.scaled_by_ell()));
  CHECK(!trivial_quotient_action(gamma_generators(m4), L3, L1.scaled_by_ell()));
  // the pair errors: not nested / wrong index
  CHECK_THROWS_AS(trivial_quotient_action(gamma_generators(m4), L3, L1),
                  bad_lattice_pair);
  LatticeRep T = LatticeRep::full_T(m4);
  CHECK_THROWS_AS(trivial_quotient_action(gamma_generators(m4), T, L3),
                  bad_lattice_pair);
}

TEST_CASE("gamma and alpha biconditionals on S-subgroups") {
  Modulus m4(2, 2);
  Modulus m1(2, 1);
  Sampler smp(m4, 3);
  LatticeRep T = LatticeRep::full_T(m4);
  LatticeRep L1 = LatticeRep::from_subspace(m4, Lbar(2, 1));
  LatticeRep L2 = LatticeRep::from_subspace(m4, Lbar(2, 2));
  LatticeRep L3 = LatticeRep::from_subspace(m4, Lbar(2, 3));
  struct Case {
    std::vector<Mat4> gens;
    bool gamma_trivial;
    bool alpha_trivial;
  };
  std::vector<Case> cases;
  cases.push_back({{smp.lift(mat_sbar(m1, 0, 1, 0, 1))}, true, true});
  cases.push_back({{smp.lift(mat_sbar(m1, 0, 0, 1, 0))}, false, true});
  cases.push_back({{smp.lift(mat_sbar(m1, 1, 0, 0, 0))}, true, false});
  cases.push_back({{smp.lift(mat_sbar(m1, 1, 1, 1, 0))}, false, false});
  for (const auto& c : cases) {
    CHECK(trivial_quotient_action(c.gens, L1, L3) == c.gamma_trivial);
    CHECK(trivial_quotient_action(c.gens, T, L2) == c.alpha_trivial);
    CHECK(trivial_quotient_action(c.gens, L2, T.scaled_by_ell()) == c.alpha_trivial);
  }
}

TEST_CASE("L1 and L3 are stable for every P-shaped sample") {
  for (int64_t ell : {2, 3, 5}) {
    Modulus m2(ell, 2);
    Sampler smp(m2, 8);
    LatticeRep L1 = LatticeRep::from_subspace(m2, Lbar(ell, 1));
    LatticeRep L3 = LatticeRep::from_subspace(m2, Lbar(ell, 3));
    for (int i = 0; i < 500; ++i) {
      Mat4 g = smp.lift(smp.pbar());
      for (const LatticeRep* L : {&L1, &L3}) {
        for (const auto& row : L->rows) {
          Vec4 v(m2, {row[0], row[1], row[2], row[3]});
          Vec4 gv = g * v;
          CHECK(L->contains_vector({gv.a[0], gv.a[1], gv.a[2], gv.a[3]}));
        }
      }
    }
  }
}

TEST_CASE("in_fix scans with deterministic witnesses") {
  Modulus m4(2, 2);
  // the full preimage of S2-bar mod 4 is NOT in Fix(4)
  auto xs1 = sylow_generators(Modulus(2, 1));
  std::vector<Mat4> gens;
  Sampler smp(m4, 5);
  for (const Mat4& x : xs1) gens.push_back(sp_lift(x, m4));
  for (const Mat4& k : gamma_generators(m4)) gens.push_back(k);
  GroupClosure G = closure(gens);
  CHECK(G.size() == 16384);
  FixVerdict v = in_fix(G, 2);
  CHECK(!v.in_fix);
  REQUIRE(v.witness.has_value());
  Mat4 w = *v.witness;
  CHECK(mat_det(w - Mat4::identity(m4)).v % 4 != 0);
  // witness profile: alpha = gamma = f = 1 forced by the determinant formula
  CHECK(coord_alpha(w).v * coord_gamma(w).v * coord_f(w).v == 1);
  // but it is in Fix(2)
  CHECK(in_fix(G, 1).in_fix);
  // trivial group is in Fix for every n
  GroupClosure T = closure({Mat4::identity(m4)});
  CHECK(in_fix(T, 2).in_fix);

  // coset path agrees with the full scan
  std::vector<Mat4> fgens;
  for (const Mat4& x : xs1) fgens.push_back(sp_lift(x, m4));
  CosetClosure C = coset_closure(fgens, sp4_basis(Modulus(2, 1)));
  FixVerdict cv = in_fix(C, 2);
  CHECK(!cv.in_fix);
  REQUIRE(cv.witness.has_value());
  CHECK(mat_det(*cv.witness - Mat4::identity(m4)).v % 4 != 0);
  CHECK(in_fix(C, 1).in_fix);
}

TEST_CASE("coset in_fix equals exhaustive in_fix on random small groups") {
  Modulus m9(3, 2);
  Sampler smp(m9, 123);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Mat4> gens{smp.lift(smp.sbar())};
    if (trial % 2) gens.push_back(smp.gamma_element());
    CosetClosure C = coset_closure(gens, {});
    if (C.order() > 50'000) continue;
    // materialize the same group
    GroupClosure G = closure(gens);
    REQUIRE(G.size() == C.order());
    for (int n = 1; n <= 2; ++n)
      CHECK(in_fix(G, n).in_fix == in_fix(C, n).in_fix);
  }
}

TEST_CASE("orbit lemma exhaustively at ell = 2") {
  Modulus m4(2, 2);
  OrbitCheckResult plain = orbit_check(m4, false, 0, 0);
  CHECK(plain.pass);
  CHECK(plain.scanned == 240);
  OrbitCheckResult kerf = orbit_check(m4, true, 0, 0);
  CHECK(kerf.pass);
}

TEST_CASE("orbit lemma sampled at ell = 3") {
  Modulus m9(3, 2);
  OrbitCheckResult r = orbit_check(m9, true, 200, 7);
  CHECK(r.pass);
  CHECK(r.scanned == 200);
  CHECK(orbit_check(m9, false, 200, 7).pass);
}

TEST_CASE("orbit sizes match the lemma") {
  Modulus m4(2, 2);
  auto kgens = gamma_ker_f_generators(m4);
  auto orbit_size = [&](Vec4 v) {
    std::set<uint32_t> seen;
    auto enc = [&](const Vec4& u) {
      return static_cast<uint32_t>(((u.a[0] * 4 + u.a[1]) * 4 + u.a[2]) * 4 + u.a[3]);
    };
    std::vector<Vec4> frontier{v};
    seen.insert(enc(v));
    while (!frontier.empty()) {
      std::vector<Vec4> next;
      for (auto& x : frontier)
        for (auto& g : kgens) {
          Vec4 y = g * x;
          if (seen.insert(enc(y)).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    return seen.size();
  };
  CHECK(orbit_size(Vec4::basis(m4, 3)) == 8);   // e4: v + ell W
  CHECK(orbit_size(Vec4::basis(m4, 0)) == 16);  // e1: v + ell T
}

TEST_CASE("is_counterexample on degenerate inputs") {
  Modulus m4(2, 2);
  // trivial group: not a counterexample, witnessed by a trivial pair
  GroupClosure T = closure({Mat4::identity(m4)});
  CEVerdict v = is_counterexample(T);
  CHECK(v.status == CEStatus::NotCounterexample);
  REQUIRE(v.pair.has_value());
  // the witness pair is re-checkable
  LatticeRep L = LatticeRep::from_subspace(m4, v.pair->V);
  LatticeRep Lp = LatticeRep::from_subspace(m4, v.pair->Vp);
  bool t = v.pair->quotient == 0
               ? trivial_quotient_action(T.generators, L, Lp)
               : trivial_quotient_action(T.generators, Lp, L.scaled_by_ell());
  CHECK(t);

  // Gamma(ell) itself: f nontrivial, but the mod-ell image is trivial, so
  // first-kind quotients are fixed pointwise: not a counterexample
  CosetClosure gam = coset_closure({}, sp4_basis(Modulus(2, 1)));
  CEVerdict vg = is_counterexample(gam);
  CHECK(vg.status == CEStatus::NotCounterexample);

  // Gamma(ell) ∩ ker f: f trivial: not a counterexample either, and the
  // L3 / ell L1 pair in particular is trivial
  CosetClosure gkf = coset_closure({}, sp4_basis_ker_f(Modulus(2, 1)));
  CEVerdict vk = is_counterexample(gkf);
  CHECK(vk.status == CEStatus::NotCounterexample);
}
