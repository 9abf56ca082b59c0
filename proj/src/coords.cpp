#include "sp4fix/coords.hpp"

#include "sp4fix/prng.hpp"

namespace sp4fix {

const char* membership_name(MembershipClass c) {
  switch (c) {
    case MembershipClass::S: return "S";
    case MembershipClass::B: return "B";
    case MembershipClass::P: return "P";
    default: return "none";
  }
}

namespace {

int64_t ebar(const Mat4& g, int i, int j) { return g.at(i, j) % g.mod.ell; }

bool p_shaped(const Mat4& g) {
  // row 1 = (1,0,0,0) and column 4 = (0,0,0,1) mod ell
  return ebar(g, 0, 0) == 1 && ebar(g, 0, 1) == 0 && ebar(g, 0, 2) == 0 &&
         ebar(g, 0, 3) == 0 && ebar(g, 1, 3) == 0 && ebar(g, 2, 3) == 0 &&
         ebar(g, 3, 3) == 1;
}

Residue bar(const Mat4& g, int i, int j) {
  return Residue(g.at(i, j), Modulus(g.mod.ell, 1));
}

}  // namespace

MembershipClass membership_class(const Mat4& g) {
  if (!p_shaped(g)) return MembershipClass::None;
  if (ebar(g, 1, 2) != 0) return MembershipClass::P;
  if (ebar(g, 1, 1) == 1 && ebar(g, 2, 2) == 1) return MembershipClass::S;
  return MembershipClass::B;
}

Residue coord_alpha(const Mat4& g) { return bar(g, 1, 0); }
Residue coord_beta(const Mat4& g) { return bar(g, 2, 0); }
Residue coord_gamma(const Mat4& g) { return bar(g, 2, 1); }
Residue coord_delta(const Mat4& g) { return bar(g, 3, 0); }
Residue coord_epsilon(const Mat4& g) { return bar(g, 1, 1); }
Residue coord_alpha_prime(const Mat4& g) { return bar(g, 3, 2); }
Residue coord_beta_prime(const Mat4& g) { return bar(g, 3, 1); }

Residue coord_f(const Mat4& g) {
  if (g.mod.n != 2) throw bad_modulus("f needs a mod-ell^2 matrix");
  if (!p_shaped(g)) throw not_parabolic("f is only defined on P-shaped matrices");
  return Residue(g.at(0, 3) / g.mod.ell, Modulus(g.mod.ell, 1));
}

CoordProfile coords(const Mat4& g) {
  if (g.mod.n != 2) throw bad_modulus("coords needs a mod-ell^2 matrix");
  CoordProfile p;
  p.cls = membership_class(g);
  if (p.cls == MembershipClass::None)
    throw not_parabolic("coords: matrix is not P-shaped mod ell");
  p.alpha = coord_alpha(g);
  p.beta = coord_beta(g);
  p.gamma = coord_gamma(g);
  p.delta = coord_delta(g);
  p.epsilon = coord_epsilon(g);
  p.alpha_prime = coord_alpha_prime(g);
  p.beta_prime = coord_beta_prime(g);
  p.f = coord_f(g);
  return p;
}

Residue det_formula_iwahori(const CoordProfile& p, Modulus mod_ell2) {
  if (mod_ell2.n != 2 || mod_ell2.ell != p.alpha.mod.ell)
    throw bad_modulus("det_formula_iwahori: modulus mismatch");
  if (!p.epsilon.is_unit())
    throw non_unit("det_formula_iwahori needs unit epsilon");
  Residue one(1, p.alpha.mod);
  Residue einv = inv(p.epsilon);
  Residue c = p.gamma * p.alpha * p.alpha +
              p.beta * p.alpha * (one - p.epsilon * p.epsilon) * einv +
              p.delta * (one - p.epsilon) * (one - p.epsilon) * einv;
  int64_t scaled = (c * p.f).v % mod_ell2.ell;
  return Residue(scaled * mod_ell2.ell, mod_ell2);
}

Mat2 pi_project(const Mat4& g) {
  if (membership_class(g) == MembershipClass::None)
    throw not_parabolic("pi_project: matrix is not P-shaped mod ell");
  Modulus m1(g.mod.ell, 1);
  return Mat2(m1, {g.at(1, 1) % g.mod.ell, g.at(1, 2) % g.mod.ell,
                   g.at(2, 1) % g.mod.ell, g.at(2, 2) % g.mod.ell});
}

Mat4 embed_sl2(const Mat2& m) {
  Mat4 g = Mat4::identity(m.mod);
  g.set(1, 1, m.at(0, 0));
  g.set(1, 2, m.at(0, 1));
  g.set(2, 1, m.at(1, 0));
  g.set(2, 2, m.at(1, 1));
  return g;
}

bool is_unipotent(const Mat2& u) {
  Mat2 d = u;
  d.a[0] = (d.a[0] - 1 + u.mod.q) % u.mod.q;
  d.a[3] = (d.a[3] - 1 + u.mod.q) % u.mod.q;
  Mat2 sq = d * d;
  return sq.a[0] == 0 && sq.a[1] == 0 && sq.a[2] == 0 && sq.a[3] == 0;
}

uint64_t mat2_order(const Mat2& m) {
  Mat2 id = Mat2::identity(m.mod);
  Mat2 x = m;
  uint64_t k = 1;
  while (!(x == id)) {
    x = x * m;
    ++k;
    if (k > 1'000'000) throw too_large("mat2_order runaway");
  }
  return k;
}

bool sl2_irreducible(const std::vector<Mat2>& gens) {
  if (gens.empty()) return false;
  const int64_t ell = gens[0].mod.ell;
  // the ell+1 lines of F_ell^2: <(1,t)> and <(0,1)>
  std::vector<std::array<int64_t, 2>> lines;
  for (int64_t t = 0; t < ell; ++t) lines.push_back({1, t});
  lines.push_back({0, 1});
  for (auto& v : lines) {
    bool fixed_by_all = true;
    for (const Mat2& g : gens) {
      int64_t w0 = (g.at(0, 0) * v[0] + g.at(0, 1) * v[1]) % ell;
      int64_t w1 = (g.at(1, 0) * v[0] + g.at(1, 1) * v[1]) % ell;
      // w on the line <v>  <=>  det(w|v) = 0
      if (((w0 * v[1] - w1 * v[0]) % ell + ell) % ell != 0) {
        fixed_by_all = false;
        break;
      }
    }
    if (fixed_by_all) return false;
  }
  return true;
}

bool f_is_homomorphism_check(const GroupClosure& G, uint64_t seed) {
  if (G.truncated) throw truncated_closure("f check on truncated closure");
  auto fval = [&](const Mat4& g) { return coord_f(g); };
  if (G.size() <= kDefaultClosureCap && G.size() * G.size() <= 100'000'000ull &&
      G.size() <= 10'000) {
    for (const Mat4& a : G.elements)
      for (const Mat4& b : G.elements)
        if (fval(a * b) != fval(a) + fval(b)) return false;
    return true;
  }
  SplitMix64 rng(seed);
  for (int i = 0; i < 100'000; ++i) {
    const Mat4& a = G.elements[rng.below(G.size())];
    const Mat4& b = G.elements[rng.below(G.size())];
    if (fval(a * b) != fval(a) + fval(b)) return false;
  }
  return true;
}

}  // namespace sp4fix
