#include "sp4fix/sampling.hpp"

#include "sp4fix/coords.hpp"

namespace sp4fix {

Mat4 mat_sbar(Modulus m1, int64_t a, int64_t b, int64_t c, int64_t d) {
  // rows: (1,0,0,0 / a,1,0,0 / b,c,1,0 / d, b-ac, -a, 1)
  return Mat4::from_rows(m1, {{{1, 0, 0, 0},
                               {a, 1, 0, 0},
                               {b, c, 1, 0},
                               {d, b - a * c, -a, 1}}});
}

Mat4 mat_bbar(Modulus m1, int64_t a, int64_t b, int64_t c, int64_t d, int64_t e) {
  if (e % m1.ell == 0) throw non_unit("mat_bbar: epsilon must be a unit");
  int64_t ei = inv(Residue(e, m1)).v;
  return Mat4::from_rows(m1, {{{1, 0, 0, 0},
                               {a, e, 0, 0},
                               {b, c, ei, 0},
                               {d, b * e - a * c, -a * ei, 1}}});
}

Mat4 mat_pbar(Modulus m1, const Mat2& mid, int64_t a, int64_t b, int64_t d) {
  if (mid.det().v != 1 % m1.q)
    throw non_symplectic_generator("mat_pbar: middle block must be in SL2");
  int64_t bp = b * mid.at(0, 0) - a * mid.at(1, 0);
  int64_t ap = b * mid.at(0, 1) - a * mid.at(1, 1);
  return Mat4::from_rows(m1, {{{1, 0, 0, 0},
                               {a, mid.at(0, 0), mid.at(0, 1), 0},
                               {b, mid.at(1, 0), mid.at(1, 1), 0},
                               {d, bp, ap, 1}}});
}

Mat4 with_f_value(const Mat4& g, int64_t target) {
  Residue f = coord_f(g);
  int64_t ell = g.mod.ell;
  int64_t k = ((target - f.v) % ell + ell) % ell;
  Mat4 twist = Mat4::identity(g.mod);
  twist.set(0, 3, ell * k);
  return g * twist;
}

Sampler::Sampler(Modulus mod_ell2, uint64_t seed)
    : mod2(mod_ell2), mod1(mod_ell2.ell, 1), rng(seed) {
  if (mod2.n != 2) throw bad_modulus("Sampler expects a mod-ell^2 modulus");
  sp4 = sp4_basis(mod1);
}

int64_t Sampler::unit() { return 1 + below(mod1.ell - 1); }

Mat4 Sampler::sbar() {
  return mat_sbar(mod1, below(mod1.ell), below(mod1.ell), below(mod1.ell),
                  below(mod1.ell));
}

Mat4 Sampler::bbar() {
  return mat_bbar(mod1, below(mod1.ell), below(mod1.ell), below(mod1.ell),
                  below(mod1.ell), unit());
}

Mat4 Sampler::pbar() {
  return mat_pbar(mod1, sl2(), below(mod1.ell), below(mod1.ell), below(mod1.ell));
}

Mat2 Sampler::sl2() {
  for (;;) {
    Mat2 m(mod1, {below(mod1.ell), below(mod1.ell), below(mod1.ell),
                  below(mod1.ell)});
    if (m.det().v == 1 % mod1.ell) return m;
  }
}

Mat4 Sampler::lift(const Mat4& gbar) { return sp_lift(gbar, mod2) * gamma_element(); }

Mat4 Sampler::gamma_element() {
  Mat4 g = Mat4::identity(mod2);
  for (const Mat4& X : sp4) {
    int64_t c = below(mod1.ell);
    if (c == 0) continue;
    for (int i = 0; i < 16; ++i)
      g.a[i] = (g.a[i] + mod2.ell * ((c * X.a[i]) % mod1.ell)) % mod2.q;
  }
  return g;
}

Mat4 Sampler::gamma_direction() {
  for (;;) {
    Mat4 X(mod1);
    bool nonzero = false;
    for (const Mat4& B : sp4) {
      int64_t c = below(mod1.ell);
      for (int i = 0; i < 16; ++i) X.a[i] = (X.a[i] + c * B.a[i]) % mod1.ell;
    }
    for (int i = 0; i < 16; ++i) nonzero |= X.a[i] != 0;
    if (nonzero) return X;
  }
}

Mat4 Sampler::sp_mod_ell2() {
  Mat4 g = Mat4::identity(mod2);
  for (int t = 0; t < 20; ++t) {
    Vec4 u(mod2);
    bool nonzero = false;
    for (int i = 0; i < 4; ++i) {
      u.a[i] = below(mod2.q);
      nonzero |= u.a[i] % mod2.ell != 0;
    }
    if (!nonzero) {
      --t;
      continue;
    }
    g = g * transvection(u, below(mod2.q));
  }
  return g;
}

}  // namespace sp4fix
