#pragma once

#include <cstdint>

#include "sp4fix/closure.hpp"
#include "sp4fix/mat.hpp"
#include "sp4fix/prng.hpp"

namespace sp4fix {

// Shape parametrizations (mod ell). Each returns a symplectic matrix.
Mat4 mat_sbar(Modulus m1, int64_t a, int64_t b, int64_t c, int64_t d);
Mat4 mat_bbar(Modulus m1, int64_t a, int64_t b, int64_t c, int64_t d, int64_t e);
Mat4 mat_pbar(Modulus m1, const Mat2& mid, int64_t a, int64_t b, int64_t d);

/// Multiply by powers of I + ell*E14 until f(g) = target.
Mat4 with_f_value(const Mat4& g_mod_ell2, int64_t target);

/// Seeded draws of group elements of the standard shapes.
struct Sampler {
  Modulus mod2;
  Modulus mod1;
  SplitMix64 rng;
  std::vector<Mat4> sp4;  // cached basis mod ell

  Sampler(Modulus mod_ell2, uint64_t seed);

  int64_t below(int64_t m) { return static_cast<int64_t>(rng.below(m)); }
  int64_t unit();  // nonzero mod ell

  Mat4 sbar();
  Mat4 bbar();              // epsilon unrestricted unit
  Mat4 pbar();
  Mat2 sl2();               // uniform by rejection
  Mat4 lift(const Mat4& gbar);      // sp_lift * random Gamma(ell) element
  Mat4 gamma_element();             // I + ell * random sp4 combination
  Mat4 gamma_direction();           // the X matrix (mod ell) of a random line
  Mat4 sp_mod_ell2();               // product of 20 random transvections
};

}  // namespace sp4fix
