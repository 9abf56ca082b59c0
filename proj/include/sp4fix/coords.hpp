#pragma once

#include <cstdint>
#include <vector>

#include "sp4fix/closure.hpp"
#include "sp4fix/mat.hpp"

namespace sp4fix {

/// Finest standard-subgroup shape matched by the mod-ell reduction.
enum class MembershipClass { S, B, P, None };

const char* membership_name(MembershipClass c);

/// Classify by mod-ell shape: P = block form fixing e4-bar and acting
/// trivially on the quotient by <e2,e3,e4>; B = P and lower-triangular;
/// S = B with unit diagonal.
MembershipClass membership_class(const Mat4& g);

// Mod-ell entry extractors (defined on P-shaped matrices; n = 1 or 2).
Residue coord_alpha(const Mat4& g);        // (2,1)
Residue coord_beta(const Mat4& g);         // (3,1)
Residue coord_gamma(const Mat4& g);        // (3,2)
Residue coord_delta(const Mat4& g);        // (4,1)
Residue coord_epsilon(const Mat4& g);      // (2,2)
Residue coord_alpha_prime(const Mat4& g);  // (4,3)
Residue coord_beta_prime(const Mat4& g);   // (4,2)

/// f(g) = (g_{1,4} / ell) mod ell; needs n = 2 and P-shape.
Residue coord_f(const Mat4& g);

/// The full coordinate read-out of one mod-ell^2 matrix.
struct CoordProfile {
  MembershipClass cls = MembershipClass::None;
  Residue alpha, beta, gamma, delta, epsilon, f, alpha_prime, beta_prime;
};

/// Errors not_parabolic when the mod-ell shape is outside P.
CoordProfile coords(const Mat4& g);

/// (gamma a^2 + b a (1-e^2)/e + d (1-e)^2/e) * f * ell in Z/ell^2.
/// Requires epsilon to be a unit.
Residue det_formula_iwahori(const CoordProfile& p, Modulus mod_ell2);

/// Middle 2x2 block of the mod-ell reduction; multiplicative on P.
Mat2 pi_project(const Mat4& g);

Mat4 embed_sl2(const Mat2& m);  // block-diag(1, m, 1) over the same modulus

bool is_unipotent(const Mat2& u);

uint64_t mat2_order(const Mat2& m);

/// No common eigenvector line for the generating set.
bool sl2_irreducible(const std::vector<Mat2>& gens);

/// f(gh) = f(g) + f(h) on all pairs (exhaustive when |G| <= 10^4, else
/// 10^5 sampled pairs with the given seed).
bool f_is_homomorphism_check(const GroupClosure& G, uint64_t seed = 0);

}  // namespace sp4fix
