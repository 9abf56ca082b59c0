#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sp4fix/closure.hpp"
#include "sp4fix/flinalg.hpp"
#include "sp4fix/mat.hpp"

namespace sp4fix {

/// Valuations of the elementary divisors of T/L where L is spanned by the
/// given rows (plus ell^n T); capped at n, sorted ascending.
std::array<int, 4> smith_valuations(const std::vector<std::array<int64_t, 4>>& rows,
                                    Modulus mod);

/// Does g-1 kill a submodule of T/ell^n T of order ell^n?
/// Decided by Smith normal form; equals det(g-1) = 0 mod ell^n.
bool fixes_submodule(const Mat4& g, int n);

/// A sublattice of T containing ell^2 T, canonicalized by its Howell-form
/// generating rows over Z/ell^2.
struct LatticeRep {
  Modulus mod;                                 // n = 2
  std::vector<std::array<int64_t, 4>> rows;    // Howell canonical form
  std::array<int, 4> index_vals{2, 2, 2, 2};   // divisor valuations of T/L

  static LatticeRep from_generators(Modulus mod2,
                                    const std::vector<std::array<int64_t, 4>>& gens);
  static LatticeRep from_subspace(Modulus mod2, const SubspaceFl& V);
  static LatticeRep ell_T(Modulus mod2);
  static LatticeRep full_T(Modulus mod2);

  LatticeRep scaled_by_ell() const;

  bool contains_vector(const std::array<int64_t, 4>& v) const;
  bool contains_lattice(const LatticeRep& o) const;
  bool contains_ell_T() const;

  /// L/ellT as a subspace of T/ellT; only valid when contains_ell_T().
  SubspaceFl mod_ell_subspace() const;

  uint64_t index_in_T() const;  // [T : L]
  uint64_t size() const;        // |L / ell^2 T|

  bool operator==(const LatticeRep& o) const {
    return mod == o.mod && rows == o.rows;
  }
  bool operator!=(const LatticeRep& o) const { return !(*this == o); }
  std::string str() const;
};

/// All G-stable subspaces of (F_ell)^4 (including 0 and the full space),
/// canonical order. Filters the Gaussian-binomial-many subspaces by
/// invariance under the generators.
std::vector<SubspaceFl> invariant_subspaces_mod_ell(const GroupClosure& Gbar);

/// The same list as lattices between ellT and T.
std::vector<LatticeRep> invariant_subspaces(const GroupClosure& Gbar, Modulus mod2);

/// True iff g v = v (mod Lp) for all generators g and basis vectors v of L.
/// Throws bad_lattice_pair (not nested / wrong index / not stable).
bool trivial_quotient_action(const std::vector<Mat4>& gens, const LatticeRep& L,
                             const LatticeRep& Lp);
bool trivial_quotient_action(const GroupClosure& G, const LatticeRep& L,
                             const LatticeRep& Lp);

/// Outcome of the Fix(ell^n) membership scan.
struct FixVerdict {
  bool in_fix = false;
  std::optional<Mat4> witness;  // det(witness - 1) != 0 mod ell^n
  int n = 2;
  uint64_t scanned = 0;
};

FixVerdict in_fix(const GroupClosure& G, int n);
FixVerdict in_fix(const CosetClosure& G, int n);

enum class CEStatus { Counterexample, NotCounterexample, PreconditionsUnmet };

struct TrivialPair {
  SubspaceFl V;   // L = <lifts of V, ellT>
  SubspaceFl Vp;  // Lp = <lifts of Vp, ellT>
  int quotient;   // 0: action trivial on L/Lp, 1: on Lp/ellL
};

struct CEVerdict {
  CEStatus status = CEStatus::PreconditionsUnmet;
  std::optional<TrivialPair> pair;  // present for NotCounterexample
  std::string reason;               // present for PreconditionsUnmet
};

const char* ce_status_name(CEStatus s);

/// Decision procedure over the stable-lattice window between ellT and T.
/// A trivial pair is always a sound NotCounterexample witness; the positive
/// verdict is only issued when the finite reduction's hypotheses hold
/// (P-shape, contains Gamma(ell) ∩ ker f, f nontrivial). Throws not_in_fix
/// when the Fix membership scan fails.
CEVerdict is_counterexample(const CosetClosure& G);
CEVerdict is_counterexample(const GroupClosure& G);

/// Orbit comparison for vectors v in T \ ellT mod ell^2 under
/// Gamma(ell)/Gamma(ell^2) (resp. its ker-f part): expected orbit is
/// v + ellT, except v + ellW when with_ker_f and v = (unit) e4 mod ell.
struct OrbitCheckResult {
  bool pass = true;
  uint64_t scanned = 0;
  uint64_t violations = 0;
  std::optional<Vec4> witness;
};

OrbitCheckResult orbit_check(Modulus mod2, bool with_ker_f, uint64_t samples,
                             uint64_t seed);

}  // namespace sp4fix
