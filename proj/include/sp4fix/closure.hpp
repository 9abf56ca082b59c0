#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sp4fix/flinalg.hpp"
#include "sp4fix/mat.hpp"

namespace sp4fix {

inline constexpr size_t kDefaultClosureCap = 20'000'000;

/// A finite subgroup of Sp4(Z/ell^n), materialized as a closed element set.
struct GroupClosure {
  Modulus mod;
  std::vector<Mat4> generators;
  std::vector<Mat4> elements;  // sorted by canonical encoding
  bool truncated = false;

  size_t size() const { return elements.size(); }
  bool contains(const Mat4& g) const;
  int index_of(const Mat4& g) const;  // -1 if absent
};

/// Breadth-first product closure of symplectic generators.
GroupClosure closure(const std::vector<Mat4>& gens,
                     size_t cap = kDefaultClosureCap);

/// Basis of sp4(F_ell) = {X : X^T J + J X = 0}, computed at runtime; 10 matrices.
std::vector<Mat4> sp4_basis(Modulus mod_ell);

/// Basis of {X in sp4 : X_{1,4} = 0}; 9 matrices (the ker-f directions).
std::vector<Mat4> sp4_basis_ker_f(Modulus mod_ell);

/// Generators {I + ell X} of Gamma(ell)/Gamma(ell^2) inside Sp4(Z/ell^2).
std::vector<Mat4> gamma_generators(Modulus mod_ell2);

/// Generators of (Gamma(ell) ∩ ker f)/Gamma(ell^2).
std::vector<Mat4> gamma_ker_f_generators(Modulus mod_ell2);

/// A subgroup G of Sp4(Z/ell^2) stored as coset representatives modulo
/// K = G ∩ Gamma(ell), with K itself kept as a subspace V of sp4(F_ell).
/// The representation is exact: every rep is a genuine element of G, there is
/// exactly one rep per mod-ell image element, and K = {I + ell X : X in V}.
struct CosetClosure {
  Modulus mod;  // n = 2
  std::vector<Mat4> generators;
  EchelonFl kernel;        // V, 16-wide echelon over F_ell
  std::vector<Mat4> reps;  // sorted by canonical encoding
  bool truncated = false;

  std::vector<Mat4> kernel_gens() const;        // I + ell X_i, basis order
  std::vector<Mat4> action_generators() const;  // generators + kernel_gens
  GroupClosure mod_ell_image() const;
  bool kernel_contains_matrix(const Mat4& X_mod_ell) const;
  uint64_t order() const;  // reps.size() * ell^dim(V)
  std::string order_str() const;
};

/// Close gens together with the kernel subgroup generated by kernel_seed
/// (matrices X mod ell, each I+ellX symplectic). The kernel grows to exactly
/// G ∩ Gamma(ell) during the walk.
CosetClosure coset_closure(const std::vector<Mat4>& gens,
                           const std::vector<Mat4>& kernel_seed,
                           size_t rep_cap = 200'000);

}  // namespace sp4fix
