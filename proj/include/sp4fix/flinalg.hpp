#pragma once

#include <cstdint>
#include <vector>

#include "sp4fix/mat.hpp"

namespace sp4fix {

/// Row-reduced echelon basis of a subspace of F_ell^width (pivots = 1).
struct EchelonFl {
  int64_t ell = 2;
  int width = 0;
  std::vector<std::vector<int64_t>> rows;
  std::vector<int> pivots;

  EchelonFl() = default;
  EchelonFl(int64_t ell_, int width_) : ell(ell_), width(width_) {}

  int dim() const { return static_cast<int>(rows.size()); }

  /// Residual of v after reduction against the basis.
  std::vector<int64_t> reduce(std::vector<int64_t> v) const;

  bool contains(const std::vector<int64_t>& v) const;

  /// Insert v if independent, keeping RREF. Returns true if the dim grew.
  bool add(std::vector<int64_t> v);

  bool contains_space(const EchelonFl& other) const;

  /// Flattened canonical key (RREF is unique per subspace).
  std::vector<int64_t> key() const;

  bool operator==(const EchelonFl& o) const {
    return ell == o.ell && width == o.width && rows == o.rows;
  }
};

/// Subspaces of F_ell^4, used for the mod-ell lattice window.
using SubspaceFl = EchelonFl;

/// All subspaces of F_ell^4 in canonical order (Gaussian-binomial many).
std::vector<SubspaceFl> all_subspaces_fl4(int64_t ell);

/// Is the column-vector subspace V invariant under the mod-ell matrix g?
bool subspace_invariant(const SubspaceFl& V, const Mat4& g);

std::vector<int64_t> mat_to_fl16(const Mat4& x);
Mat4 fl16_to_mat(const std::vector<int64_t>& v, Modulus m);

}  // namespace sp4fix
