#include "sp4fix/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sp4fix/coords.hpp"
#include "sp4fix/prng.hpp"

namespace sp4fix {

namespace {

int val_of(int64_t x, int64_t ell, int n) {
  if (x == 0) return n;
  int v = 0;
  while (x % ell == 0) {
    x /= ell;
    ++v;
  }
  return v > n ? n : v;
}

int64_t unit_inv(int64_t u, Modulus mod) { return inv(Residue(u, mod)).v; }

using Row = std::array<int64_t, 4>;

Row sub_scaled(const Row& a, const Row& b, int64_t f, int64_t q) {
  Row r;
  for (int i = 0; i < 4; ++i)
    r[i] = ((a[i] - Residue::mulmod(f, b[i], q)) % q + q) % q;
  return r;
}

Row scale_row(const Row& a, int64_t c, int64_t q) {
  Row r;
  for (int i = 0; i < 4; ++i) r[i] = Residue::mulmod(a[i], ((c % q) + q) % q, q);
  return r;
}

bool row_zero(const Row& r) { return r[0] == 0 && r[1] == 0 && r[2] == 0 && r[3] == 0; }

struct Pivot {
  int col;
  int valn;
};

// Triangularize rows in place; returns pivot descriptors in column order.
// Min-valuation pivoting per column; all other rows cleared at pivot columns.
std::vector<Pivot> triangularize(std::vector<Row>& rows, Modulus mod) {
  const int64_t q = mod.q;
  std::vector<Row> out;
  std::vector<Pivot> pivots;
  std::vector<Row> work = rows;
  for (int c = 0; c < 4; ++c) {
    int best = -1, bestval = mod.n + 1;
    for (size_t r = 0; r < work.size(); ++r) {
      if (work[r][c] == 0) continue;
      int v = val_of(work[r][c], mod.ell, mod.n);
      if (v < bestval) {
        bestval = v;
        best = static_cast<int>(r);
      }
    }
    if (best < 0) continue;
    Row piv = work[best];
    work.erase(work.begin() + best);
    // normalize pivot entry to ell^v
    int64_t ellv = 1;
    for (int i = 0; i < bestval; ++i) ellv *= mod.ell;
    int64_t u = piv[c] / ellv;  // unit part
    piv = scale_row(piv, unit_inv(u, mod), q);
    for (auto& r : work) {
      if (r[c] == 0) continue;
      int64_t f = r[c] / ellv;  // exact: val >= bestval by minimality
      r = sub_scaled(r, piv, f, q);
    }
    for (auto& r : out) {
      if (r[c] == 0) continue;
      int64_t f = r[c] / ellv;
      r = sub_scaled(r, piv, f, q);
    }
    out.push_back(piv);
    pivots.push_back({c, bestval});
  }
  rows.clear();
  for (auto& r : out)
    if (!row_zero(r)) rows.push_back(r);
  return pivots;
}

// Reduce v against Howell rows; returns residual (zero iff member).
Row reduce_vs(const std::vector<Row>& rows, const std::vector<Pivot>& pivots,
              Row v, Modulus mod) {
  const int64_t q = mod.q;
  for (size_t r = 0; r < rows.size(); ++r) {
    int c = pivots[r].col;
    int64_t ellv = 1;
    for (int i = 0; i < pivots[r].valn; ++i) ellv *= mod.ell;
    if (v[c] % ellv != 0) return v;  // cannot reduce further
    v = sub_scaled(v, rows[r], v[c] / ellv, q);
  }
  return v;
}

// Howell normal form: triangularize, saturate with annihilator multiples,
// then reduce entries above each pivot for uniqueness.
std::vector<Pivot> howell(std::vector<Row>& rows, Modulus mod) {
  const int64_t q = mod.q;
  std::vector<Pivot> pivots;
  for (;;) {
    pivots = triangularize(rows, mod);
    bool grew = false;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (pivots[r].valn == 0) continue;
      int64_t mult = 1;
      for (int i = pivots[r].valn; i < mod.n; ++i) mult *= mod.ell;
      if (mult == 1) continue;
      Row cand = scale_row(rows[r], mult, q);
      Row res = reduce_vs(rows, pivots, cand, mod);
      if (!row_zero(res)) {
        rows.push_back(res);
        grew = true;
      }
    }
    if (!grew) break;
  }
  // canonical reduction above pivots, left to right
  for (size_t r = 0; r < rows.size(); ++r) {
    int c = pivots[r].col;
    int64_t ellv = 1;
    for (int i = 0; i < pivots[r].valn; ++i) ellv *= mod.ell;
    for (size_t r2 = 0; r2 < r; ++r2) {
      int64_t e = rows[r2][c];
      if (e % q == 0) continue;
      int64_t f = e / ellv;  // floor in canonical representatives
      if (f != 0) rows[r2] = sub_scaled(rows[r2], rows[r], f, q);
    }
  }
  return pivots;
}

std::vector<Pivot> pivots_of(const std::vector<Row>& rows, Modulus mod) {
  std::vector<Pivot> p;
  for (const auto& r : rows) {
    for (int c = 0; c < 4; ++c)
      if (r[c] != 0) {
        p.push_back({c, val_of(r[c], mod.ell, mod.n)});
        break;
      }
  }
  return p;
}

}  // namespace

std::array<int, 4> smith_valuations(const std::vector<Row>& rows, Modulus mod) {
  std::array<int, 4> vals{mod.n, mod.n, mod.n, mod.n};
  std::vector<Row> M;
  for (const auto& r : rows) {
    Row x;
    for (int i = 0; i < 4; ++i) x[i] = ((r[i] % mod.q) + mod.q) % mod.q;
    if (!row_zero(x)) M.push_back(x);
  }
  const int64_t q = mod.q;
  size_t k = M.size();
  for (int s = 0; s < 4; ++s) {
    int bi = -1, bj = -1, bv = mod.n + 1;
    for (size_t i = s; i < k; ++i)
      for (int j = s; j < 4; ++j) {
        if (M[i][j] == 0) continue;
        int v = val_of(M[i][j], mod.ell, mod.n);
        if (v < bv) {
          bv = v;
          bi = static_cast<int>(i);
          bj = j;
        }
      }
    if (bi < 0) break;
    if (static_cast<size_t>(s) >= k) break;
    std::swap(M[s], M[bi]);
    for (size_t i = 0; i < k; ++i) std::swap(M[i][s], M[i][bj]);
    int64_t ellv = 1;
    for (int i = 0; i < bv; ++i) ellv *= mod.ell;
    int64_t u = M[s][s] / ellv;
    M[s] = scale_row(M[s], unit_inv(u, mod), q);
    for (size_t i = 0; i < k; ++i) {
      if (i == static_cast<size_t>(s) || M[i][s] == 0) continue;
      M[i] = sub_scaled(M[i], M[s], M[i][s] / ellv, q);
    }
    for (int j = s + 1; j < 4; ++j) {
      if (M[s][j] == 0) continue;
      int64_t f = M[s][j] / ellv;
      for (size_t i = 0; i < k; ++i)
        M[i][j] = ((M[i][j] - Residue::mulmod(f, M[i][s], q)) % q + q) % q;
    }
    vals[s] = bv;
  }
  std::sort(vals.begin(), vals.end());
  return vals;
}

bool fixes_submodule(const Mat4& g, int n) {
  if (g.mod.n < n) throw bad_modulus("fixes_submodule: matrix modulus too small");
  Mat4 gn = g.mod.n == n ? g : reduce_mod(g, [&] {
    int64_t m = 1;
    for (int i = 0; i < n; ++i) m *= g.mod.ell;
    return m;
  }());
  Mat4 M = gn - Mat4::identity(gn.mod);
  std::vector<Row> rows;
  for (int i = 0; i < 4; ++i)
    rows.push_back({M.at(i, 0), M.at(i, 1), M.at(i, 2), M.at(i, 3)});
  auto vals = smith_valuations(rows, gn.mod);
  int total = 0;
  for (int v : vals) total += std::min(v, n);
  return total >= n;
}

LatticeRep LatticeRep::from_generators(Modulus mod2, const std::vector<Row>& gens) {
  if (mod2.n != 2) throw bad_modulus("LatticeRep expects n = 2");
  LatticeRep L;
  L.mod = mod2;
  for (const auto& g : gens) {
    Row r;
    for (int i = 0; i < 4; ++i) r[i] = ((g[i] % mod2.q) + mod2.q) % mod2.q;
    if (!row_zero(r)) L.rows.push_back(r);
  }
  howell(L.rows, mod2);
  auto vals = smith_valuations(L.rows, mod2);
  for (int i = 0; i < 4; ++i) L.index_vals[i] = vals[i];
  return L;
}

LatticeRep LatticeRep::from_subspace(Modulus mod2, const SubspaceFl& V) {
  std::vector<Row> gens;
  for (const auto& r : V.rows) gens.push_back({r[0], r[1], r[2], r[3]});
  for (int i = 0; i < 4; ++i) {
    Row r{0, 0, 0, 0};
    r[i] = mod2.ell;
    gens.push_back(r);
  }
  return from_generators(mod2, gens);
}

LatticeRep LatticeRep::ell_T(Modulus mod2) {
  return from_subspace(mod2, SubspaceFl(mod2.ell, 4));
}

LatticeRep LatticeRep::full_T(Modulus mod2) {
  std::vector<Row> gens;
  for (int i = 0; i < 4; ++i) {
    Row r{0, 0, 0, 0};
    r[i] = 1;
    gens.push_back(r);
  }
  return from_generators(mod2, gens);
}

LatticeRep LatticeRep::scaled_by_ell() const {
  std::vector<Row> gens;
  for (const auto& r : rows) gens.push_back(scale_row(r, mod.ell, mod.q));
  return from_generators(mod, gens);
}

bool LatticeRep::contains_vector(const Row& v) const {
  Row x;
  for (int i = 0; i < 4; ++i) x[i] = ((v[i] % mod.q) + mod.q) % mod.q;
  auto res = reduce_vs(rows, pivots_of(rows, mod), x, mod);
  return row_zero(res);
}

bool LatticeRep::contains_lattice(const LatticeRep& o) const {
  for (const auto& r : o.rows)
    if (!contains_vector(r)) return false;
  return true;
}

bool LatticeRep::contains_ell_T() const {
  for (int i = 0; i < 4; ++i) {
    Row r{0, 0, 0, 0};
    r[i] = mod.ell;
    if (!contains_vector(r)) return false;
  }
  return true;
}

SubspaceFl LatticeRep::mod_ell_subspace() const {
  SubspaceFl V(mod.ell, 4);
  for (const auto& r : rows)
    V.add({r[0] % mod.ell, r[1] % mod.ell, r[2] % mod.ell, r[3] % mod.ell});
  return V;
}

uint64_t LatticeRep::index_in_T() const {
  uint64_t idx = 1;
  for (int v : index_vals)
    for (int i = 0; i < v; ++i) idx *= static_cast<uint64_t>(mod.ell);
  return idx;
}

uint64_t LatticeRep::size() const {
  uint64_t full = 1;
  for (int i = 0; i < 8; ++i) full *= static_cast<uint64_t>(mod.ell);
  return full / index_in_T();
}

std::string LatticeRep::str() const {
  std::ostringstream os;
  os << "<";
  for (size_t r = 0; r < rows.size(); ++r) {
    os << (r ? ", " : "") << "(" << rows[r][0] << "," << rows[r][1] << ","
       << rows[r][2] << "," << rows[r][3] << ")";
  }
  os << "> + " << mod.ell << "^2 T";
  return os.str();
}

std::vector<SubspaceFl> invariant_subspaces_mod_ell(const GroupClosure& Gbar) {
  if (Gbar.mod.n != 1)
    throw bad_modulus("invariant_subspaces expects a mod-ell group");
  if (Gbar.size() > 1'000'000) throw too_large("invariant_subspaces: group too big");
  std::vector<SubspaceFl> out;
  for (const auto& V : all_subspaces_fl4(Gbar.mod.ell)) {
    bool ok = true;
    for (const Mat4& g : Gbar.generators)
      if (!subspace_invariant(V, g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(V);
  }
  return out;
}

std::vector<LatticeRep> invariant_subspaces(const GroupClosure& Gbar, Modulus mod2) {
  std::vector<LatticeRep> out;
  for (const auto& V : invariant_subspaces_mod_ell(Gbar))
    out.push_back(LatticeRep::from_subspace(mod2, V));
  return out;
}

bool trivial_quotient_action(const std::vector<Mat4>& gens, const LatticeRep& L,
                             const LatticeRep& Lp) {
  if (!L.contains_lattice(Lp)) throw bad_lattice_pair("pair not nested");
  uint64_t ratio = Lp.size() == 0 ? 0 : L.size() / Lp.size();
  if (L.size() % Lp.size() != 0 ||
      ratio != static_cast<uint64_t>(L.mod.ell) * L.mod.ell)
    throw bad_lattice_pair("pair index is not ell^2");
  auto apply = [&](const Mat4& g, const Row& v) {
    Row w{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
      int64_t acc = 0;
      for (int k = 0; k < 4; ++k) acc += g.at(i, k) * v[k];
      w[i] = ((acc % g.mod.q) + g.mod.q) % g.mod.q;
    }
    return w;
  };
  for (const Mat4& g : gens) {
    for (const auto& r : L.rows)
      if (!L.contains_vector(apply(g, r)))
        throw bad_lattice_pair("larger lattice not stable under generators");
    for (const auto& r : Lp.rows)
      if (!Lp.contains_vector(apply(g, r)))
        throw bad_lattice_pair("smaller lattice not stable under generators");
  }
  const int64_t q = L.mod.q;
  for (const Mat4& g : gens)
    for (const auto& r : L.rows) {
      Row gv = apply(g, r);
      Row diff;
      for (int i = 0; i < 4; ++i) diff[i] = ((gv[i] - r[i]) % q + q) % q;
      if (!Lp.contains_vector(diff)) return false;
    }
  return true;
}

bool trivial_quotient_action(const GroupClosure& G, const LatticeRep& L,
                             const LatticeRep& Lp) {
  return trivial_quotient_action(G.generators, L, Lp);
}

FixVerdict in_fix(const GroupClosure& G, int n) {
  if (G.truncated) throw truncated_closure("in_fix on truncated closure");
  if (n < 1 || n > G.mod.n) throw bad_modulus("in_fix: bad n");
  int64_t elln = 1;
  for (int i = 0; i < n; ++i) elln *= G.mod.ell;
  FixVerdict v;
  v.n = n;
  v.in_fix = true;
  Mat4 id = Mat4::identity(G.mod);
  for (const Mat4& g : G.elements) {
    ++v.scanned;
    if (mat_det(g - id).v % elln != 0) {
      v.in_fix = false;
      v.witness = g;
      break;
    }
  }
  return v;
}

FixVerdict in_fix(const CosetClosure& G, int n) {
  if (G.truncated) throw truncated_closure("in_fix on truncated coset closure");
  if (n < 1 || n > 2) throw bad_modulus("in_fix: bad n");
  int64_t elln = 1;
  for (int i = 0; i < n; ++i) elln *= G.mod.ell;
  FixVerdict v;
  v.n = n;
  v.in_fix = true;
  v.scanned = G.order();
  Mat4 id = Mat4::identity(G.mod);
  std::vector<Mat4> kgens = n == 2 ? G.kernel_gens() : std::vector<Mat4>{};
  for (const Mat4& r : G.reps) {
    if (mat_det(r - id).v % elln != 0) {
      v.in_fix = false;
      v.witness = r;
      return v;
    }
    // det(r(1+ellX) - 1) = det(r-1) + ell*tr(adj(r-1) rX) is linear in X,
    // so the kernel basis directions decide the whole coset.
    for (const Mat4& k : kgens) {
      Mat4 rk = r * k;
      if (mat_det(rk - id).v % elln != 0) {
        v.in_fix = false;
        v.witness = rk;
        return v;
      }
    }
  }
  return v;
}

const char* ce_status_name(CEStatus s) {
  switch (s) {
    case CEStatus::Counterexample: return "counterexample";
    case CEStatus::NotCounterexample: return "not_counterexample";
    default: return "preconditions_unmet";
  }
}

namespace {

struct CEInputs {
  Modulus mod2;
  std::vector<Mat4> action_gens;
  GroupClosure image;
  bool p_shaped = false;
  bool contains_gamma_kerf = false;
  bool f_nontrivial = false;
};

CEVerdict decide_counterexample(const CEInputs& in) {
  auto spaces = invariant_subspaces_mod_ell(in.image);
  std::vector<LatticeRep> lat, lat_scaled;
  lat.reserve(spaces.size());
  for (const auto& V : spaces) {
    lat.push_back(LatticeRep::from_subspace(in.mod2, V));
    lat_scaled.push_back(lat.back().scaled_by_ell());
  }
  for (size_t a = 0; a < spaces.size(); ++a)
    for (size_t b = 0; b < spaces.size(); ++b) {
      if (spaces[a].dim() != spaces[b].dim() + 2) continue;
      if (!spaces[a].contains_space(spaces[b])) continue;
      if (trivial_quotient_action(in.action_gens, lat[a], lat[b]))
        return CEVerdict{CEStatus::NotCounterexample,
                         TrivialPair{spaces[a], spaces[b], 0}, ""};
      if (trivial_quotient_action(in.action_gens, lat[b], lat_scaled[a]))
        return CEVerdict{CEStatus::NotCounterexample,
                         TrivialPair{spaces[a], spaces[b], 1}, ""};
    }
  std::string missing;
  if (!in.p_shaped) missing += "group is not P-shaped mod ell; ";
  if (!in.contains_gamma_kerf)
    missing += "group does not contain Gamma(ell) ∩ ker f; ";
  if (!in.f_nontrivial) missing += "f is trivial on the group; ";
  if (missing.empty())
    return CEVerdict{CEStatus::Counterexample, std::nullopt, ""};
  return CEVerdict{CEStatus::PreconditionsUnmet, std::nullopt,
                   missing.substr(0, missing.size() - 2)};
}

bool all_p_shaped(const std::vector<Mat4>& gens) {
  for (const Mat4& g : gens)
    if (membership_class(g) == MembershipClass::None) return false;
  return true;
}

}  // namespace

CEVerdict is_counterexample(const CosetClosure& G) {
  if (G.mod.n != 2) throw bad_modulus("is_counterexample expects n = 2");
  FixVerdict fv = in_fix(G, 2);
  if (!fv.in_fix)
    throw not_in_fix("group is not in Fix(ell^2); witness det != 0");
  CEInputs in;
  in.mod2 = G.mod;
  in.action_gens = G.action_generators();
  in.image = G.mod_ell_image();
  in.p_shaped = all_p_shaped(in.action_gens);
  in.contains_gamma_kerf = true;
  for (const Mat4& X : sp4_basis_ker_f(Modulus(G.mod.ell, 1)))
    if (!G.kernel_contains_matrix(X)) {
      in.contains_gamma_kerf = false;
      break;
    }
  in.f_nontrivial = false;
  if (in.p_shaped) {
    for (const Mat4& g : G.generators)
      if (coord_f(g).v != 0) in.f_nontrivial = true;
    for (const auto& row : G.kernel.rows)
      if (row[3] % G.mod.ell != 0) in.f_nontrivial = true;  // X_{1,4} direction
  }
  return decide_counterexample(in);
}

CEVerdict is_counterexample(const GroupClosure& G) {
  if (G.mod.n != 2) throw bad_modulus("is_counterexample expects n = 2");
  FixVerdict fv = in_fix(G, 2);
  if (!fv.in_fix)
    throw not_in_fix("group is not in Fix(ell^2); witness det != 0");
  CEInputs in;
  in.mod2 = G.mod;
  in.action_gens = G.generators;
  std::vector<Mat4> rgens;
  for (const Mat4& g : G.generators) rgens.push_back(reduce_mod(g, G.mod.ell));
  in.image = closure(rgens);
  in.p_shaped = all_p_shaped(G.generators);
  in.contains_gamma_kerf = true;
  for (const Mat4& k : gamma_ker_f_generators(G.mod))
    if (!G.contains(k)) {
      in.contains_gamma_kerf = false;
      break;
    }
  in.f_nontrivial = false;
  if (in.p_shaped)
    for (const Mat4& g : G.generators)
      if (coord_f(g).v != 0) in.f_nontrivial = true;
  return decide_counterexample(in);
}

OrbitCheckResult orbit_check(Modulus mod2, bool with_ker_f, uint64_t samples,
                             uint64_t seed) {
  if (mod2.n != 2) throw bad_modulus("orbit_check expects n = 2");
  const int64_t ell = mod2.ell;
  const int64_t q = mod2.q;
  std::vector<Mat4> kgens =
      with_ker_f ? gamma_ker_f_generators(mod2) : gamma_generators(mod2);

  auto enc = [&](const Vec4& v) {
    return static_cast<uint32_t>(((v.a[0] * q + v.a[1]) * q + v.a[2]) * q + v.a[3]);
  };
  auto orbit_of = [&](const Vec4& v) {
    std::set<uint32_t> seen{enc(v)};
    std::vector<Vec4> frontier{v};
    while (!frontier.empty()) {
      std::vector<Vec4> next;
      for (const Vec4& x : frontier)
        for (const Mat4& g : kgens) {
          Vec4 y = g * x;
          if (seen.insert(enc(y)).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    return seen;
  };
  auto expected_of = [&](const Vec4& v) {
    std::set<uint32_t> ex;
    bool e4_line = with_ker_f && v.a[0] % ell == 0 && v.a[1] % ell == 0 &&
                   v.a[2] % ell == 0 && v.a[3] % ell != 0;
    for (int64_t a = 0; a < ell; ++a)
      for (int64_t b = 0; b < ell; ++b)
        for (int64_t c = 0; c < ell; ++c) {
          if (e4_line) {
            // v + ell*W with W = {w : <w,e4> in ell Z}: first offset is 0
            Vec4 u(mod2, {v.a[0], v.a[1] + ell * a, v.a[2] + ell * b,
                          v.a[3] + ell * c});
            ex.insert(enc(u));
          } else {
            for (int64_t d = 0; d < ell; ++d) {
              Vec4 u(mod2, {v.a[0] + ell * a, v.a[1] + ell * b,
                            v.a[2] + ell * c, v.a[3] + ell * d});
              ex.insert(enc(u));
            }
          }
        }
    return ex;
  };

  OrbitCheckResult res;
  auto run_one = [&](const Vec4& v) {
    ++res.scanned;
    if (orbit_of(v) != expected_of(v)) {
      ++res.violations;
      res.pass = false;
      if (!res.witness) res.witness = v;
    }
  };
  if (ell == 2) {
    for (int64_t code = 0; code < q * q * q * q; ++code) {
      int64_t c = code;
      Vec4 v(mod2);
      bool in_ellT = true;
      for (int i = 0; i < 4; ++i) {
        v.a[i] = c % q;
        c /= q;
        if (v.a[i] % ell != 0) in_ellT = false;
      }
      if (in_ellT) continue;
      run_one(v);
    }
  } else {
    SplitMix64 rng(seed);
    for (uint64_t s = 0; s < samples; ++s) {
      Vec4 v(mod2);
      do {
        for (int i = 0; i < 4; ++i) v.a[i] = static_cast<int64_t>(rng.below(q));
      } while (v.a[0] % ell == 0 && v.a[1] % ell == 0 && v.a[2] % ell == 0 &&
               v.a[3] % ell == 0);
      run_one(v);
    }
  }
  return res;
}

}  // namespace sp4fix
