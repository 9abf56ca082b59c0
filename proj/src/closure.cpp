#include "sp4fix/closure.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace sp4fix {

bool GroupClosure::contains(const Mat4& g) const { return index_of(g) >= 0; }

int GroupClosure::index_of(const Mat4& g) const {
  Enc128 e = g.encode();
  auto it = std::lower_bound(
      elements.begin(), elements.end(), e,
      [](const Mat4& m, const Enc128& k) { return m.encode() < k; });
  if (it == elements.end() || !(it->encode() == e)) return -1;
  return static_cast<int>(it - elements.begin());
}

GroupClosure closure(const std::vector<Mat4>& gens, size_t cap) {
  if (cap < 1) throw logic_violation("closure cap must be >= 1");
  Modulus mod = gens.empty() ? Modulus(2, 1) : gens[0].mod;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].mod != mod)
      throw logic_violation("closure: generators with mixed moduli");
    if (!is_sp(gens[i]))
      throw non_symplectic_generator("generator " + std::to_string(i) +
                                     " is not symplectic mod " + mod.str());
  }
  GroupClosure out;
  out.mod = mod;
  out.generators = gens;

  std::unordered_set<Enc128, Enc128Hash> seen;
  std::vector<Mat4> store;
  auto insert = [&](const Mat4& m) {
    if (seen.insert(m.encode()).second) {
      store.push_back(m);
      return true;
    }
    return false;
  };
  insert(Mat4::identity(mod));
  std::vector<Mat4> frontier = {Mat4::identity(mod)};
  auto by_enc = [](const Mat4& x, const Mat4& y) { return x.encode() < y.encode(); };
  while (!frontier.empty() && !out.truncated) {
    std::sort(frontier.begin(), frontier.end(), by_enc);
    std::vector<Mat4> next;
    for (const Mat4& x : frontier) {
      for (const Mat4& g : gens) {
        Mat4 y = x * g;
        if (insert(y)) {
          if (!is_sp(y)) throw logic_violation("closure produced a non-Sp element");
          next.push_back(y);
          if (store.size() > cap) {
            out.truncated = true;
            break;
          }
        }
      }
      if (out.truncated) break;
    }
    frontier = std::move(next);
  }
  std::sort(store.begin(), store.end(), by_enc);
  out.elements = std::move(store);
  return out;
}

namespace {

// Kernel of the linear map X -> X^T J + J X over F_ell, as RREF basis
// vectors; optionally intersected with {X_{1,4} = 0}.
std::vector<Mat4> sp4_kernel_basis(Modulus m1, bool ker_f) {
  const int64_t ell = m1.ell;
  Mat4 Jm = symp_J(m1);
  // equations: for each (i,j), sum_k ( J_kj X_ki + J_ik X_kj ) = 0
  std::vector<std::vector<int64_t>> eqs;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::vector<int64_t> row(16, 0);
      for (int k = 0; k < 4; ++k) {
        row[4 * k + i] = (row[4 * k + i] + Jm.at(k, j)) % ell;
        row[4 * k + j] = (row[4 * k + j] + Jm.at(i, k)) % ell;
      }
      eqs.push_back(row);
    }
  if (ker_f) {
    std::vector<int64_t> row(16, 0);
    row[3] = 1;  // X_{1,4}
    eqs.push_back(row);
  }
  // Gaussian elimination to RREF.
  size_t nr = eqs.size();
  std::vector<int> pivot_of_col(16, -1);
  size_t rank = 0;
  for (int col = 0; col < 16 && rank < nr; ++col) {
    size_t sel = rank;
    while (sel < nr && eqs[sel][col] % ell == 0) ++sel;
    if (sel == nr) continue;
    std::swap(eqs[sel], eqs[rank]);
    int64_t pi = pow(Residue(eqs[rank][col], m1), ell >= 3 ? ell - 2 : 1).v;
    for (int c = 0; c < 16; ++c) eqs[rank][c] = eqs[rank][c] * pi % ell;
    for (size_t r = 0; r < nr; ++r) {
      if (r == rank) continue;
      int64_t f = eqs[r][col] % ell;
      if (f == 0) continue;
      for (int c = 0; c < 16; ++c)
        eqs[r][c] = ((eqs[r][c] - f * eqs[rank][c]) % ell + ell) % ell;
    }
    pivot_of_col[col] = static_cast<int>(rank);
    ++rank;
  }
  std::vector<Mat4> basis;
  for (int fc = 0; fc < 16; ++fc) {
    if (pivot_of_col[fc] >= 0) continue;
    std::vector<int64_t> v(16, 0);
    v[fc] = 1;
    for (int c = 0; c < 16; ++c) {
      int pr = pivot_of_col[c];
      if (pr >= 0) v[c] = (ell - eqs[pr][fc] % ell) % ell;
    }
    basis.push_back(fl16_to_mat(v, m1));
  }
  return basis;
}

std::vector<Mat4> one_plus_ell(const std::vector<Mat4>& Xs, Modulus m2) {
  std::vector<Mat4> out;
  for (const Mat4& X : Xs) {
    Mat4 g = Mat4::identity(m2);
    for (int i = 0; i < 16; ++i) g.a[i] = (g.a[i] + m2.ell * X.a[i]) % m2.q;
    out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<Mat4> sp4_basis(Modulus mod_ell) {
  if (mod_ell.n != 1) throw bad_modulus("sp4_basis expects n = 1");
  return sp4_kernel_basis(mod_ell, false);
}

std::vector<Mat4> sp4_basis_ker_f(Modulus mod_ell) {
  if (mod_ell.n != 1) throw bad_modulus("sp4_basis_ker_f expects n = 1");
  return sp4_kernel_basis(mod_ell, true);
}

std::vector<Mat4> gamma_generators(Modulus mod_ell2) {
  if (mod_ell2.n != 2) throw bad_modulus("gamma_generators expects n = 2");
  return one_plus_ell(sp4_basis(Modulus(mod_ell2.ell, 1)), mod_ell2);
}

std::vector<Mat4> gamma_ker_f_generators(Modulus mod_ell2) {
  if (mod_ell2.n != 2) throw bad_modulus("gamma_ker_f_generators expects n = 2");
  return one_plus_ell(sp4_basis_ker_f(Modulus(mod_ell2.ell, 1)), mod_ell2);
}

std::vector<Mat4> CosetClosure::kernel_gens() const {
  Modulus m1(mod.ell, 1);
  std::vector<Mat4> Xs;
  for (const auto& row : kernel.rows) Xs.push_back(fl16_to_mat(row, m1));
  return one_plus_ell(Xs, mod);
}

std::vector<Mat4> CosetClosure::action_generators() const {
  std::vector<Mat4> out = generators;
  auto kg = kernel_gens();
  out.insert(out.end(), kg.begin(), kg.end());
  return out;
}

GroupClosure CosetClosure::mod_ell_image() const {
  GroupClosure img;
  img.mod = Modulus(mod.ell, 1);
  for (const Mat4& g : generators) img.generators.push_back(reduce_mod(g, mod.ell));
  for (const Mat4& r : reps) img.elements.push_back(reduce_mod(r, mod.ell));
  std::sort(img.elements.begin(), img.elements.end(),
            [](const Mat4& x, const Mat4& y) { return x.encode() < y.encode(); });
  img.truncated = truncated;
  return img;
}

bool CosetClosure::kernel_contains_matrix(const Mat4& X_mod_ell) const {
  return kernel.contains(mat_to_fl16(X_mod_ell));
}

uint64_t CosetClosure::order() const {
  uint64_t o = reps.size();
  for (int i = 0; i < kernel.dim(); ++i) o *= static_cast<uint64_t>(mod.ell);
  return o;
}

std::string CosetClosure::order_str() const {
  return std::to_string(reps.size()) + "*" + std::to_string(mod.ell) + "^" +
         std::to_string(kernel.dim());
}

namespace {

struct CosetBuilder {
  Modulus mod;
  int64_t ell;
  std::vector<Mat4> gens;
  std::vector<Mat4> gbar, gbar_inv;  // mod-ell generator images
  EchelonFl V;
  std::unordered_map<Enc128, size_t, Enc128Hash> by_exact;
  std::unordered_map<Enc128, size_t, Enc128Hash> by_modell;
  std::vector<Mat4> reps;
  std::unordered_map<Enc128, EchelonFl, Enc128Hash> wcache;

  explicit CosetBuilder(Modulus m) : mod(m), ell(m.ell), V(m.ell, 16) {}

  void add_kernel(const Mat4& X0) {
    std::vector<Mat4> stack;
    if (V.add(mat_to_fl16(X0))) stack.push_back(X0);
    while (!stack.empty()) {
      Mat4 Y = stack.back();
      stack.pop_back();
      for (size_t i = 0; i < gbar.size(); ++i) {
        Mat4 Z = gbar[i] * Y * gbar_inv[i];
        if (V.add(mat_to_fl16(Z))) stack.push_back(Z);
      }
    }
  }

  const EchelonFl& wspace(const Mat4& gb) {
    Enc128 key = gb.encode();
    auto it = wcache.find(key);
    if (it != wcache.end()) return it->second;
    EchelonFl W(ell, 16);
    Modulus m1(ell, 1);
    for (const auto& row : V.rows) W.add(mat_to_fl16(gb * fl16_to_mat(row, m1)));
    return wcache.emplace(key, std::move(W)).first->second;
  }

  Mat4 canonical(const Mat4& p) {
    Mat4 gb = reduce_mod(p, ell);
    std::vector<int64_t> D(16);
    for (int i = 0; i < 16; ++i) D[i] = (p.a[i] - gb.a[i]) / ell;
    D = wspace(gb).reduce(std::move(D));
    Mat4 rep(mod);
    for (int i = 0; i < 16; ++i) rep.a[i] = gb.a[i] + ell * D[i];
    return rep;
  }

  // Returns false when a kernel growth happened (caller restarts the walk).
  bool try_insert(const Mat4& p, bool* added) {
    Mat4 c = canonical(p);
    Enc128 ce = c.encode();
    if (by_exact.count(ce)) {
      *added = false;
      return true;
    }
    Enc128 me = reduce_mod(c, ell).encode();
    auto it = by_modell.find(me);
    if (it != by_modell.end()) {
      // same mod-ell image in a different coset: absorb the difference
      Mat4 diff = mat_inverse(reps[it->second]) * c;
      Mat4 X{Modulus(ell, 1)};
      for (int i = 0; i < 16; ++i) {
        int64_t d = diff.a[i] - (i % 5 == 0 ? 1 : 0);
        if (d % ell != 0) throw logic_violation("coset_closure: bad kernel log");
        X.a[i] = ((d / ell) % ell + ell) % ell;
      }
      add_kernel(X);
      return false;
    }
    by_exact.emplace(ce, reps.size());
    by_modell.emplace(me, reps.size());
    reps.push_back(c);
    *added = true;
    return true;
  }
};

}  // namespace

CosetClosure coset_closure(const std::vector<Mat4>& gens,
                           const std::vector<Mat4>& kernel_seed, size_t rep_cap) {
  if (gens.empty() && kernel_seed.empty())
    throw logic_violation("coset_closure: no generators");
  Modulus mod = gens.empty() ? Modulus(kernel_seed[0].mod.ell, 2) : gens[0].mod;
  if (mod.n != 2) throw bad_modulus("coset_closure expects n = 2");
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].mod != mod)
      throw logic_violation("coset_closure: generators with mixed moduli");
    if (!is_sp(gens[i]))
      throw non_symplectic_generator("generator " + std::to_string(i) +
                                     " is not symplectic mod " + mod.str());
  }
  CosetBuilder B(mod);
  B.gens = gens;
  for (const Mat4& g : gens) {
    Mat4 gb = reduce_mod(g, mod.ell);
    B.gbar.push_back(gb);
    B.gbar_inv.push_back(mat_inverse(gb));
  }
  Modulus m1(mod.ell, 1);
  for (const Mat4& X : kernel_seed) {
    if (X.mod != m1) throw bad_modulus("kernel seed must be given mod ell");
    Mat4 lifted = Mat4::identity(mod);
    for (int i = 0; i < 16; ++i) lifted.a[i] = (lifted.a[i] + mod.ell * X.a[i]) % mod.q;
    if (!is_sp(lifted))
      throw non_symplectic_generator("kernel seed is not an sp4 direction");
    B.add_kernel(X);
  }

  bool truncated = false;
  for (;;) {
    B.by_exact.clear();
    B.by_modell.clear();
    B.reps.clear();
    B.wcache.clear();
    truncated = false;
    bool added = false;
    bool grew = false;
    if (!B.try_insert(Mat4::identity(mod), &added))
      throw logic_violation("coset_closure: identity insertion grew kernel");
    for (size_t idx = 0; idx < B.reps.size() && !grew && !truncated; ++idx) {
      for (const Mat4& g : B.gens) {
        Mat4 p = B.reps[idx] * g;
        if (!B.try_insert(p, &added)) {
          grew = true;
          break;
        }
        if (added && B.reps.size() > rep_cap) {
          truncated = true;
          break;
        }
      }
    }
    if (!grew) break;
  }

  CosetClosure out;
  out.mod = mod;
  out.generators = gens;
  out.kernel = B.V;
  out.reps = std::move(B.reps);
  out.truncated = truncated;
  std::sort(out.reps.begin(), out.reps.end(),
            [](const Mat4& x, const Mat4& y) { return x.encode() < y.encode(); });
  return out;
}

}  // namespace sp4fix
