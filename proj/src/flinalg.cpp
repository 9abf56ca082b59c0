#include "sp4fix/flinalg.hpp"

#include <algorithm>
#include <map>

#include "sp4fix/errors.hpp"

namespace sp4fix {

namespace {

int64_t inv_mod_ell(int64_t x, int64_t ell) {
  return pow(Residue(x, Modulus(ell, 1)), ell - 2 <= 0 ? 1 : ell - 2).v;
}

}  // namespace

std::vector<int64_t> EchelonFl::reduce(std::vector<int64_t> v) const {
  for (size_t r = 0; r < rows.size(); ++r) {
    int64_t c = v[pivots[r]] % ell;
    if (c == 0) continue;
    for (int j = 0; j < width; ++j)
      v[j] = ((v[j] - c * rows[r][j]) % ell + ell) % ell;
  }
  return v;
}

bool EchelonFl::contains(const std::vector<int64_t>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](int64_t x) { return x == 0; });
}

bool EchelonFl::add(std::vector<int64_t> v) {
  for (auto& x : v) x = (x % ell + ell) % ell;
  v = reduce(v);
  int p = -1;
  for (int j = 0; j < width; ++j)
    if (v[j] != 0) {
      p = j;
      break;
    }
  if (p < 0) return false;
  int64_t pi = inv_mod_ell(v[p], ell);
  for (int j = 0; j < width; ++j) v[j] = v[j] * pi % ell;
  // clear column p in existing rows, then insert keeping pivot order
  for (size_t r = 0; r < rows.size(); ++r) {
    int64_t c = rows[r][p];
    if (c == 0) continue;
    for (int j = 0; j < width; ++j)
      rows[r][j] = ((rows[r][j] - c * v[j]) % ell + ell) % ell;
  }
  size_t pos = 0;
  while (pos < pivots.size() && pivots[pos] < p) ++pos;
  rows.insert(rows.begin() + pos, v);
  pivots.insert(pivots.begin() + pos, p);
  return true;
}

bool EchelonFl::contains_space(const EchelonFl& other) const {
  for (const auto& r : other.rows)
    if (!contains(r)) return false;
  return true;
}

std::vector<int64_t> EchelonFl::key() const {
  std::vector<int64_t> k;
  k.push_back(dim());
  for (const auto& r : rows) k.insert(k.end(), r.begin(), r.end());
  return k;
}

std::vector<SubspaceFl> all_subspaces_fl4(int64_t ell) {
  static std::map<int64_t, std::vector<SubspaceFl>> cache;
  if (auto it = cache.find(ell); it != cache.end()) return it->second;
  const int64_t count = ell * ell * ell * ell;
  std::vector<std::vector<int64_t>> vectors;
  for (int64_t code = 0; code < count; ++code) {
    int64_t c = code;
    std::vector<int64_t> v(4);
    for (int i = 0; i < 4; ++i) {
      v[i] = c % ell;
      c /= ell;
    }
    vectors.push_back(v);
  }
  std::map<std::vector<int64_t>, SubspaceFl> seen;
  SubspaceFl zero(ell, 4);
  seen[zero.key()] = zero;
  std::vector<SubspaceFl> frontier{zero};
  while (!frontier.empty()) {
    std::vector<SubspaceFl> next;
    for (const auto& S : frontier)
      for (const auto& v : vectors) {
        if (S.contains(v)) continue;
        SubspaceFl grown = S;
        grown.add(v);
        auto k = grown.key();
        if (seen.emplace(k, grown).second) next.push_back(grown);
      }
    frontier = std::move(next);
  }
  std::vector<SubspaceFl> out;
  out.reserve(seen.size());
  for (auto& kv : seen) out.push_back(kv.second);
  // map iteration order: sorted by (dim, rows) = canonical
  cache[ell] = out;
  return out;
}

bool subspace_invariant(const SubspaceFl& V, const Mat4& g) {
  if (g.mod.n != 1 || g.mod.ell != V.ell)
    throw logic_violation("subspace_invariant expects a mod-ell matrix");
  for (const auto& row : V.rows) {
    Vec4 v(g.mod, {row[0], row[1], row[2], row[3]});
    Vec4 gv = g * v;
    if (!V.contains({gv.a[0], gv.a[1], gv.a[2], gv.a[3]})) return false;
  }
  return true;
}

std::vector<int64_t> mat_to_fl16(const Mat4& x) {
  return std::vector<int64_t>(x.a.begin(), x.a.end());
}

Mat4 fl16_to_mat(const std::vector<int64_t>& v, Modulus m) {
  Mat4 x(m);
  for (int i = 0; i < 16; ++i) x.set(i / 4, i % 4, v[i]);
  return x;
}

}  // namespace sp4fix
