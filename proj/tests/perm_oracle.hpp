#pragma once

// Test-only independent group model: permutations of up to 16 points with
// their own closure, order, center, derived-subgroup, and abelian-invariant
// computations. Used as the oracle for the frozen fingerprint constants.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace perm_oracle {

using Perm = std::array<uint8_t, 16>;

inline Perm perm_id() {
  Perm p{};
  for (int i = 0; i < 16; ++i) p[i] = static_cast<uint8_t>(i);
  return p;
}

inline Perm compose(const Perm& a, const Perm& b) {  // (a*b)(x) = a(b(x))
  Perm r{};
  for (int i = 0; i < 16; ++i) r[i] = a[b[i]];
  return r;
}

inline Perm inverse(const Perm& a) {
  Perm r{};
  for (int i = 0; i < 16; ++i) r[a[i]] = static_cast<uint8_t>(i);
  return r;
}

inline Perm from_cycles(const std::vector<std::vector<int>>& cycles) {
  Perm p = perm_id();
  for (const auto& c : cycles)
    for (size_t i = 0; i < c.size(); ++i)
      p[c[i]] = static_cast<uint8_t>(c[(i + 1) % c.size()]);
  return p;
}

inline std::set<Perm> close(const std::vector<Perm>& gens) {
  std::set<Perm> seen{perm_id()};
  std::vector<Perm> frontier{perm_id()};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = compose(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline uint64_t order_of(const Perm& g) {
  Perm x = g;
  uint64_t k = 1;
  while (x != perm_id()) {
    x = compose(x, g);
    ++k;
  }
  return k;
}

struct Invariants {
  uint64_t order;
  std::vector<std::pair<uint64_t, uint64_t>> histogram;
  uint64_t center_order;
  std::vector<uint64_t> abelian_invariants;
  uint64_t derived_order;
};

inline std::set<Perm> derived_of(const std::set<Perm>& G) {
  std::vector<Perm> comms;
  for (const auto& a : G)
    for (const auto& b : G)
      comms.push_back(compose(compose(inverse(a), inverse(b)), compose(a, b)));
  return close(comms);
}

inline Invariants invariants_of(const std::vector<Perm>& gens) {
  std::set<Perm> G = close(gens);
  Invariants inv;
  inv.order = G.size();
  std::map<uint64_t, uint64_t> hist;
  for (const auto& g : G) ++hist[order_of(g)];
  inv.histogram.assign(hist.begin(), hist.end());
  uint64_t center = 0;
  for (const auto& z : G) {
    bool ok = true;
    for (const auto& g : G)
      if (compose(z, g) != compose(g, z)) {
        ok = false;
        break;
      }
    if (ok) ++center;
  }
  inv.center_order = center;
  std::set<Perm> D = derived_of(G);
  inv.derived_order = D.size();
  // abelian quotient: coset orders, then invariant factors from counts
  std::map<Perm, int> coset_of;
  std::vector<Perm> reps;
  for (const auto& g : G) {
    if (coset_of.count(g)) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (const auto& d : D) coset_of[compose(g, d)] = id;
  }
  auto cid = [&](const Perm& g) { return coset_of.at(g); };
  std::map<uint64_t, uint64_t> qhist;
  for (const auto& r : reps) {
    Perm x = r;
    uint64_t k = 1;
    while (cid(x) != cid(perm_id())) {
      x = compose(x, r);
      ++k;
    }
    ++qhist[k];
  }
  uint64_t qorder = reps.size();
  auto N = [&](uint64_t m) {
    uint64_t s = 0;
    for (auto& [o, c] : qhist)
      if (m % o == 0) s += c;
    return s;
  };
  std::vector<uint64_t> primes;
  uint64_t rest = qorder;
  for (uint64_t p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) primes.push_back(rest);
  std::map<uint64_t, std::vector<uint64_t>> pvals;
  size_t nfactors = 0;
  for (uint64_t p : primes) {
    std::vector<uint64_t> r;
    uint64_t pj = p, prev = 1;
    for (;;) {
      uint64_t nj = N(pj);
      if (nj == prev) break;
      uint64_t ratio = nj / prev, cnt = 0;
      while (ratio > 1) {
        ratio /= p;
        ++cnt;
      }
      r.push_back(cnt);
      prev = nj;
      if (pj > qorder) break;
      pj *= p;
    }
    pvals[p] = r;
    if (!r.empty()) nfactors = std::max<size_t>(nfactors, r[0]);
  }
  std::vector<uint64_t> factors(nfactors, 1);
  for (auto& [p, r] : pvals)
    for (size_t i = 0; i < nfactors; ++i) {
      uint64_t v = 0;
      for (uint64_t rj : r)
        if (rj >= i + 1) ++v;
      for (uint64_t k = 0; k < v; ++k) factors[i] *= p;
    }
  inv.abelian_invariants = factors;
  return inv;
}

// ---- model groups ----

inline std::vector<Perm> model_D4() {
  return {from_cycles({{0, 1, 2, 3}}), from_cycles({{0, 1}, {2, 3}})};
}

inline std::vector<Perm> model_C2xD4() {
  auto g = model_D4();
  g.push_back(from_cycles({{4, 5}}));
  return g;
}

inline std::vector<Perm> model_S3() {
  return {from_cycles({{0, 1, 2}}), from_cycles({{0, 1}})};
}

inline std::vector<Perm> model_C6() {
  return {from_cycles({{0, 1, 2}}), from_cycles({{3, 4}})};
}

inline std::vector<Perm> model_S3xC2() {
  auto g = model_S3();
  g.push_back(from_cycles({{3, 4}}));
  return g;
}

inline std::vector<Perm> model_Q8() {
  // regular action of i and j on the 8 unit quaternions
  // order: 1, -1, i, -i, j, -j, k, -k
  return {from_cycles({{0, 2, 1, 3}, {4, 6, 5, 7}}),
          from_cycles({{0, 4, 1, 5}, {2, 7, 3, 6}})};
}

inline std::vector<Perm> model_SL2F3() {
  // action on the 8 nonzero vectors of F_3^2, indexed x + 3y - 1 skipping 0
  auto idx = [](int x, int y) { return (x + 3 * y) - 1; };
  auto act = [&](int a, int b, int c, int d) {
    Perm p = perm_id();
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        if (x == 0 && y == 0) continue;
        int nx = (a * x + b * y) % 3, ny = (c * x + d * y) % 3;
        p[idx(x, y)] = static_cast<uint8_t>(idx(nx, ny));
      }
    return p;
  };
  return {act(1, 1, 0, 1), act(1, 0, 1, 1)};
}

inline std::vector<Perm> model_C3wrC3() {
  return {from_cycles({{0, 1, 2}}), from_cycles({{0, 3, 6}, {1, 4, 7}, {2, 5, 8}})};
}

inline std::vector<Perm> model_F20() {
  // affine maps x -> ax + b on F_5
  auto affine = [](int a, int b) {
    Perm p = perm_id();
    for (int x = 0; x < 5; ++x) p[x] = static_cast<uint8_t>((a * x + b) % 5);
    return p;
  };
  return {affine(1, 1), affine(2, 0)};
}

inline std::vector<Perm> model_C5xF20() {
  auto g = model_F20();
  g.push_back(from_cycles({{5, 6, 7, 8, 9}}));
  return g;
}

inline std::vector<Perm> model_C3xS3() {
  auto g = model_S3();
  g.push_back(from_cycles({{3, 4, 5}}));
  return g;
}

}  // namespace perm_oracle
