#include "sp4fix/groupinfo.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace sp4fix {

uint64_t Fingerprint::exponent() const {
  uint64_t e = 1;
  for (auto& [o, c] : order_histogram) e = std::lcm(e, o);
  return e;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "order=" << order << " orders={";
  for (size_t i = 0; i < order_histogram.size(); ++i)
    os << (i ? "," : "") << order_histogram[i].first << ":"
       << order_histogram[i].second;
  os << "} center=" << center_order << " derived=" << derived_order << " ab=(";
  for (size_t i = 0; i < abelian_invariants.size(); ++i)
    os << (i ? "," : "") << abelian_invariants[i];
  os << ")";
  return os.str();
}

uint64_t element_order(const Mat4& g) {
  Mat4 id = Mat4::identity(g.mod);
  Mat4 x = g;
  uint64_t k = 1;
  while (!(x == id)) {
    x = x * g;
    ++k;
    if (k > 100'000'000ull) throw too_large("element order runaway");
  }
  return k;
}

std::vector<Mat4> center_elements(const GroupClosure& G) {
  std::vector<Mat4> out;
  for (const Mat4& z : G.elements) {
    bool central = true;
    for (const Mat4& g : G.generators)
      if (!(z * g == g * z)) {
        central = false;
        break;
      }
    if (central) out.push_back(z);
  }
  return out;
}

GroupClosure derived_subgroup(const GroupClosure& G) {
  std::vector<Mat4> gens;
  std::set<Enc128> seen;
  auto push = [&](const Mat4& m) {
    if (seen.insert(m.encode()).second) gens.push_back(m);
  };
  for (const Mat4& a : G.generators)
    for (const Mat4& b : G.generators)
      push(mat_inverse(a) * mat_inverse(b) * a * b);
  GroupClosure D = closure(gens.empty() ? std::vector<Mat4>{Mat4::identity(G.mod)}
                                        : gens,
                           kDefaultClosureCap);
  // normal closure under conjugation by the generators of G
  for (;;) {
    bool grew = false;
    for (const Mat4& g : G.generators) {
      Mat4 gi = mat_inverse(g);
      for (const Mat4& d : D.elements) {
        Mat4 c = gi * d * g;
        if (!D.contains(c)) {
          push(c);
          grew = true;
        }
      }
      if (grew) break;
    }
    if (!grew) break;
    D = closure(gens, kDefaultClosureCap);
  }
  return D;
}

std::vector<uint64_t> abelian_invariants_from_counts(
    uint64_t order, const std::map<uint64_t, uint64_t>& order_histogram) {
  if (order == 1) return {};
  // N(m) = #{x : x^m = 1} = sum of counts over orders dividing m.
  auto N = [&](uint64_t m) {
    uint64_t s = 0;
    for (auto& [o, c] : order_histogram)
      if (m % o == 0) s += c;
    return s;
  };
  std::vector<uint64_t> primes;
  uint64_t rest = order;
  for (uint64_t p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) primes.push_back(rest);

  // For each prime p: r_j = #(invariant factors with p-valuation >= j).
  std::map<uint64_t, std::vector<uint64_t>> pvals;
  size_t max_factors = 0;
  for (uint64_t p : primes) {
    std::vector<uint64_t> r;
    uint64_t pj = p;
    uint64_t prev = 1;
    for (;;) {
      uint64_t nj = N(pj);
      if (nj == prev) break;
      uint64_t ratio = nj / prev;
      uint64_t cnt = 0;
      while (ratio > 1) {
        ratio /= p;
        ++cnt;
      }
      r.push_back(cnt);
      prev = nj;
      if (pj > order) break;
      pj *= p;
    }
    // r[j-1] = number of factors with valuation >= j; valuation of i-th
    // largest factor = #{j : r[j] >= i+1}.
    pvals[p] = r;
    if (!r.empty()) max_factors = std::max<size_t>(max_factors, r[0]);
  }
  std::vector<uint64_t> factors(max_factors, 1);
  for (auto& [p, r] : pvals)
    for (size_t i = 0; i < max_factors; ++i) {
      uint64_t v = 0;
      for (uint64_t rj : r)
        if (rj >= i + 1) ++v;
      for (uint64_t k = 0; k < v; ++k) factors[i] *= p;
    }
  return factors;
}

namespace {

// Coset decomposition of G by the (normal) subgroup D; returns coset ids per
// element index and the multiplication-ready list of coset representatives.
struct Quotient {
  std::vector<int> coset_of;         // element index -> coset id
  std::vector<Mat4> rep;             // coset id -> representative
  std::vector<uint64_t> coset_order; // order in the quotient group
};

Quotient quotient_by(const GroupClosure& G, const GroupClosure& D) {
  Quotient Q;
  Q.coset_of.assign(G.size(), -1);
  std::unordered_map<Enc128, int, Enc128Hash> enc_to_coset;
  for (size_t i = 0; i < G.size(); ++i) {
    if (Q.coset_of[i] >= 0) continue;
    int id = static_cast<int>(Q.rep.size());
    Q.rep.push_back(G.elements[i]);
    for (const Mat4& d : D.elements) {
      Mat4 x = G.elements[i] * d;
      int idx = G.index_of(x);
      if (idx < 0) throw logic_violation("quotient_by: non-subgroup");
      Q.coset_of[idx] = id;
      enc_to_coset.emplace(x.encode(), id);
    }
  }
  auto coset_id = [&](const Mat4& x) { return enc_to_coset.at(x.encode()); };
  for (size_t c = 0; c < Q.rep.size(); ++c) {
    uint64_t k = 1;
    Mat4 x = Q.rep[c];
    while (coset_id(x) != coset_id(Mat4::identity(G.mod))) {
      x = x * Q.rep[c];
      ++k;
    }
    Q.coset_order.push_back(k);
  }
  return Q;
}

}  // namespace

Fingerprint iso_fingerprint(const GroupClosure& G) {
  if (G.truncated) throw truncated_closure("iso_fingerprint on truncated closure");
  if (G.size() > kGroupInfoCap)
    throw too_large("iso_fingerprint: |G| = " + std::to_string(G.size()));
  Fingerprint fp;
  fp.order = G.size();
  std::map<uint64_t, uint64_t> hist;
  for (const Mat4& g : G.elements) ++hist[element_order(g)];
  fp.order_histogram.assign(hist.begin(), hist.end());
  fp.center_order = center_elements(G).size();
  GroupClosure D = derived_subgroup(G);
  fp.derived_order = D.size();
  Quotient Q = quotient_by(G, D);
  std::map<uint64_t, uint64_t> qhist;
  for (uint64_t o : Q.coset_order) ++qhist[o];
  fp.abelian_invariants =
      abelian_invariants_from_counts(Q.rep.size(), qhist);
  return fp;
}

namespace {

struct IndexSetHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace

std::vector<GroupClosure> subgroup_enumerate(const GroupClosure& G,
                                             std::optional<uint64_t> order_filter) {
  if (G.truncated) throw truncated_closure("subgroup_enumerate on truncated closure");
  if (G.size() > kGroupInfoCap)
    throw too_large("subgroup_enumerate: |G| = " + std::to_string(G.size()));
  if (order_filter && (*order_filter < 1 || G.size() % *order_filter != 0))
    return {};

  struct Node {
    std::vector<uint32_t> members;  // sorted element indices
    std::vector<Mat4> gens;
  };
  auto index_set = [&](const GroupClosure& H) {
    std::vector<uint32_t> v;
    v.reserve(H.size());
    for (const Mat4& h : H.elements) {
      int idx = G.index_of(h);
      if (idx < 0) throw logic_violation("subgroup_enumerate: element escape");
      v.push_back(static_cast<uint32_t>(idx));
    }
    std::sort(v.begin(), v.end());
    return v;
  };

  std::unordered_set<std::vector<uint32_t>, IndexSetHash> seen;
  std::vector<Node> layer;
  std::vector<Node> all;
  {
    Node triv;
    triv.gens = {Mat4::identity(G.mod)};
    GroupClosure T = closure(triv.gens);
    triv.members = index_set(T);
    seen.insert(triv.members);
    layer.push_back(triv);
    all.push_back(triv);
  }
  uint64_t limit = order_filter ? *order_filter : G.size();
  while (!layer.empty()) {
    std::vector<Node> next;
    for (const Node& H : layer) {
      if (H.members.size() >= limit) continue;
      size_t mpos = 0;
      for (uint32_t gi = 0; gi < G.size(); ++gi) {
        while (mpos < H.members.size() && H.members[mpos] < gi) ++mpos;
        if (mpos < H.members.size() && H.members[mpos] == gi) continue;
        std::vector<Mat4> gens = H.gens;
        gens.push_back(G.elements[gi]);
        GroupClosure Hg = closure(gens);
        if (Hg.size() > limit) continue;
        Node N2;
        N2.members = index_set(Hg);
        if (!seen.insert(N2.members).second) continue;
        N2.gens = std::move(gens);
        next.push_back(N2);
        all.push_back(next.back());
      }
    }
    layer = std::move(next);
  }

  std::vector<const Node*> picked;
  for (const Node& n : all)
    if (!order_filter || n.members.size() == *order_filter) picked.push_back(&n);
  std::sort(picked.begin(), picked.end(), [](const Node* a, const Node* b) {
    if (a->members.size() != b->members.size())
      return a->members.size() < b->members.size();
    return a->members < b->members;
  });
  std::vector<GroupClosure> out;
  for (const Node* n : picked) {
    GroupClosure H;
    H.mod = G.mod;
    H.generators = n->gens;
    for (uint32_t i : n->members) H.elements.push_back(G.elements[i]);
    std::sort(H.elements.begin(), H.elements.end(),
              [](const Mat4& x, const Mat4& y) { return x.encode() < y.encode(); });
    out.push_back(std::move(H));
  }
  return out;
}

bool is_normal_in(const GroupClosure& G, const GroupClosure& H) {
  for (const Mat4& g : G.generators) {
    Mat4 gi = mat_inverse(g);
    for (const Mat4& h : H.elements)
      if (!H.contains(gi * h * g)) return false;
  }
  return true;
}

}  // namespace sp4fix
