#include "sp4fix/catalog.hpp"

#include <algorithm>

#include "sp4fix/coords.hpp"
#include "sp4fix/lattice.hpp"
#include "sp4fix/sampling.hpp"

namespace sp4fix {

CosetClosure NamedGroup::close(size_t rep_cap) const {
  return coset_closure(generators, kernel_seed, rep_cap);
}

std::array<Mat4, 4> sylow_generators(Modulus m) {
  Mat4 x1 = Mat4::from_rows(
      m, {{{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, -1, 1}}});
  Mat4 x2 = Mat4::from_rows(
      m, {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}});
  Mat4 x3 = Mat4::from_rows(
      m, {{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}}});
  Mat4 x4 = Mat4::from_rows(
      m, {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}}});
  return {x1, x2, x3, x4};
}

SerreElements serre_elements() {
  Modulus m4(2, 2);
  auto xs = sylow_generators(m4);
  SerreElements e;
  e.g1 = xs[0];
  e.g2 = xs[1];
  e.g3 = Mat4::from_rows(
      m4, {{{1, 0, 0, 2}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
  e.A = e.g1 * e.g2;
  e.B = e.g1 * e.g3;
  e.C = e.g2 * e.g3;
  return e;
}

NamedGroup serre_group() {
  Modulus m4(2, 2);
  SerreElements e = serre_elements();
  // x3 lifts into the kernel of alpha + gamma + f once its f-value is 0.
  Mat4 x3_lift = with_f_value(sp_lift(sylow_generators(Modulus(2, 1))[2], m4), 0);
  NamedGroup g;
  g.id = "serre";
  g.description = "kernel of alpha+gamma+f inside S_2 mod 4";
  g.mod = m4;
  g.generators = {e.A, e.B, e.C, x3_lift};
  g.kernel_seed = sp4_basis_ker_f(Modulus(2, 1));
  g.expected_image_order = 16;
  g.expected_image_type = "C2xD4";
  return g;
}

std::vector<GroupClosure> sylow2_d4_subgroups() {
  Modulus m2(2, 1);
  auto xs = sylow_generators(m2);
  GroupClosure s2 = closure({xs[0], xs[1], xs[2], xs[3]});
  auto subs = subgroup_enumerate(s2, 8);
  const Fingerprint& d4 = known_fingerprints().at("D4");
  std::vector<GroupClosure> out;
  for (auto& H : subs)
    if (iso_fingerprint(H) == d4) out.push_back(H);
  return out;
}

namespace {

NamedGroup sylow2_from_d4(const GroupClosure& D, const std::string& id, bool full) {
  Modulus m4(2, 2);
  // generator pair: an order-4 element x and an order-2 element y outside <x>
  std::optional<Mat4> x, y;
  for (const Mat4& h : D.elements)
    if (element_order(h) == 4) {
      x = h;
      break;
    }
  if (!x) throw bad_choice("subgroup is not D4: no order-4 element");
  GroupClosure cx = closure({*x});
  for (const Mat4& h : D.elements)
    if (element_order(h) == 2 && !cx.contains(h)) {
      y = h;
      break;
    }
  if (!y) throw bad_choice("subgroup is not D4: no reflection");
  NamedGroup g;
  g.id = id;
  g.description = full ? "counterexample with mod-2 image all of S2-bar"
                       : "counterexample with mod-2 image a D4 subgroup";
  g.mod = m4;
  g.generators = {with_f_value(sp_lift(*x, m4), 0), with_f_value(sp_lift(*y, m4), 1)};
  if (full) {
    Mat4 x4 = sylow_generators(Modulus(2, 1))[3];
    g.generators.push_back(with_f_value(sp_lift(x4, m4), 0));
  }
  g.kernel_seed = sp4_basis_ker_f(Modulus(2, 1));
  g.expected_image_order = full ? 16 : 8;
  g.expected_image_type = full ? "C2xD4" : "D4";
  return g;
}

}  // namespace

NamedGroup sylow2_counterexample(int d4_choice) {
  auto d4s = sylow2_d4_subgroups();
  if (d4_choice < 0 || d4_choice >= static_cast<int>(d4s.size()))
    throw bad_choice("sylow2 D4 choice out of range [0," +
                     std::to_string(d4s.size() - 1) + "]");
  return sylow2_from_d4(d4s[d4_choice], "sylow2:D4:" + std::to_string(d4_choice),
                        false);
}

NamedGroup sylow2_full() {
  auto d4s = sylow2_d4_subgroups();
  return sylow2_from_d4(d4s[0], "sylow2:full", true);
}

namespace {

Mat4 default_iwahori_seed(int64_t ell, Modulus m2) {
  // epsilon = 2, all off-diagonal coordinates zero
  Mat4 gbar = mat_bbar(Modulus(ell, 1), 0, 0, 0, 0, 2);
  return with_f_value(sp_lift(gbar, m2), 0);
}

void validate_iwahori_seed(const Mat4& seed, Modulus m2) {
  if (seed.mod != m2) throw seed_invalid("seed modulus mismatch");
  if (!is_sp(seed)) throw seed_invalid("seed is not symplectic");
  MembershipClass c = membership_class(seed);
  if (c != MembershipClass::B) throw seed_invalid("seed must lie in B minus S");
  Mat4 id = Mat4::identity(m2);
  if (mat_det(seed - id).v % m2.q != 0)
    throw seed_invalid("seed must satisfy det(g-1) = 0 mod ell^2");
}

}  // namespace

NamedGroup iwahori_family_alpha0(int64_t ell, std::optional<Mat4> g_seed) {
  if (ell != 3 && ell != 5) throw seed_invalid("iwahori families need ell in {3,5}");
  Modulus m2(ell, 2), m1(ell, 1);
  Mat4 seed = g_seed ? *g_seed : default_iwahori_seed(ell, m2);
  validate_iwahori_seed(seed, m2);
  int64_t a = coord_alpha(seed).v;
  int64_t e = coord_epsilon(seed).v;
  // condition on (beta, gamma, delta) of s in ker alpha:
  //   2a(1-e) beta + a^2 gamma + (1-e)^2 delta = 0
  int64_t cb = ((2 * a * (1 - e)) % ell + ell) % ell;
  int64_t cg = (a * a) % ell;
  int64_t cd = (((1 - e) * (1 - e)) % ell + ell) % ell;
  std::vector<std::array<int64_t, 3>> basis;
  {
    EchelonFl sol(ell, 3);
    for (int64_t b = 0; b < ell && sol.dim() < 3; ++b)
      for (int64_t g2 = 0; g2 < ell && sol.dim() < 3; ++g2)
        for (int64_t d = 0; d < ell && sol.dim() < 3; ++d)
          if ((cb * b + cg * g2 + cd * d) % ell == 0) sol.add({b, g2, d});
    for (const auto& r : sol.rows) basis.push_back({r[0], r[1], r[2]});
  }
  NamedGroup g;
  g.id = "iwahori:alpha0:l" + std::to_string(ell);
  g.description = "Iwahori counterexample, alpha trivial on the S-part";
  g.mod = m2;
  g.generators = {seed};
  for (const auto& [b, c, d] : basis)
    g.generators.push_back(with_f_value(sp_lift(mat_sbar(m1, 0, b, c, d), m2), 0));
  g.kernel_seed = sp4_basis(m1);
  g.expected_image_order = static_cast<uint64_t>(ell) * ell * (ell - 1);
  g.expected_image_type = ell == 3 ? "C3xS3" : "C5xF20";
  return g;
}

NamedGroup iwahori_family_gamma0(int64_t ell, std::optional<Mat4> g_seed) {
  if (ell != 3 && ell != 5) throw seed_invalid("iwahori families need ell in {3,5}");
  Modulus m2(ell, 2), m1(ell, 1);
  Mat4 seed = g_seed ? *g_seed : default_iwahori_seed(ell, m2);
  validate_iwahori_seed(seed, m2);
  int64_t ag = coord_alpha(seed).v;
  int64_t bg = coord_beta(seed).v;
  int64_t gg = coord_gamma(seed).v;
  int64_t e = coord_epsilon(seed).v;
  int64_t ei = inv(Residue(e, m1)).v;
  auto md = [&](int64_t x) { return ((x % ell) + ell) % ell; };
  auto cond = [&](int64_t as, int64_t bs, int64_t ds) {
    int64_t t = md(md(gg * as) * as) + md(2 * md(bg * md(1 - e) + ag * gg) * as) +
                md(2 * md(ag * md(ei - 1)) * bs) + md(md(md(ei - 1) * as) * bs) +
                md(md(e + ei - 2) * ds);
    return md(t) == 0;
  };
  // pick the first order-ell cyclic subgroup of ker gamma whose elements all
  // satisfy the condition
  std::optional<Mat4> s_gen;
  for (int64_t as = 0; as < ell && !s_gen; ++as)
    for (int64_t bs = 0; bs < ell && !s_gen; ++bs)
      for (int64_t ds = 0; ds < ell && !s_gen; ++ds) {
        if (as == 0 && bs == 0 && ds == 0) continue;
        Mat4 s = mat_sbar(m1, as, bs, 0, ds);
        GroupClosure cyc = closure({s});
        if (cyc.size() != static_cast<size_t>(ell)) continue;
        bool ok = true;
        for (const Mat4& h : cyc.elements)
          if (!cond(coord_alpha(h).v, coord_beta(h).v, coord_delta(h).v)) {
            ok = false;
            break;
          }
        if (ok) s_gen = s;
      }
  if (!s_gen) throw seed_invalid("no admissible order-ell subgroup of ker gamma");
  NamedGroup g;
  g.id = "iwahori:gamma0:l" + std::to_string(ell);
  g.description = "Iwahori counterexample, gamma trivial on the S-part";
  g.mod = m2;
  g.generators = {seed, with_f_value(sp_lift(*s_gen, m2), 0)};
  g.kernel_seed = sp4_basis(m1);
  g.expected_image_order = static_cast<uint64_t>(ell) * (ell - 1);
  g.expected_image_type = ell == 3 ? "S3" : "F20";
  return g;
}

NamedGroup parabolic2_family(bool case_i) {
  Modulus m2(2, 2), m1(2, 1);
  Mat2 r(m1, {0, 1, 1, 1});  // order 3
  Mat2 t(m1, {0, 1, 1, 0});  // order 2
  auto xs = sylow_generators(m1);
  NamedGroup g;
  g.mod = m2;
  if (case_i) {
    // block-diagonal S3 times <x4>; f is the sign character of the S3 part
    // (the only f-assignment whose group lies in Fix(4): any lift with
    // f(x4) != 0 already fails the determinant condition)
    g.id = "parabolic2:i";
    g.description = "parabolic counterexample with image S3 x C2";
    g.generators = {with_f_value(sp_lift(embed_sl2(r), m2), 0),
                    with_f_value(sp_lift(embed_sl2(t), m2), 1),
                    with_f_value(sp_lift(xs[3], m2), 0)};
    g.kernel_seed = sp4_basis_ker_f(m1);
    g.expected_image_order = 12;
    g.expected_image_type = "S3xC2";
  } else {
    // the f-twisted S3: odd permutations carry x4; full Gamma(2) kernel
    g.id = "parabolic2:ii";
    g.description = "parabolic counterexample, full preimage of twisted S3";
    g.generators = {sp_lift(embed_sl2(r), m2), sp_lift(xs[3] * embed_sl2(t), m2)};
    g.kernel_seed = sp4_basis(m1);
    g.expected_image_order = 6;
    g.expected_image_type = "S3";
  }
  return g;
}

const std::map<std::string, Fingerprint>& known_fingerprints() {
  static const std::map<std::string, Fingerprint> table = [] {
    auto mk = [](uint64_t order,
                 std::vector<std::pair<uint64_t, uint64_t>> hist,
                 uint64_t center, std::vector<uint64_t> ab, uint64_t derived) {
      Fingerprint f;
      f.order = order;
      f.order_histogram = std::move(hist);
      f.center_order = center;
      f.abelian_invariants = std::move(ab);
      f.derived_order = derived;
      return f;
    };
    std::map<std::string, Fingerprint> m;
    m["D4"] = mk(8, {{1, 1}, {2, 5}, {4, 2}}, 2, {2, 2}, 2);
    m["C2xD4"] = mk(16, {{1, 1}, {2, 11}, {4, 4}}, 4, {2, 2, 2}, 2);
    m["S3"] = mk(6, {{1, 1}, {2, 3}, {3, 2}}, 1, {2}, 3);
    m["C6"] = mk(6, {{1, 1}, {2, 1}, {3, 2}, {6, 2}}, 6, {6}, 1);
    m["S3xC2"] = mk(12, {{1, 1}, {2, 7}, {3, 2}, {6, 2}}, 2, {2, 2}, 3);
    m["Q8"] = mk(8, {{1, 1}, {2, 1}, {4, 6}}, 2, {2, 2}, 2);
    m["SL2F3"] = mk(24, {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}, 2, {3}, 8);
    m["C3wrC3"] = mk(81, {{1, 1}, {3, 44}, {9, 36}}, 3, {3, 3}, 9);
    m["C3xS3"] = mk(18, {{1, 1}, {2, 3}, {3, 8}, {6, 6}}, 3, {6}, 3);
    m["F20"] = mk(20, {{1, 1}, {2, 5}, {4, 10}, {5, 4}}, 1, {4}, 5);
    m["C5xF20"] = mk(100, {{1, 1}, {2, 5}, {4, 10}, {5, 24}, {10, 20}, {20, 40}},
                     5, {20}, 5);
    m["A4"] = mk(12, {{1, 1}, {2, 3}, {3, 8}}, 1, {3}, 4);
    return m;
  }();
  return table;
}

std::string fingerprint_type_name(const Fingerprint& f) {
  for (const auto& [k, v] : known_fingerprints())
    if (v == f) return k;
  return "";
}

std::vector<std::string> catalog_ids() {
  return {"serre",          "sylow2:D4:0",      "sylow2:D4:1",
          "sylow2:D4:2",    "sylow2:D4:3",      "sylow2:full",
          "iwahori:alpha0:l3", "iwahori:alpha0:l5", "iwahori:gamma0:l3",
          "iwahori:gamma0:l5", "parabolic2:i",  "parabolic2:ii"};
}

NamedGroup catalog_get(const std::string& id) {
  if (id == "serre") return serre_group();
  if (id == "sylow2:full") return sylow2_full();
  if (id.rfind("sylow2:D4:", 0) == 0)
    return sylow2_counterexample(std::stoi(id.substr(10)));
  if (id == "iwahori:alpha0:l3") return iwahori_family_alpha0(3);
  if (id == "iwahori:alpha0:l5") return iwahori_family_alpha0(5);
  if (id == "iwahori:gamma0:l3") return iwahori_family_gamma0(3);
  if (id == "iwahori:gamma0:l5") return iwahori_family_gamma0(5);
  if (id == "parabolic2:i") return parabolic2_family(true);
  if (id == "parabolic2:ii") return parabolic2_family(false);
  throw bad_choice("unknown catalog id: " + id);
}

}  // namespace sp4fix
