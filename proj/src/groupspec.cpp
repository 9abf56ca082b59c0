#include "sp4fix/groupspec.hpp"

#include <sstream>

#include "sp4fix/coords.hpp"

namespace sp4fix {

GroupSpecFile parse_group_spec(const nlohmann::json& j) {
  GroupSpecFile f;
  try {
    int64_t ell = j.at("ell").get<int64_t>();
    int n = j.at("n").get<int>();
    if (n != 2)
      throw parse_error("group spec needs n = 2 (mod-ell^2 semantics)");
    f.mod = Modulus(ell, n);
    const auto& gens = j.at("generators");
    if (!gens.is_array() || gens.empty())
      throw parse_error("generators must be a nonempty array");
    for (size_t k = 0; k < gens.size(); ++k) {
      const auto& m = gens[k];
      if (!m.is_array() || m.size() != 4)
        throw parse_error("generator " + std::to_string(k) + " is not 4x4");
      Mat4 g(f.mod);
      for (int i = 0; i < 4; ++i) {
        if (!m[i].is_array() || m[i].size() != 4)
          throw parse_error("generator " + std::to_string(k) + " is not 4x4");
        for (int c = 0; c < 4; ++c) g.set(i, c, m[i][c].get<int64_t>());
      }
      if (!is_sp(g))
        throw non_symplectic_generator("generator " + std::to_string(k) +
                                       " is not symplectic mod " + f.mod.str());
      f.generators.push_back(g);
    }
    if (j.contains("augment")) {
      for (const auto& a : j.at("augment")) {
        std::string s = a.get<std::string>();
        if (s == "gamma")
          f.augment_gamma = true;
        else if (s == "gamma_ker_f")
          f.augment_gamma_ker_f = true;
        else
          throw parse_error("unknown augment flag: " + s);
      }
    }
    if (j.contains("cap")) f.cap = j.at("cap").get<size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed group spec: ") + e.what());
  }
  return f;
}

GroupSpecFile parse_group_spec_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  return parse_group_spec(j);
}

nlohmann::ordered_json dump_group_spec(const NamedGroup& g) {
  nlohmann::ordered_json j;
  j["id"] = g.id;
  j["description"] = g.description;
  j["ell"] = g.mod.ell;
  j["n"] = g.mod.n;
  auto gens = nlohmann::ordered_json::array();
  for (const Mat4& m : g.generators) {
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < 4; ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int c = 0; c < 4; ++c) row.push_back(m.at(i, c));
      rows.push_back(row);
    }
    gens.push_back(rows);
  }
  j["generators"] = gens;
  // the catalog kernels are exactly the two standard augmentations
  auto aug = nlohmann::ordered_json::array();
  Modulus m1(g.mod.ell, 1);
  if (g.kernel_seed.size() == sp4_basis(m1).size())
    aug.push_back("gamma");
  else if (g.kernel_seed.size() == sp4_basis_ker_f(m1).size())
    aug.push_back("gamma_ker_f");
  j["augment"] = aug;
  if (g.expected_image_order) j["expected_image_order"] = g.expected_image_order;
  if (!g.expected_image_type.empty())
    j["expected_image_type"] = g.expected_image_type;
  j["expected_in_fix"] = g.expect_in_fix;
  j["expected_counterexample"] = g.expect_counterexample;
  return j;
}

namespace {

nlohmann::ordered_json mat_json(const Mat4& m) {
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int c = 0; c < 4; ++c) row.push_back(m.at(i, c));
    rows.push_back(row);
  }
  return rows;
}

std::string subspace_str(const SubspaceFl& V) {
  std::ostringstream os;
  os << "dim" << V.dim() << "<";
  for (size_t i = 0; i < V.rows.size(); ++i) {
    os << (i ? "," : "") << "(";
    for (int j = 0; j < 4; ++j) os << (j ? "," : "") << V.rows[i][j];
    os << ")";
  }
  os << ">";
  return os.str();
}

}  // namespace

GroupCheckReport check_group(const GroupSpecFile& file) {
  Modulus m1(file.mod.ell, 1);
  std::vector<Mat4> kernel;
  if (file.augment_gamma)
    kernel = sp4_basis(m1);
  else if (file.augment_gamma_ker_f)
    kernel = sp4_basis_ker_f(m1);

  CosetClosure C = coset_closure(file.generators, kernel, file.cap);

  GroupCheckReport out;
  nlohmann::ordered_json j;
  std::ostringstream os;
  j["ell"] = file.mod.ell;
  j["order"] = C.order_str();
  j["truncated"] = C.truncated;
  os << "group mod " << file.mod.ell << "^2, order " << C.order_str()
     << (C.truncated ? " (TRUNCATED)" : "") << "\n";

  auto gens_json = nlohmann::ordered_json::array();
  os << "generators:\n";
  for (size_t i = 0; i < file.generators.size(); ++i) {
    const Mat4& g = file.generators[i];
    nlohmann::ordered_json gj;
    gj["matrix"] = mat_json(g);
    MembershipClass cls = membership_class(g);
    gj["class"] = membership_name(cls);
    os << "  gen " << i << ": class " << membership_name(cls);
    if (cls != MembershipClass::None) {
      CoordProfile p = coords(g);
      gj["coords"] = {{"alpha", p.alpha.v},   {"beta", p.beta.v},
                      {"gamma", p.gamma.v},   {"delta", p.delta.v},
                      {"epsilon", p.epsilon.v}, {"f", p.f.v},
                      {"alpha_prime", p.alpha_prime.v},
                      {"beta_prime", p.beta_prime.v}};
      os << "  alpha=" << p.alpha.v << " beta=" << p.beta.v
         << " gamma=" << p.gamma.v << " delta=" << p.delta.v
         << " eps=" << p.epsilon.v << " f=" << p.f.v;
    }
    os << "\n";
    gens_json.push_back(gj);
  }
  j["generators"] = gens_json;

  for (int n = 1; n <= 2; ++n) {
    FixVerdict fv = in_fix(C, n);
    j["in_fix_n" + std::to_string(n)] = fv.in_fix;
    os << "in Fix(" << file.mod.ell << "^" << n << "): "
       << (fv.in_fix ? "yes" : "no") << "\n";
    if (!fv.in_fix && fv.witness) {
      j["fix_witness_n" + std::to_string(n)] = mat_json(*fv.witness);
      if (n == 2) os << "  witness:\n" << fv.witness->str() << "\n";
    }
  }

  GroupClosure img = C.mod_ell_image();
  auto spaces = invariant_subspaces_mod_ell(img);
  auto sp_json = nlohmann::ordered_json::array();
  os << "stable subspaces between ellT and T (" << spaces.size() << "):\n";
  for (const auto& V : spaces) {
    sp_json.push_back(subspace_str(V));
    os << "  " << subspace_str(V);
    // inclusion edges for the diagram
    for (const auto& W : spaces)
      if (W.dim() == V.dim() + 1 && W.contains_space(V))
        os << "  <  " << subspace_str(W);
    os << "\n";
  }
  j["stable_subspaces"] = sp_json;

  FixVerdict fv2 = in_fix(C, 2);
  if (!fv2.in_fix) {
    j["verdict"] = "not_in_fix";
    os << "verdict: not in Fix(ell^2), no counterexample decision\n";
  } else {
    CEVerdict v = is_counterexample(C);
    j["verdict"] = ce_status_name(v.status);
    os << "verdict: " << ce_status_name(v.status) << "\n";
    if (v.status == CEStatus::NotCounterexample && v.pair) {
      std::string pw = subspace_str(v.pair->V) + " / " + subspace_str(v.pair->Vp) +
                       (v.pair->quotient == 0 ? " (quotient L/L')"
                                              : " (quotient L'/ellL)");
      j["trivial_pair"] = pw;
      os << "  trivially-acted pair: " << pw << "\n";
    }
    if (v.status == CEStatus::PreconditionsUnmet) {
      j["reason"] = v.reason;
      os << "  unmet: " << v.reason << "\n";
    }
  }
  out.text = os.str();
  out.json = j;
  return out;
}

}  // namespace sp4fix
