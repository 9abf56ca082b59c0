#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "sp4fix/catalog.hpp"
#include "sp4fix/groupspec.hpp"
#include "sp4fix/report.hpp"
#include "sp4fix/suites.hpp"

namespace {

int run_verify(const std::string& which, const sp4fix::SuiteOptions& opts,
               const std::string& json_path) {
  std::vector<std::string> names;
  if (which == "all")
    names = sp4fix::suite_names();
  else
    names = {which};
  auto reports = sp4fix::run_suites(names, opts);
  bool all = true;
  for (const auto& r : reports) {
    std::cout << sp4fix::render_text(r) << "\n";
    all = all && r.all_pass();
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << sp4fix::reports_to_json(reports).dump(2) << "\n";
  }
  std::cout << (all ? "ALL SUITES PASS" : "SUITE FAILURES PRESENT") << "\n";
  return all ? 0 : 1;
}

int run_check(const std::string& path, const std::string& json_path) {
  std::ifstream in(path);
  if (!in) throw sp4fix::parse_error("cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  sp4fix::GroupSpecFile file = sp4fix::parse_group_spec_text(text);
  sp4fix::GroupCheckReport rep = sp4fix::check_group(file);
  std::cout << rep.text;
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    out << rep.json.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations in Sp4(Z/ell^n) and the fixed-submodule "
               "lattice criteria"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string which = "all";
  sp4fix::SuiteOptions opts;
  std::string json_path;
  int64_t ell_filter = 0;
  verify->add_option("suite", which,
                     "all|foundations|sylow|jeff-lemma|serre|iwahori|parabolic")
      ->required();
  verify->add_option("--ell", ell_filter, "restrict per-prime claims");
  verify->add_option("--samples", opts.samples, "samples per falsification");
  verify->add_option("--seed", opts.seed, "PRNG seed");
  verify->add_option("--json", json_path, "write a JSON report here");

  auto* check = app.add_subcommand("check", "decide a user-supplied group");
  std::string group_path;
  std::string check_json;
  check->add_option("group", group_path, "GroupSpecFile JSON path")->required();
  check->add_option("--json", check_json, "write a JSON report here");

  auto* catalog = app.add_subcommand("catalog", "list or dump catalog groups");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "list catalog ids");
  std::string dump_id;
  auto* dump = catalog->add_subcommand("dump", "dump one catalog entry");
  dump->add_option("id", dump_id, "catalog id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) {
      if (ell_filter) opts.ell = ell_filter;
      bool known = which == "all";
      for (const auto& n : sp4fix::suite_names()) known = known || n == which;
      if (!known) {
        std::cerr << "unknown suite: " << which << "\n";
        return 2;
      }
      return run_verify(which, opts, json_path);
    }
    if (check->parsed()) return run_check(group_path, check_json);
    if (catalog->parsed()) {
      if (list->parsed()) {
        for (const auto& id : sp4fix::catalog_ids()) std::cout << id << "\n";
        return 0;
      }
      if (dump->parsed()) {
        std::cout << sp4fix::dump_group_spec(sp4fix::catalog_get(dump_id)).dump(2)
                  << "\n";
        return 0;
      }
    }
  } catch (const sp4fix::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
