// Command line front end: builds one of the two-transitive families, runs
// the stabilizer block search, assembles the design and its flag graph,
// and reports the result as a single JSON object on stdout.
//
// Exit codes: 0 on success, 1 on a failed check or bad input value,
// 2 on a command line usage error, 3 when an instance is over budget.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fg/acceptance.hpp"
#include "fg/agammal.hpp"
#include "fg/designs.hpp"
#include "fg/families.hpp"
#include "fg/gf.hpp"
#include "fg/permgrp.hpp"
#include "fg/report.hpp"
#include "fg/survey.hpp"

namespace {

struct ConstructArgs {
  std::string family;
  int q = 0;
  int d = 3;   // projective dimension parameter
  int n = 0;   // affine dimension; 0 picks the family default
  std::string case_id;
  int s = 0;
  int m = 1;
  int ell = 0;
  bool custom_stab = false;
  int block_index = 0;
  std::string out_prefix;
};

fg::fam::ActionGroup build_for(const ConstructArgs& a) {
  if (a.family == "psl") return fg::fam::build_psl(a.d, a.q);
  if (a.family == "agammal1") {
    fg::fam::GammaLSpec spec;
    if (a.custom_stab) {
      spec.kind = fg::fam::GammaLSpec::Kind::custom;
      spec.s = a.s > 0 ? a.s : 1;
      spec.m = a.m;
      spec.ell = a.ell;
    }
    return fg::fam::build_agammal1(a.q, spec);
  }
  if (a.family == "affine_sl")
    return fg::fam::build_affine_matrix("sl", a.n > 0 ? a.n : 2, a.q);
  if (a.family == "affine_sp")
    return fg::fam::build_affine_matrix("sp", a.n > 0 ? a.n : 4, a.q);
  if (a.family == "psu3") return fg::fam::build_psu3(a.q);
  if (a.family == "suzuki") return fg::fam::build_suzuki(a.q);
  if (a.family == "ree") return fg::fam::build_ree(a.q);
  throw fg::error("unknown family " + a.family);
}

std::vector<int> pick_block(const fg::fam::ActionGroup& ag,
                            const ConstructArgs& a) {
  if (a.family == "suzuki" || a.family == "psu3")
    return fg::fam::canonical_block(ag, "");
  if (a.family == "ree") {
    if (a.case_id.empty())
      throw fg::error("the ree family needs --case i, ii, iii or iv");
    return fg::fam::canonical_block(ag, a.case_id);
  }
  auto stab = fg::perm::point_stabilizer(ag.group, ag.sigma);
  auto blocks = fg::perm::blocks_containing(stab, ag.tau);
  if (blocks.empty()) throw fg::error("the point stabilizer has no blocks");
  if (a.block_index < 0 || a.block_index >= int(blocks.size()))
    throw fg::error("block index out of range; there are " +
                    std::to_string(blocks.size()) + " blocks");
  return blocks[a.block_index];
}

// the unique admissible orbit; falls back to chasing the base flag when
// the design has too many flags to split them all
fg::des::FlagOrbit admissible_orbit(const fg::fam::ActionGroup& ag,
                                    const fg::des::Design& D,
                                    const std::vector<int>& partial) {
  try {
    auto orbits = fg::des::flag_orbits(ag, D);
    const fg::des::FlagOrbit* found = nullptr;
    for (const auto& o : orbits)
      if (o.admissible()) {
        if (found) throw fg::error("two admissible flag orbits");
        found = &o;
      }
    if (!found) throw fg::error("no admissible flag orbit");
    return *found;
  } catch (const fg::budget_error&) {
    std::vector<int> L = partial;
    L.push_back(ag.sigma);
    std::sort(L.begin(), L.end());
    auto it = std::lower_bound(D.blocks.begin(), D.blocks.end(), L);
    if (it == D.blocks.end() || *it != L)
      throw fg::error("base line missing from the design");
    fg::des::Flag f;
    f.point = ag.sigma;
    f.block = int(it - D.blocks.begin());
    auto omega = fg::des::flag_orbit_of(ag, D, f);
    if (!omega.admissible())
      throw fg::error("the base flag orbit is not admissible");
    return omega;
  }
}

int cmd_construct(const ConstructArgs& a) {
  auto ag = build_for(a);
  auto partial = pick_block(ag, a);
  auto D = fg::des::design_from_block(ag, partial);
  auto omega = admissible_orbit(ag, D, partial);
  auto G = fg::des::flag_graph(ag, D, omega);
  auto S = fg::des::spread_check(ag, G);
  auto sum = fg::rep::summarize(ag, a.case_id, D, omega, G, S);
  std::cout << fg::rep::to_json(sum) << "\n";

  if (!a.out_prefix.empty()) {
    std::ofstream dot(a.out_prefix + ".dot");
    if (!dot) throw fg::error("cannot write " + a.out_prefix + ".dot");
    fg::rep::write_dot(dot, ag, G);
    std::ofstream edges(a.out_prefix + ".edges");
    if (!edges) throw fg::error("cannot write " + a.out_prefix + ".edges");
    fg::rep::write_edge_list(edges, G);
  }
  return 0;
}

int cmd_analyze(int q, bool have_shape, int s, int m, int ell, bool check) {
  auto all = fg::agl::enumerate_structures(q);
  std::vector<fg::agl::Structure> picked;
  for (const auto& st : all)
    if (!have_shape || (st.s == s && st.m == m && st.ell == ell))
      picked.push_back(st);
  if (picked.empty()) throw fg::error("no such stabilizer shape");

  auto F = fg::gf::make_field(picked[0].p, picked[0].d);
  nlohmann::json out;
  out["q"] = q;
  out["structures"] = nlohmann::json::array();
  for (const auto& st : picked) {
    nlohmann::json js;
    js["s"] = st.s;
    js["m"] = st.m;
    js["ell"] = st.ell;
    js["stab_order"] = st.stab_order();
    js["blocks"] = nlohmann::json::array();
    auto census = fg::agl::census_blocks(F, st);

    if (check) {
      auto ag = fg::fam::build_agammal1(q, st.spec());
      auto stab = fg::perm::point_stabilizer(ag.group, ag.sigma);
      if (census != fg::perm::blocks_containing(stab, ag.tau))
        throw fg::error("census disagrees with the block search");
      for (const auto& P : census) {
        auto pred = fg::agl::predict(F, st, P);
        auto D = fg::des::design_from_block(ag, P);
        if (D.lambda != pred.lambda)
          throw fg::error("pair count prediction failed");
        auto omega = admissible_orbit(ag, D, P);
        auto G = fg::des::flag_graph(ag, D, omega);
        if (fg::gf::i64(G.component_sizes.size()) != pred.components)
          throw fg::error("component prediction failed");
        auto C = fg::des::coset_cross_check(ag, D, omega, G);
        if (C.t_order != pred.flag_stab_order)
          throw fg::error("flag stabilizer prediction failed");
        fg::des::spread_check(ag, G);
      }
    }

    for (const auto& P : census) {
      auto pred = fg::agl::predict(F, st, P);
      nlohmann::json jb;
      jb["points"] = P;
      jb["size"] = P.size();
      jb["lambda"] = pred.lambda;
      jb["subfield"] = pred.subfield;
      jb["components"] = pred.components;
      jb["flag_stab_order"] = pred.flag_stab_order;
      jb["connected"] = pred.connected_rule;
      js["blocks"].push_back(jb);
    }
    out["structures"].push_back(js);
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_survey(int p, const std::string& expected) {
  auto r = fg::survey::run_survey(p);
  nlohmann::json out;
  out["p"] = p;
  out["classes"] = nlohmann::json::array();
  for (const auto& c : r.classes) {
    nlohmann::json jc;
    jc["order"] = c.order;
    jc["blocks"] = c.blocks.size();
    jc["rows"] = nlohmann::json::array();
    for (const auto& row : c.rows)
      jc["rows"].push_back({row.line_size, row.lambda, row.count});
    out["classes"].push_back(jc);
  }
  std::cout << out.dump() << "\n";

  if (!expected.empty()) {
    std::ifstream in(expected);
    if (!in) throw fg::error("cannot open " + expected);
    if (fg::survey::format_rows(r) != fg::survey::read_rows(in))
      throw fg::error("table differs from " + expected);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flag graphs of two-transitive block designs"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct =
      app.add_subcommand("construct", "build one design and its flag graph");
  construct->add_option("--family", ca.family, "group family")
      ->required()
      ->check(CLI::IsMember({"psl", "agammal1", "affine_sl", "affine_sp",
                             "psu3", "suzuki", "ree"}));
  construct->add_option("--q", ca.q, "field size")->required();
  construct->add_option("--d", ca.d, "projective dimension (psl)");
  construct->add_option("--n", ca.n, "affine dimension (affine families)");
  construct->add_option("--case", ca.case_id, "ree block case: i..iv");
  auto* sopt = construct->add_option("--s", ca.s, "twist exponent divisor");
  auto* mopt = construct->add_option("--m", ca.m, "scalar subgroup index");
  auto* lopt = construct->add_option("--ell", ca.ell, "twist shift");
  construct->add_option("--block-index", ca.block_index,
                        "which stabilizer block to take");
  construct->add_option("--out", ca.out_prefix,
                        "write <prefix>.dot and <prefix>.edges");

  auto* verify = app.add_subcommand("verify-all", "run the gate criteria");
  bool stretch = false;
  verify->add_flag("--stretch", stretch, "include the wide instances");

  int aq = 0, as = 0, am = 1, aell = 0;
  bool acheck = false;
  auto* analyze = app.add_subcommand(
      "analyze-agammal", "census and predictions for the semilinear family");
  analyze->add_option("--q", aq, "field size")->required();
  auto* asopt = analyze->add_option("--s", as, "twist exponent divisor");
  analyze->add_option("--m", am, "scalar subgroup index");
  analyze->add_option("--ell", aell, "twist shift");
  analyze->add_flag("--check", acheck, "build the group and verify");

  int sp = 0;
  std::string expected;
  auto* surveycmd = app.add_subcommand(
      "survey", "two-dimensional classes with small normal cores");
  surveycmd->add_option("--p", sp, "odd prime")->required();
  surveycmd->add_option("--expected", expected, "stored table to compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) {
      ca.custom_stab = sopt->count() > 0 || mopt->count() > 0 ||
                       lopt->count() > 0;
      return cmd_construct(ca);
    }
    if (verify->parsed())
      return fg::acc::run_all(stretch, std::cout) ? 0 : 1;
    if (analyze->parsed())
      return cmd_analyze(aq, asopt->count() > 0, as, am, aell, acheck);
    if (surveycmd->parsed()) return cmd_survey(sp, expected);
  } catch (const fg::budget_error& e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
