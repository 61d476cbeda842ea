#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fg/designs.hpp"

using namespace fg;
using fam::ActionGroup;

namespace {

// the unique admissible orbit; fails the test if the count is not one
des::FlagOrbit the_admissible(const std::vector<des::FlagOrbit>& orbits) {
  const des::FlagOrbit* found = nullptr;
  int count = 0;
  for (const auto& o : orbits)
    if (o.admissible()) {
      ++count;
      found = &o;
    }
  REQUIRE(count == 1);
  return *found;
}

}  // namespace

TEST_CASE("plane designs from line blocks") {
  auto ag = fam::build_psl(3, 2);
  // the line through the first two points
  auto D = des::design_from_block(ag, {1, 2});
  CHECK(D.u == 7);
  CHECK(D.k == 3);
  CHECK(D.lambda == 1);
  CHECK(D.replication == 3);
  CHECK(D.blocks.size() == 7);
  CHECK(des::predict_lambda(ag, {1, 2}) == 1);

  auto orbits = des::flag_orbits(ag, D);
  CHECK(orbits.size() == 1);
  auto omega = the_admissible(orbits);
  CHECK(omega.flags.size() == 21);
  CHECK(omega.rho == 3);

  auto G = des::flag_graph(ag, D, omega);
  CHECK(G.n == 21);
  CHECK(G.valency == 2);
  CHECK(G.component_sizes == std::vector<int>(7, 3));
  CHECK(G.edges.size() == 21);

  auto S = des::spread_check(ag, G);
  CHECK(S.u == 7);
  CHECK(S.v == 3);
  CHECK(S.r == 2);
  CHECK(S.b == 6);

  auto C = des::coset_cross_check(ag, D, omega, G);
  CHECK(C.omega == 21);
  CHECK(C.components == 7);
}

TEST_CASE("bigger plane") {
  auto ag = fam::build_psl(3, 3);
  auto D = des::design_from_block(ag, {1, 2, 3});
  CHECK(D.u == 13);
  CHECK(D.k == 4);
  CHECK(D.lambda == 1);
  auto omega = the_admissible(des::flag_orbits(ag, D));
  auto G = des::flag_graph(ag, D, omega);
  CHECK(G.n == 52);
  CHECK(G.valency == 3);
  CHECK(G.component_sizes == std::vector<int>(13, 4));
}

TEST_CASE("suzuki pipeline at q = 8") {
  auto ag = fam::build_suzuki(8);
  auto blk = fam::canonical_block(ag, "");
  CHECK(des::predict_lambda(ag, blk) == 9);

  auto D = des::design_from_block(ag, blk);
  CHECK(D.u == 65);
  CHECK(D.k == 9);
  CHECK(D.lambda == 9);
  CHECK(D.blocks.size() == 520);

  auto orbits = des::flag_orbits(ag, D);
  CHECK(orbits.size() == 2);
  auto omega = the_admissible(orbits);
  CHECK(omega.flags.size() == 520);
  CHECK(omega.rho == 8);

  // the fast path lands on the same orbit
  auto direct = des::flag_orbit_of(ag, D, omega.rep);
  CHECK(direct.flags == omega.flags);
  CHECK(direct.admissible());

  auto G = des::flag_graph(ag, D, omega);
  CHECK(G.n == 520);
  CHECK(G.valency == 8);
  CHECK(G.component_sizes == std::vector<int>{520});

  auto S = des::spread_check(ag, G);
  CHECK(S.v == 8);
  CHECK(S.b == 64);

  auto C = des::coset_cross_check(ag, D, omega, G);
  CHECK(C.t_order == 56);
  CHECK(C.omega == 520);
  CHECK(C.components == 1);
}

TEST_CASE("ree line cases") {
  auto ag = fam::build_ree(3);

  auto bi = fam::canonical_block(ag, "i");
  auto Di = des::design_from_block(ag, bi);
  CHECK(Di.u == 28);
  CHECK(Di.k == 4);
  CHECK(Di.lambda == 1);
  CHECK(des::predict_lambda(ag, bi) == 1);
  auto oi = the_admissible(des::flag_orbits(ag, Di));
  auto Gi = des::flag_graph(ag, Di, oi);
  CHECK(Gi.n == 252);
  CHECK(Gi.component_sizes == std::vector<int>(63, 4));

  auto bii = fam::canonical_block(ag, "ii");
  auto Dii = des::design_from_block(ag, bii);
  CHECK(Dii.k == 4);
  CHECK(Dii.lambda == 4);
  auto oii = the_admissible(des::flag_orbits(ag, Dii));
  CHECK(oii.flags.size() == 252);
  auto Gii = des::flag_graph(ag, Dii, oii);
  CHECK(Gii.valency == 3);
  CHECK(Gii.component_sizes == std::vector<int>(3, 84));
  auto Cii = des::coset_cross_check(ag, Dii, oii, Gii);
  CHECK(Cii.components == 3);
  // the edge closure is an index-3 subgroup
  CHECK(perm::group_order(ag.group) / Cii.components == 504);
}

TEST_CASE("scalar block on seven points") {
  fam::GammaLSpec full;
  auto ag = fam::build_agammal1(7, full);
  std::vector<int> P{1, 2, 4};
  auto st = perm::point_stabilizer(ag.group, ag.sigma);
  CHECK(perm::is_block(st, P));

  auto D = des::design_from_block(ag, P);
  CHECK(D.u == 7);
  CHECK(D.k == 4);
  CHECK(D.lambda == 4);
  auto omega = the_admissible(des::flag_orbits(ag, D));
  CHECK(omega.flags.size() == 14);
  auto G = des::flag_graph(ag, D, omega);
  CHECK(G.valency == 3);
  CHECK(G.component_sizes == std::vector<int>{14});
  des::spread_check(ag, G);
}

TEST_CASE("two element scalar block on five points") {
  fam::GammaLSpec linear;
  linear.kind = fam::GammaLSpec::Kind::linear;
  auto ag = fam::build_agammal1(5, linear);
  std::vector<int> P{1, 4};
  auto D = des::design_from_block(ag, P);
  CHECK(D.lambda == 3);
  CHECK(des::predict_lambda(ag, P) == 3);
  auto omega = the_admissible(des::flag_orbits(ag, D));
  auto G = des::flag_graph(ag, D, omega);
  CHECK(G.n == 10);
  CHECK(G.valency == 2);
  CHECK(G.component_sizes == std::vector<int>(2, 5));
}

TEST_CASE("rejects and errors") {
  auto ag = fam::build_psl(3, 2);
  CHECK_THROWS_AS(des::design_from_block(ag, {ag.sigma}), error);
  auto D = des::design_from_block(ag, {1, 2});
  CHECK_THROWS_AS(des::flag_orbit_of(ag, D, des::Flag{6, 0}), error);
}

TEST_CASE("dichotomy of the pair count") {
  // over several small designs: lambda is 1 or the line size, the orbit
  // count of admissible flags is at most one, and lambda 1 forces clique
  // components
  struct Probe {
    ActionGroup ag;
    std::vector<int> P;
  };
  fam::GammaLSpec full;
  std::vector<Probe> probes;
  probes.push_back({fam::build_psl(3, 2), {1, 2}});
  probes.push_back({fam::build_agammal1(9, full), {1, 2}});
  probes.push_back({fam::build_agammal1(7, full), {1, 6}});
  for (const auto& pr : probes) {
    auto st = perm::point_stabilizer(pr.ag.group, pr.ag.sigma);
    REQUIRE(perm::is_block(st, pr.P));
    auto D = des::design_from_block(pr.ag, pr.P);
    CHECK((D.lambda == 1 || D.lambda == D.k));
    CHECK(des::predict_lambda(pr.ag, pr.P) == D.lambda);
    auto orbits = des::flag_orbits(pr.ag, D);
    int adm = 0;
    for (const auto& o : orbits)
      if (o.admissible()) ++adm;
    CHECK(adm <= 1);
    if (adm == 1) {
      auto G = des::flag_graph(pr.ag, D, the_admissible(orbits));
      if (D.lambda == 1)
        for (int sz : G.component_sizes) CHECK(sz == D.k);
      des::spread_check(pr.ag, G);
    }
  }
}
