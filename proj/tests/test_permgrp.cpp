#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "fg/permgrp.hpp"

using namespace fg;
using perm::Perm;
using perm::PermGroup;

namespace {

// Reference element enumeration: plain closure under composition.
std::set<Perm> brute_elements(const PermGroup& g) {
  std::set<Perm> seen{perm::identity(g.degree)};
  std::vector<Perm> work(seen.begin(), seen.end());
  for (size_t head = 0; head < work.size(); ++head)
    for (const Perm& s : g.gens) {
      Perm next = perm::compose(work[head], s);
      if (seen.insert(next).second) work.push_back(next);
    }
  return seen;
}

bool brute_is_block(const PermGroup& g, const std::vector<int>& cell) {
  std::vector<int> c = cell;
  std::sort(c.begin(), c.end());
  std::set<std::vector<int>> images;
  for (const Perm& e : brute_elements(g)) {
    std::vector<int> img;
    for (int x : c) img.push_back(e[x]);
    std::sort(img.begin(), img.end());
    images.insert(img);
  }
  for (const auto& a : images)
    for (const auto& b : images) {
      if (a == b) continue;
      std::vector<int> meet;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(meet));
      if (!meet.empty()) return false;
    }
  return true;
}

PermGroup cyclic(int n) {
  Perm rot(n);
  for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
  return {n, {rot}};
}

PermGroup dihedral(int n) {
  Perm rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return {n, {rot, refl}};
}

PermGroup sym4() {
  return {4, {perm::perm_from_line("1 0 2 3"), perm::perm_from_line("1 2 3 0")}};
}

PermGroup alt4() {
  return {4, {perm::perm_from_line("1 2 0 3"), perm::perm_from_line("1 0 3 2")}};
}

// Imprimitive group preserving {0,1},{2,3},{4,5}: swaps inside cells plus a
// cell 3-cycle.
PermGroup wreath23() {
  return {6, {perm::perm_from_line("1 0 2 3 4 5"), perm::perm_from_line("2 3 4 5 0 1")}};
}

}  // namespace

TEST_CASE("composition, inverse, serialization") {
  Perm a = perm::perm_from_line("1 2 0 3");
  Perm b = perm::perm_from_line("0 1 3 2");
  CHECK(perm::compose(a, b) == perm::perm_from_line("1 3 0 2"));
  CHECK(perm::compose(a, perm::inverse(a)) == perm::identity(4));
  CHECK(perm::perm_to_line(a) == "1 2 0 3");
  CHECK_THROWS_AS(perm::perm_from_line("0 0 1"), fg::error);

  PermGroup g = sym4();
  PermGroup h = perm::group_from_text(perm::group_to_text(g));
  CHECK(h.degree == 4);
  CHECK(h.gens == g.gens);
}

TEST_CASE("order and element enumeration against closure") {
  for (const PermGroup& g :
       {cyclic(12), dihedral(6), sym4(), alt4(), wreath23()}) {
    auto brute = brute_elements(g);
    CHECK(perm::group_order(g) == brute.size());
    auto listed = perm::elements(g);
    CHECK(listed.size() == brute.size());
    std::set<Perm> listed_set(listed.begin(), listed.end());
    CHECK(listed_set == brute);
  }
}

TEST_CASE("orbit-stabilizer across every point") {
  for (const PermGroup& g :
       {cyclic(9), dihedral(7), sym4(), alt4(), wreath23()}) {
    auto brute = brute_elements(g);
    for (int x = 0; x < g.degree; ++x) {
      auto orb = perm::orbit(g, x);
      PermGroup st = perm::point_stabilizer(g, x);
      CHECK(orb.size() * perm::group_order(st) == brute.size());
      std::set<Perm> want;
      for (const Perm& e : brute)
        if (e[x] == x) want.insert(e);
      auto got = perm::elements(st);
      CHECK(std::set<Perm>(got.begin(), got.end()) == want);
    }
  }
}

TEST_CASE("orbit partitions") {
  PermGroup g = wreath23();
  std::vector<int> all{0, 1, 2, 3, 4, 5};
  auto orbs = perm::orbits_on(g, all);
  CHECK(orbs.size() == 1);
  CHECK(perm::is_transitive_on(g, all));

  PermGroup st = perm::point_stabilizer(g, 0);
  auto sub = perm::orbits_on(st, {1, 2, 3, 4, 5});
  // the stabilizer of 0 fixes its cell mate 1 and moves the other cells
  CHECK(sub[0] == std::vector<int>{1});
}

TEST_CASE("set stabilizer against brute force") {
  struct Case {
    PermGroup g;
    std::vector<int> cell;
  };
  for (const auto& c : {Case{sym4(), {0, 1}},
                        Case{dihedral(6), {0, 3}},
                        Case{wreath23(), {0, 1}},
                        Case{cyclic(12), {0, 6}}}) {
    PermGroup st = perm::set_stabilizer(c.g, c.cell);
    std::set<Perm> want;
    std::vector<int> sorted = c.cell;
    std::sort(sorted.begin(), sorted.end());
    for (const Perm& e : brute_elements(c.g)) {
      std::vector<int> img;
      for (int x : sorted) img.push_back(e[x]);
      std::sort(img.begin(), img.end());
      if (img == sorted) want.insert(e);
    }
    auto got = perm::elements(st);
    CHECK(std::set<Perm>(got.begin(), got.end()) == want);
  }
}

TEST_CASE("block test against brute force") {
  std::mt19937 rng(99);
  for (const PermGroup& g :
       {cyclic(12), dihedral(6), sym4(), wreath23(), cyclic(15)}) {
    for (int trial = 0; trial < 50; ++trial) {
      std::uniform_int_distribution<int> size_pick(2, g.degree / 2);
      int k = size_pick(rng);
      std::vector<int> pts(g.degree);
      for (int i = 0; i < g.degree; ++i) pts[i] = i;
      std::shuffle(pts.begin(), pts.end(), rng);
      std::vector<int> cell(pts.begin(), pts.begin() + k);
      std::sort(cell.begin(), cell.end());
      CHECK(perm::is_block(g, cell) == brute_is_block(g, cell));
    }
  }
  CHECK(perm::is_block(cyclic(12), {0, 6}));
  CHECK(perm::is_block(cyclic(12), {0, 4, 8}));
  CHECK(perm::is_block(wreath23(), {0, 1}));
  CHECK_FALSE(perm::is_block(wreath23(), {0, 2, 4}));
}

TEST_CASE("minimal blocks") {
  PermGroup g = cyclic(12);
  CHECK(perm::minimal_block(g, {0, 6}) == std::vector<int>{0, 6});
  CHECK(perm::minimal_block(g, {0, 4}) == std::vector<int>{0, 4, 8});
  CHECK(perm::minimal_block(g, {0, 1}) ==
        std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  CHECK(perm::minimal_block(wreath23(), {0, 1}) == std::vector<int>{0, 1});
}

TEST_CASE("blocks through a point, both search strategies") {
  // 11 stabilizer orbits: subset-sum enumeration
  auto via_sizes = perm::blocks_containing(cyclic(12), 0);
  std::vector<std::vector<int>> expect12 = {
      {0, 6}, {0, 4, 8}, {0, 3, 6, 9}, {0, 2, 4, 6, 8, 10}};
  CHECK(via_sizes == expect12);

  // 23 singleton orbits: minimal-block lattice
  auto via_lattice = perm::blocks_containing(cyclic(24), 0);
  std::vector<std::vector<int>> expect24;
  for (int d : {12, 8, 6, 4, 3, 2}) {
    std::vector<int> b;
    for (int x = 0; x < 24; x += d) b.push_back(x);
    expect24.push_back(b);
  }
  std::sort(expect24.begin(), expect24.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  CHECK(via_lattice == expect24);

  // nontrivial stabilizer: dihedral on 12 has the same blocks as cyclic
  CHECK(perm::blocks_containing(dihedral(12), 0) == expect12);

  // 2-transitive: no nontrivial blocks
  CHECK(perm::blocks_containing(sym4(), 0).empty());
  CHECK(perm::blocks_containing(wreath23(), 0) ==
        std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("normalizer and conjugacy against brute force") {
  PermGroup g = sym4();
  PermGroup sub{4, {perm::perm_from_line("1 0 2 3")}};
  PermGroup nz = perm::normalizer(g, sub);
  std::set<Perm> want;
  auto subel = brute_elements(sub);
  for (const Perm& e : brute_elements(g)) {
    Perm ei = perm::inverse(e);
    bool ok = true;
    for (const Perm& s : sub.gens)
      if (!subel.count(perm::compose(perm::compose(ei, s), e))) ok = false;
    if (ok) want.insert(e);
  }
  auto got = perm::elements(nz);
  CHECK(std::set<Perm>(got.begin(), got.end()) == want);
  CHECK(perm::group_order(nz) == 4);

  // the Klein four-group is normal in S4
  PermGroup v4{4, {perm::perm_from_line("1 0 3 2"), perm::perm_from_line("2 3 0 1")}};
  CHECK(perm::group_order(perm::normalizer(g, v4)) == 24);

  PermGroup s01{4, {perm::perm_from_line("1 0 2 3")}};
  PermGroup s23{4, {perm::perm_from_line("0 1 3 2")}};
  PermGroup dbl{4, {perm::perm_from_line("1 0 3 2")}};
  CHECK(perm::is_conjugate(g, s01, s23));
  CHECK_FALSE(perm::is_conjugate(g, s01, dbl));
}

TEST_CASE("pair transporter") {
  PermGroup c12 = cyclic(12);
  Perm t = perm::transporter_pair(c12, 0, 1, 3, 4);
  CHECK(t[0] == 3);
  CHECK(t[1] == 4);

  PermGroup g = sym4();
  Perm u = perm::transporter_pair(g, 0, 1, 2, 3);
  CHECK(u[0] == 2);
  CHECK(u[1] == 3);
  CHECK(brute_elements(g).count(u) == 1);

  CHECK_THROWS_AS(perm::transporter_pair(wreath23(), 0, 1, 0, 2), fg::error);
}

TEST_CASE("determinism") {
  PermGroup g = dihedral(12);
  PermGroup a = perm::point_stabilizer(g, 0);
  PermGroup b = perm::point_stabilizer(g, 0);
  CHECK(a.gens == b.gens);
  CHECK(perm::blocks_containing(g, 0) == perm::blocks_containing(g, 0));
}

TEST_CASE("scale bounds raise budget errors") {
  PermGroup big = cyclic(5000);
  CHECK_THROWS_AS(perm::group_order(big), fg::budget_error);
}
