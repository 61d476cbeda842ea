#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fg/gf.hpp"

namespace fg {
namespace perm {

using u64 = std::uint64_t;

// A permutation of 0..n-1 as its image table; x^g = g[x].
using Perm = std::vector<int>;

Perm identity(int degree);
// Apply a first, then b.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
bool is_identity(const Perm& a);

std::string perm_to_line(const Perm& a);
Perm perm_from_line(const std::string& line);

struct PermGroup {
  int degree = 0;
  std::vector<Perm> gens;
};

std::string group_to_text(const PermGroup& g);
PermGroup group_from_text(const std::string& text);

// Stabilizer chain with explicit transversals (deterministic construction:
// base points are least moved points, orbits explored breadth-first).
struct Chain {
  int degree = 0;
  std::vector<int> base;
  std::vector<std::vector<Perm>> level_gens;
  // reps[l][pt] carries base[l] to pt; empty when pt is outside the orbit
  std::vector<std::vector<Perm>> reps;
  std::vector<std::vector<int>> orbit;  // BFS order

  u64 order() const;
  bool contains(const Perm& g) const;
};

Chain stabilizer_chain(const PermGroup& g);
u64 group_order(const PermGroup& g);

// All group elements in a fixed order; error beyond cap.
std::vector<Perm> elements(const PermGroup& g, u64 cap = 1u << 20);

// Streams every element without materializing the list; stops early when
// fn returns false.  Enumeration order is deterministic.
template <typename F>
void for_each_element(const Chain& c, F&& fn) {
  Perm id(c.degree);
  for (int i = 0; i < c.degree; ++i) id[i] = i;
  bool stop = false;
  auto rec = [&](auto&& self, int lvl, const Perm& suffix) -> void {
    if (stop) return;
    if (lvl < 0) {
      if (!fn(suffix)) stop = true;
      return;
    }
    for (int pt : c.orbit[lvl]) {
      if (stop) return;
      self(self, lvl - 1, compose(suffix, c.reps[lvl][pt]));
    }
  };
  rec(rec, int(c.base.size()) - 1, id);
}

std::vector<int> orbit(const PermGroup& g, int pt);
// Orbits intersecting the domain, each sorted, ordered by least element.
std::vector<std::vector<int>> orbits_on(const PermGroup& g,
                                        const std::vector<int>& domain);
bool is_transitive_on(const PermGroup& g, const std::vector<int>& domain);

PermGroup point_stabilizer(const PermGroup& g, int pt);
PermGroup set_stabilizer(const PermGroup& g, const std::vector<int>& cell);

// Whether the images of the cell under the group are pairwise equal or
// disjoint.
bool is_block(const PermGroup& g, const std::vector<int>& cell);

// Smallest block of the action containing the seed points.
std::vector<int> minimal_block(const PermGroup& g,
                               const std::vector<int>& seed);

// All blocks B with tau in B and 1 < |B| < |orbit(tau)| of a group
// transitive on orbit(tau), sorted by size then lexicographically.
std::vector<std::vector<int>> blocks_containing(const PermGroup& stab,
                                                int tau);

PermGroup normalizer(const PermGroup& big, const PermGroup& sub);
bool is_conjugate(const PermGroup& big, const PermGroup& a,
                  const PermGroup& b);

// Some g in the group with a^g = c and b^g = d; error when none exists.
Perm transporter_pair(const PermGroup& g, int a, int b, int c, int d);

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Grows a generating set one permutation at a time, keeping only
// permutations outside the group generated so far.
struct IncrementalGroup {
  PermGroup g;
  Chain chain;
  explicit IncrementalGroup(int degree) {
    g.degree = degree;
    chain = stabilizer_chain(g);
  }
  bool add_if_new(const Perm& p) {
    if (chain.contains(p)) return false;
    g.gens.push_back(p);
    chain = stabilizer_chain(g);
    return true;
  }
  u64 order() const { return chain.order(); }
};

}  // namespace perm
}  // namespace fg
