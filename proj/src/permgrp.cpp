#include "fg/permgrp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fg {
namespace perm {

Perm identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[a[i]] = int(i);
  return c;
}

bool is_identity(const Perm& a) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != int(i)) return false;
  return true;
}

std::string perm_to_line(const Perm& a) {
  std::string s;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(a[i]);
  }
  return s;
}

Perm perm_from_line(const std::string& line) {
  std::istringstream in(line);
  Perm p;
  int x;
  while (in >> x) p.push_back(x);
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= int(p.size()) || seen[v])
      throw error("perm_from_line: not a permutation: " + line);
    seen[v] = 1;
  }
  return p;
}

std::string group_to_text(const PermGroup& g) {
  std::string s;
  for (const Perm& p : g.gens) {
    s += perm_to_line(p);
    s += '\n';
  }
  return s;
}

PermGroup group_from_text(const std::string& text) {
  PermGroup g;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Perm p = perm_from_line(line);
    if (g.degree == 0) g.degree = int(p.size());
    if (int(p.size()) != g.degree)
      throw error("group_from_text: inconsistent degrees");
    g.gens.push_back(std::move(p));
  }
  if (g.degree == 0) throw error("group_from_text: no generators");
  return g;
}

namespace {

// Levels of the chain share this orbit computation: breadth-first from
// pt, transversal entry per reached point.
void level_orbit(int degree, const std::vector<Perm>& gens, int pt,
                 std::vector<Perm>& reps, std::vector<int>& orb) {
  reps.assign(degree, {});
  orb.clear();
  reps[pt] = identity(degree);
  orb.push_back(pt);
  for (size_t head = 0; head < orb.size(); ++head) {
    int a = orb[head];
    for (const Perm& s : gens) {
      int b = s[a];
      if (reps[b].empty()) {
        reps[b] = compose(reps[a], s);
        orb.push_back(b);
      }
    }
  }
}

int least_moved(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != int(i)) return int(i);
  return -1;
}

// Reduce g through transversals starting at the given level; returns the
// residue and the level where reduction stopped.
std::pair<Perm, size_t> strip(const Chain& c, Perm g, size_t from) {
  for (size_t l = from; l < c.base.size(); ++l) {
    int delta = g[c.base[l]];
    if (c.reps[l][delta].empty()) return {std::move(g), l};
    g = compose(g, inverse(c.reps[l][delta]));
  }
  return {std::move(g), c.base.size()};
}

}  // namespace

u64 Chain::order() const {
  u64 n = 1;
  for (const auto& o : orbit) n *= o.size();
  return n;
}

bool Chain::contains(const Perm& g) const {
  if (int(g.size()) != degree) return false;
  auto [res, lvl] = strip(*this, g, 0);
  return lvl == base.size() && is_identity(res);
}

Chain stabilizer_chain(const PermGroup& g) {
  Chain c;
  c.degree = g.degree;

  auto new_level = [&](int beta) {
    c.base.push_back(beta);
    c.level_gens.push_back({});
    c.reps.push_back({});
    c.orbit.push_back({});
  };
  auto refresh = [&](size_t l) {
    level_orbit(c.degree, c.level_gens[l], c.base[l], c.reps[l], c.orbit[l]);
  };

  for (const Perm& s : g.gens) {
    if (is_identity(s)) continue;
    if (c.base.empty()) new_level(least_moved(s));
    c.level_gens[0].push_back(s);
  }
  if (c.base.empty()) return c;
  refresh(0);

  // Verify levels bottom-up; every failing Schreier generator is added as
  // a strong generator and its level is revisited.
  size_t lvl = c.base.size() - 1;
  while (true) {
    refresh(lvl);
    bool clean = true;
    for (size_t oi = 0; oi < c.orbit[lvl].size() && clean; ++oi) {
      int delta = c.orbit[lvl][oi];
      for (const Perm& s : c.level_gens[lvl]) {
        Perm sg = compose(c.reps[lvl][delta], s);
        int image = sg[c.base[lvl]];
        sg = compose(sg, inverse(c.reps[lvl][image]));
        if (is_identity(sg)) continue;
        auto [res, at] = strip(c, std::move(sg), lvl + 1);
        if (is_identity(res)) continue;
        if (at == c.base.size()) new_level(least_moved(res));
        for (size_t l2 = lvl + 1; l2 <= at; ++l2)
          c.level_gens[l2].push_back(res);
        for (size_t l2 = lvl + 1; l2 <= at; ++l2) refresh(l2);
        lvl = at;
        clean = false;
        break;
      }
    }
    if (!clean) continue;
    if (lvl == 0) break;
    --lvl;
  }
  return c;
}

u64 group_order(const PermGroup& g) {
  if (g.degree > 4096) throw budget_error("group_order: degree exceeds 4096");
  return stabilizer_chain(g).order();
}

std::vector<Perm> elements(const PermGroup& g, u64 cap) {
  Chain c = stabilizer_chain(g);
  if (c.order() > cap) throw budget_error("elements: order exceeds cap");
  std::vector<Perm> out;
  out.reserve(c.order());
  for_each_element(c, [&](const Perm& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<int> orbit(const PermGroup& g, int pt) {
  std::vector<char> seen(g.degree, 0);
  std::vector<int> orb{pt};
  seen[pt] = 1;
  for (size_t head = 0; head < orb.size(); ++head)
    for (const Perm& s : g.gens) {
      int b = s[orb[head]];
      if (!seen[b]) {
        seen[b] = 1;
        orb.push_back(b);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<int>> orbits_on(const PermGroup& g,
                                        const std::vector<int>& domain) {
  std::vector<char> done(g.degree, 0);
  std::vector<std::vector<int>> out;
  for (int pt : domain) {
    if (done[pt]) continue;
    auto orb = orbit(g, pt);
    for (int x : orb) done[x] = 1;
    out.push_back(std::move(orb));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return out;
}

bool is_transitive_on(const PermGroup& g, const std::vector<int>& domain) {
  if (domain.empty()) return true;
  auto orb = orbit(g, domain[0]);
  return std::includes(orb.begin(), orb.end(), domain.begin(), domain.end());
}

PermGroup point_stabilizer(const PermGroup& g, int pt) {
  std::vector<Perm> reps;
  std::vector<int> orb;
  level_orbit(g.degree, g.gens, pt, reps, orb);
  if (orb.size() == 1) return g;

  Chain whole = stabilizer_chain(g);
  u64 target = whole.order() / orb.size();

  IncrementalGroup acc(g.degree);
  for (int a : orb) {
    for (const Perm& s : g.gens) {
      if (acc.order() == target) return acc.g;
      Perm sg = compose(compose(reps[a], s), inverse(reps[s[a]]));
      if (!is_identity(sg)) acc.add_if_new(sg);
    }
  }
  if (acc.order() != target) throw error("point_stabilizer: order mismatch");
  return acc.g;
}

PermGroup set_stabilizer(const PermGroup& g, const std::vector<int>& cell) {
  Chain whole = stabilizer_chain(g);
  if (whole.order() > 100000000ull)
    throw budget_error("set_stabilizer: group order exceeds 1e8");

  std::vector<int> start = cell;
  std::sort(start.begin(), start.end());

  // breadth-first over images of the cell, parent pointers for reps
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> sets{start};
  std::vector<std::pair<int, int>> parent{{-1, -1}};  // (set, generator)
  index[start] = 0;
  for (size_t head = 0; head < sets.size(); ++head) {
    for (size_t si = 0; si < g.gens.size(); ++si) {
      std::vector<int> img;
      img.reserve(sets[head].size());
      for (int x : sets[head]) img.push_back(g.gens[si][x]);
      std::sort(img.begin(), img.end());
      if (index.emplace(img, int(sets.size())).second) {
        sets.push_back(std::move(img));
        parent.push_back({int(head), int(si)});
      }
    }
  }

  std::vector<Perm> reps(sets.size());
  reps[0] = identity(g.degree);
  for (size_t i = 1; i < sets.size(); ++i)
    reps[i] = compose(reps[parent[i].first], g.gens[parent[i].second]);

  u64 target = whole.order() / sets.size();
  IncrementalGroup acc(g.degree);
  for (size_t i = 0; i < sets.size(); ++i) {
    for (size_t si = 0; si < g.gens.size(); ++si) {
      if (acc.order() == target) return acc.g;
      std::vector<int> img;
      img.reserve(sets[i].size());
      for (int x : sets[i]) img.push_back(g.gens[si][x]);
      std::sort(img.begin(), img.end());
      Perm sg = compose(compose(reps[i], g.gens[si]), inverse(reps[index[img]]));
      if (!is_identity(sg)) acc.add_if_new(sg);
    }
  }
  if (acc.order() != target) throw error("set_stabilizer: order mismatch");
  return acc.g;
}

bool is_block(const PermGroup& g, const std::vector<int>& cell) {
  std::vector<int> start = cell;
  std::sort(start.begin(), start.end());
  std::vector<int> cover(g.degree, -1);
  for (int x : start) cover[x] = 0;

  std::set<std::vector<int>> seen{start};
  std::vector<std::vector<int>> queue{start};
  int next_id = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const Perm& s : g.gens) {
      std::vector<int> img;
      img.reserve(queue[head].size());
      for (int x : queue[head]) img.push_back(s[x]);
      std::sort(img.begin(), img.end());
      if (seen.count(img)) continue;
      // a new image must avoid every covered point; any overlap with an
      // earlier image that is not set equality refutes blockness, and set
      // equality is impossible here since equal sets are caught above
      int covered = 0;
      for (int x : img)
        if (cover[x] >= 0) ++covered;
      if (covered > 0) return false;
      for (int x : img) cover[x] = next_id;
      ++next_id;
      seen.insert(img);
      queue.push_back(std::move(img));
    }
  }
  return true;
}

std::vector<int> minimal_block(const PermGroup& g,
                               const std::vector<int>& seed) {
  UnionFind uf(g.degree);
  std::vector<std::pair<int, int>> work;
  for (size_t i = 1; i < seed.size(); ++i)
    if (uf.unite(seed[0], seed[i])) work.push_back({seed[0], seed[i]});
  for (size_t head = 0; head < work.size(); ++head) {
    auto [a, b] = work[head];
    for (const Perm& s : g.gens) {
      int ra = uf.find(s[a]), rb = uf.find(s[b]);
      if (ra != rb) {
        uf.unite(ra, rb);
        work.push_back({ra, rb});
      }
    }
  }
  std::vector<int> out;
  int root = uf.find(seed[0]);
  for (int x = 0; x < g.degree; ++x)
    if (uf.find(x) == root) out.push_back(x);
  return out;
}

std::vector<std::vector<int>> blocks_containing(const PermGroup& stab,
                                                int tau) {
  std::vector<int> domain = orbit(stab, tau);
  int n = int(domain.size());
  if (n <= 2) return {};

  std::vector<std::vector<int>> found;
  PermGroup fix = point_stabilizer(stab, tau);
  std::vector<int> rest;
  for (int x : domain)
    if (x != tau) rest.push_back(x);
  std::vector<std::vector<int>> orbs = orbits_on(fix, rest);

  if (orbs.size() <= 20) {
    // every block through tau is a union of {tau} and stabilizer orbits
    // whose total size divides |domain|
    std::vector<int> sizes;
    for (const auto& o : orbs) sizes.push_back(int(o.size()));
    std::vector<int> suffix(orbs.size() + 1, 0);
    for (int i = int(orbs.size()) - 1; i >= 0; --i)
      suffix[i] = suffix[i + 1] + sizes[i];

    u64 candidates = 0;
    std::vector<int> chosen;
    auto dfs = [&](auto&& self, int idx, int total) -> void {
      if (idx == int(orbs.size())) {
        int k = total + 1;
        if (k <= 1 || k >= n || n % k != 0) return;
        if (++candidates > (1u << 20))
          throw budget_error("blocks_containing: candidate count exceeds 2^20");
        std::vector<int> cell{tau};
        for (int oi : chosen)
          cell.insert(cell.end(), orbs[oi].begin(), orbs[oi].end());
        std::sort(cell.begin(), cell.end());
        if (is_block(stab, cell)) found.push_back(std::move(cell));
        return;
      }
      if (total + 1 >= n) return;
      self(self, idx + 1, total);
      chosen.push_back(idx);
      self(self, idx + 1, total + sizes[idx]);
      chosen.pop_back();
    };
    dfs(dfs, 0, 0);
  } else {
    // minimal blocks through tau, then closure under joins
    std::set<std::vector<int>> pool;
    for (int d : rest) {
      std::vector<int> b = minimal_block(stab, {tau, d});
      if (int(b.size()) < n) pool.insert(std::move(b));
    }
    std::vector<std::vector<int>> work(pool.begin(), pool.end());
    for (size_t i = 0; i < work.size(); ++i)
      for (size_t j = 0; j < i; ++j) {
        std::vector<int> seed;
        std::set_union(work[i].begin(), work[i].end(), work[j].begin(),
                       work[j].end(), std::back_inserter(seed));
        std::vector<int> b = minimal_block(stab, seed);
        if (int(b.size()) < n && pool.insert(b).second) work.push_back(b);
        if (work.size() > (1u << 20))
          throw budget_error("blocks_containing: block lattice too large");
      }
    for (const auto& b : work)
      if (is_block(stab, b)) found.push_back(b);
  }

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

namespace {

std::set<Perm> element_set(const PermGroup& g, u64 cap) {
  auto v = elements(g, cap);
  return std::set<Perm>(v.begin(), v.end());
}

}  // namespace

PermGroup normalizer(const PermGroup& big, const PermGroup& sub) {
  Chain c = stabilizer_chain(big);
  if (c.order() > 10000000ull)
    throw budget_error("normalizer: group order exceeds 1e7");
  std::set<Perm> subel = element_set(sub, 1u << 20);

  IncrementalGroup acc(big.degree);
  for_each_element(c, [&](const Perm& g) {
    Perm gi = inverse(g);
    for (const Perm& s : sub.gens)
      if (!subel.count(compose(compose(gi, s), g))) return true;
    acc.add_if_new(g);
    return true;
  });
  return acc.g;
}

bool is_conjugate(const PermGroup& big, const PermGroup& a,
                  const PermGroup& b) {
  Chain c = stabilizer_chain(big);
  if (c.order() > 10000000ull)
    throw budget_error("is_conjugate: group order exceeds 1e7");
  if (group_order(a) != group_order(b)) return false;
  std::set<Perm> bel = element_set(b, 1u << 20);
  bool found = false;
  for_each_element(c, [&](const Perm& g) {
    Perm gi = inverse(g);
    for (const Perm& s : a.gens)
      if (!bel.count(compose(compose(gi, s), g))) return true;
    found = true;
    return false;
  });
  return found;
}

Perm transporter_pair(const PermGroup& g, int a, int b, int c, int d) {
  // breadth-first over images of the ordered pair (a, b)
  std::map<std::pair<int, int>, std::pair<int, int>> parent;  // pair -> (idx, gen)
  std::vector<std::pair<int, int>> queue{{a, b}};
  parent[{a, b}] = {-1, -1};
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [x, y] = queue[head];
    if (x == c && y == d) {
      Perm out = identity(g.degree);
      std::pair<int, int> cur{x, y};
      std::vector<int> path;
      while (parent[cur].first >= 0) {
        path.push_back(parent[cur].second);
        cur = queue[parent[cur].first];
      }
      for (size_t i = path.size(); i-- > 0;) out = compose(out, g.gens[path[i]]);
      return out;
    }
    for (size_t si = 0; si < g.gens.size(); ++si) {
      std::pair<int, int> img{g.gens[si][x], g.gens[si][y]};
      if (parent.emplace(img, std::make_pair(int(head), int(si))).second)
        queue.push_back(img);
    }
  }
  throw error("transporter_pair: pairs are not in the same orbit");
}

}  // namespace perm
}  // namespace fg
