#include "fg/designs.hpp"

#include <algorithm>
#include <map>

namespace fg {
namespace des {

namespace {

using fam::ActionGroup;

std::vector<int> apply_set(const perm::Perm& g, const std::vector<int>& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int x : s) out.push_back(g[x]);
  std::sort(out.begin(), out.end());
  return out;
}

// flag ids are block * k + slot into the sorted block
struct FlagAction {
  const ActionGroup& ag;
  const Design& D;
  int k;
  std::vector<std::vector<int>> bimg;  // [gen][block] -> image block

  FlagAction(const ActionGroup& a, const Design& d) : ag(a), D(d), k(d.k) {
    std::map<std::vector<int>, int> idx;
    for (size_t i = 0; i < D.blocks.size(); ++i) idx[D.blocks[i]] = int(i);
    bimg.resize(ag.group.gens.size());
    for (size_t gi = 0; gi < ag.group.gens.size(); ++gi) {
      bimg[gi].resize(D.blocks.size());
      for (size_t b = 0; b < D.blocks.size(); ++b) {
        auto it = idx.find(apply_set(ag.group.gens[gi], D.blocks[b]));
        if (it == idx.end()) throw error("block orbit is not closed");
        bimg[gi][b] = it->second;
      }
    }
  }

  int total() const { return int(D.blocks.size()) * k; }

  Flag decode(int fid) const { return {D.blocks[fid / k][fid % k], fid / k}; }

  int apply(size_t gi, int fid) const {
    int b = fid / k, slot = fid % k;
    int p = ag.group.gens[gi][D.blocks[b][slot]];
    int nb = bimg[gi][b];
    const auto& blk = D.blocks[nb];
    auto it = std::lower_bound(blk.begin(), blk.end(), p);
    if (it == blk.end() || *it != p) throw error("flag image lost its point");
    return nb * k + int(it - blk.begin());
  }
};

FlagOrbit analyze_orbit(const ActionGroup& ag, const Design& D,
                        std::vector<int> flags) {
  std::sort(flags.begin(), flags.end());
  FlagOrbit O;
  O.flags = std::move(flags);
  int u = ag.group.degree;
  if (int(O.flags.size()) % u != 0)
    throw error("flag orbit size is not divisible by the point count");
  O.rho = int(O.flags.size()) / u;
  O.doubly_covered = O.rho >= 2;

  std::vector<int> lines_here;  // blocks of the orbit flags at sigma
  for (int fid : O.flags)
    if (D.blocks[fid / D.k][fid % D.k] == ag.sigma)
      lines_here.push_back(fid / D.k);
  if (int(lines_here.size()) != O.rho)
    throw error("flag orbit is not point-uniform");
  O.rep = {ag.sigma, lines_here.front()};

  O.clean_intersections = true;
  for (size_t i = 0; i + 1 < lines_here.size() && O.clean_intersections; ++i)
    for (size_t j = i + 1; j < lines_here.size(); ++j) {
      const auto& A = D.blocks[lines_here[i]];
      const auto& B = D.blocks[lines_here[j]];
      std::vector<int> common;
      std::set_intersection(A.begin(), A.end(), B.begin(), B.end(),
                            std::back_inserter(common));
      if (common != std::vector<int>{ag.sigma}) {
        O.clean_intersections = false;
        break;
      }
    }

  const auto& L = D.blocks[O.rep.block];
  auto gl = perm::set_stabilizer(ag.group, L);
  auto t = perm::point_stabilizer(gl, ag.sigma);
  std::vector<int> rest;
  for (int x : L)
    if (x != ag.sigma) rest.push_back(x);
  O.stabilizer_transitive = perm::is_transitive_on(t, rest);
  return O;
}

}  // namespace

Design design_from_block(const ActionGroup& ag,
                         const std::vector<int>& partial) {
  const auto& G = ag.group;
  int n = G.degree;
  if (n > 2048) throw budget_error("design_from_block: degree over 2048");
  std::vector<int> L = partial;
  for (int x : L)
    if (x == ag.sigma)
      throw error("design_from_block: block contains the base point");
  L.push_back(ag.sigma);
  std::sort(L.begin(), L.end());
  if (std::unique(L.begin(), L.end()) != L.end())
    throw error("design_from_block: repeated points");

  std::map<std::vector<int>, int> idx;
  std::vector<std::vector<int>> blocks{L};
  idx[L] = 0;
  for (size_t head = 0; head < blocks.size(); ++head) {
    if (blocks.size() > (1u << 17))
      throw budget_error("design_from_block: block orbit too large");
    for (const auto& g : G.gens) {
      auto img = apply_set(g, blocks[head]);
      if (idx.emplace(img, int(blocks.size())).second) blocks.push_back(img);
    }
  }
  std::sort(blocks.begin(), blocks.end());

  Design D;
  D.u = n;
  D.k = int(L.size());
  D.blocks = std::move(blocks);

  std::vector<int> per_point(n, 0);
  std::vector<int> pair_count(size_t(n) * n, 0);
  for (const auto& blk : D.blocks) {
    for (int x : blk) ++per_point[x];
    for (size_t i = 0; i + 1 < blk.size(); ++i)
      for (size_t j = i + 1; j < blk.size(); ++j)
        ++pair_count[size_t(blk[i]) * n + blk[j]];
  }
  D.replication = per_point[0];
  for (int c : per_point)
    if (c != D.replication) throw error("line count varies across points");
  D.lambda = pair_count[1];  // pair (0, 1)
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (pair_count[size_t(a) * n + b] != D.lambda)
        throw error("pair count varies across point pairs");
  return D;
}

int predict_lambda(const ActionGroup& ag, const std::vector<int>& partial) {
  std::vector<int> L = partial;
  L.push_back(ag.sigma);
  std::sort(L.begin(), L.end());
  auto gl = perm::set_stabilizer(ag.group, L);
  auto orb = perm::orbit(gl, ag.sigma);
  return orb.size() == 1 ? int(L.size()) : 1;
}

std::vector<FlagOrbit> flag_orbits(const ActionGroup& ag, const Design& D) {
  FlagAction FA(ag, D);
  int total = FA.total();
  if (total > (1 << 20)) throw budget_error("flag_orbits: too many flags");
  perm::UnionFind uf(total);
  for (size_t gi = 0; gi < ag.group.gens.size(); ++gi)
    for (int fid = 0; fid < total; ++fid) uf.unite(fid, FA.apply(gi, fid));

  std::map<int, std::vector<int>> buckets;
  for (int fid = 0; fid < total; ++fid) buckets[uf.find(fid)].push_back(fid);
  std::vector<FlagOrbit> out;
  for (auto& [root, flags] : buckets)
    out.push_back(analyze_orbit(ag, D, std::move(flags)));
  std::sort(out.begin(), out.end(), [](const FlagOrbit& a, const FlagOrbit& b) {
    return a.flags.front() < b.flags.front();
  });
  return out;
}

FlagOrbit flag_orbit_of(const ActionGroup& ag, const Design& D, Flag f) {
  FlagAction FA(ag, D);
  const auto& blk = D.blocks[f.block];
  auto it = std::lower_bound(blk.begin(), blk.end(), f.point);
  if (it == blk.end() || *it != f.point)
    throw error("flag_orbit_of: not an incident pair");
  int start = f.block * D.k + int(it - blk.begin());

  std::vector<char> seen(FA.total(), 0);
  std::vector<int> flags{start};
  seen[start] = 1;
  for (size_t head = 0; head < flags.size(); ++head)
    for (size_t gi = 0; gi < ag.group.gens.size(); ++gi) {
      int img = FA.apply(gi, flags[head]);
      if (!seen[img]) {
        seen[img] = 1;
        flags.push_back(img);
      }
    }
  return analyze_orbit(ag, D, std::move(flags));
}

Graph flag_graph(const ActionGroup& ag, const Design& D,
                 const FlagOrbit& orbit) {
  Graph G;
  G.n = int(orbit.flags.size());
  std::vector<int> fid2v(size_t(D.blocks.size()) * D.k, -1);
  for (int v = 0; v < G.n; ++v) {
    int fid = orbit.flags[v];
    fid2v[fid] = v;
    G.verts.push_back({D.blocks[fid / D.k][fid % D.k], fid / D.k});
  }
  std::vector<std::vector<int>> at_point(ag.group.degree);
  for (int v = 0; v < G.n; ++v) at_point[G.verts[v].point].push_back(v);

  for (int v = 0; v < G.n; ++v) {
    int p = G.verts[v].point;
    const auto& L = D.blocks[G.verts[v].block];
    for (int tau : L) {
      if (tau == p) continue;
      int partner = -1;
      for (int w : at_point[tau]) {
        const auto& N = D.blocks[G.verts[w].block];
        if (std::binary_search(N.begin(), N.end(), p)) {
          if (partner >= 0) throw error("flag partner is not unique");
          partner = w;
        }
      }
      if (partner < 0) throw error("flag partner is missing");
      G.edges.emplace_back(std::min(v, partner), std::max(v, partner));
    }
  }
  std::sort(G.edges.begin(), G.edges.end());
  G.edges.erase(std::unique(G.edges.begin(), G.edges.end()), G.edges.end());

  std::vector<int> deg(G.n, 0);
  perm::UnionFind uf(G.n);
  for (auto& [a, b] : G.edges) {
    ++deg[a];
    ++deg[b];
    uf.unite(a, b);
  }
  G.valency = deg.empty() ? 0 : deg[0];
  for (int d : deg)
    if (d != G.valency) throw error("flag graph is not regular");

  std::map<int, int> comp;
  for (int v = 0; v < G.n; ++v) ++comp[uf.find(v)];
  for (auto& [root, sz] : comp) G.component_sizes.push_back(sz);
  std::sort(G.component_sizes.rbegin(), G.component_sizes.rend());
  return G;
}

SpreadShape spread_check(const ActionGroup& ag, const Graph& G) {
  SpreadShape S;
  S.u = ag.group.degree;
  if (G.n % S.u != 0) throw error("spread_check: uneven fibres");
  S.v = G.n / S.u;
  S.r = G.valency;
  S.b = gf::i64(S.v) * S.r;
  if (S.b != S.u - 1)
    throw error("spread_check: fibre degree differs from u - 1");

  std::vector<char> hit(size_t(S.u) * S.u, 0);
  for (auto& [a, b] : G.edges) {
    int pa = G.verts[a].point, pb = G.verts[b].point;
    if (pa == pb) throw error("spread_check: edge inside a fibre");
    if (pa > pb) std::swap(pa, pb);
    size_t key = size_t(pa) * S.u + pb;
    if (hit[key]) throw error("spread_check: doubled fibre pair");
    hit[key] = 1;
  }
  for (int a = 0; a < S.u; ++a)
    for (int b = a + 1; b < S.u; ++b)
      if (!hit[size_t(a) * S.u + b])
        throw error("spread_check: uncovered fibre pair");
  return S;
}

CosetCheck coset_cross_check(const ActionGroup& ag, const Design& D,
                             const FlagOrbit& orbit, const Graph& G) {
  CosetCheck C;
  const auto& L = D.blocks[orbit.rep.block];
  auto gl = perm::set_stabilizer(ag.group, L);
  auto t = perm::point_stabilizer(gl, ag.sigma);
  C.t_order = perm::group_order(t);
  C.omega = perm::group_order(ag.group) / C.t_order;
  if (C.omega != G.n)
    throw error("coset_cross_check: vertex count disagrees");

  int tau = -1;
  for (int x : L)
    if (x != ag.sigma) {
      tau = x;
      break;
    }
  if (tau < 0) throw error("coset_cross_check: line has one point");
  perm::Perm g =
      perm::transporter_pair(ag.group, ag.sigma, tau, tau, ag.sigma);
  perm::PermGroup closed = t;
  closed.gens.push_back(g);
  C.components = perm::group_order(ag.group) / perm::group_order(closed);
  if (C.components != gf::i64(G.component_sizes.size()))
    throw error("coset_cross_check: component count disagrees");
  return C;
}

}  // namespace des
}  // namespace fg
