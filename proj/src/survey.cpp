#include "fg/survey.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "fg/designs.hpp"

namespace fg {
namespace survey {

namespace {

int md(int v, int p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

const Mat2 kid = {1, 0, 0, 1};

Mat2 mmul(int p, const Mat2& a, const Mat2& b) {
  return {md(a[0] * b[0] + a[1] * b[2], p), md(a[0] * b[1] + a[1] * b[3], p),
          md(a[2] * b[0] + a[3] * b[2], p), md(a[2] * b[1] + a[3] * b[3], p)};
}

Mat2 madd(int p, const Mat2& a, const Mat2& b) {
  return {md(a[0] + b[0], p), md(a[1] + b[1], p), md(a[2] + b[2], p),
          md(a[3] + b[3], p)};
}

Mat2 mscale(int p, const Mat2& a, int c) {
  return {md(a[0] * c, p), md(a[1] * c, p), md(a[2] * c, p), md(a[3] * c, p)};
}

int vec_pos(int p, int x, int y) { return x * p + y - 1; }

// column action w = M v on the nonzero vectors
perm::Perm mat_perm(int p, const Mat2& m) {
  int n = p * p - 1;
  perm::Perm out(n);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      int ix = md(m[0] * x + m[1] * y, p);
      int iy = md(m[2] * x + m[3] * y, p);
      if (ix == 0 && iy == 0) throw error("survey: singular matrix");
      out[vec_pos(p, x, y)] = vec_pos(p, ix, iy);
    }
  return out;
}

gf::i64 perm_order_of(const perm::Perm& g) {
  int n = int(g.size());
  std::vector<char> seen(n, 0);
  gf::i64 ord = 1;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    gf::i64 len = 0;
    for (int x = s; !seen[x]; x = g[x]) {
      seen[x] = 1;
      ++len;
    }
    ord = ord / std::gcd(ord, len) * len;
  }
  return ord;
}

perm::PermGroup ambient_gl(int p) {
  int g = gf::make_field(p, 1).generator;
  perm::PermGroup gl;
  gl.degree = p * p - 1;
  gl.gens = {mat_perm(p, {g, 0, 0, 1}), mat_perm(p, {1, 1, 0, 1}),
             mat_perm(p, {0, 1, 1, 0})};
  gf::i64 want = gf::i64(p * p - 1) * (p * p - p);
  if (gf::i64(perm::group_order(gl)) != want)
    throw error("survey: wrong full linear group order");
  return gl;
}

// quaternion pair plus a three-cycle conjugator; presentation checks keep
// the construction honest at every prime
perm::PermGroup quaternionic_core(int p) {
  Mat2 a = {0, p - 1, 1, 0};
  Mat2 b = kid;
  bool have = false;
  for (int u = 0; u < p && !have; ++u)
    for (int v = 0; v < p && !have; ++v)
      if (md(u * u + v * v + 1, p) == 0) {
        b = {u, v, v, md(-u, p)};
        have = true;
      }
  if (!have) throw error("survey: no sum of two squares equals -1");

  int inv2 = (p + 1) / 2;
  Mat2 ab = mmul(p, a, b);
  Mat2 c = mscale(
      p, madd(p, madd(p, mscale(p, kid, p - 1), a), madd(p, b, ab)), inv2);
  Mat2 c2 = mmul(p, c, c);
  if (mmul(p, c2, c) != kid || mmul(p, mmul(p, c2, a), c) != b ||
      mmul(p, mmul(p, c2, b), c) != ab)
    throw error("survey: conjugator presentation failed");

  perm::PermGroup s;
  s.degree = p * p - 1;
  s.gens = {mat_perm(p, a), mat_perm(p, b), mat_perm(p, c)};
  if (perm::group_order(s) != 24)
    throw error("survey: quaternionic core has wrong order");
  auto els = perm::elements(s);
  int involutions = 0;
  for (const auto& e : els)
    if (!perm::is_identity(e) && perm_order_of(e) == 2) ++involutions;
  if (involutions != 1)
    throw error("survey: quaternionic core lacks a unique involution");
  return s;
}

// icosahedral core: literal at p = 5, elsewhere the quaternionic core
// extended by the first determinant-one matrix of order five that closes
// to order 120
perm::PermGroup icosahedral_core(int p, const perm::PermGroup& q24) {
  perm::PermGroup s;
  s.degree = p * p - 1;
  if (p == 5) {
    s.gens = {mat_perm(p, {1, 1, 0, 1}), mat_perm(p, {1, 0, 1, 1})};
    if (perm::group_order(s) != 120)
      throw error("survey: special linear group at five has wrong order");
    return s;
  }
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if (md(a * d - b * c, p) != 1) continue;
          perm::Perm g = mat_perm(p, {a, b, c, d});
          if (perm_order_of(g) != 5) continue;
          perm::PermGroup t = q24;
          t.gens.push_back(g);
          if (perm::group_order(t) == 120) return t;
        }
  throw error("survey: no icosahedral closure found");
}

// all groups between the core and its normalizer, through subgroups of the
// coset quotient
std::vector<perm::PermGroup> groups_between(const perm::PermGroup& gl,
                                            const perm::PermGroup& core) {
  perm::PermGroup nrm = perm::normalizer(gl, core);
  if (perm::group_order(nrm) > 100000u)
    throw budget_error("survey: core normalizer too large to enumerate");
  perm::Chain score = perm::stabilizer_chain(core);
  auto els = perm::elements(nrm);

  std::vector<perm::Perm> reps;
  std::vector<int> coset_of(els.size());
  auto rep_of = [&](const perm::Perm& e) {
    for (size_t i = 0; i < reps.size(); ++i)
      if (score.contains(perm::compose(e, perm::inverse(reps[i]))))
        return int(i);
    reps.push_back(e);
    return int(reps.size()) - 1;
  };
  for (size_t i = 0; i < els.size(); ++i) coset_of[i] = rep_of(els[i]);
  int t = int(reps.size());
  if (gf::i64(t) * gf::i64(score.order()) != gf::i64(els.size()))
    throw error("survey: coset count does not divide the normalizer");

  int id_coset = rep_of(perm::identity(gl.degree));
  std::vector<std::vector<int>> qmul(t, std::vector<int>(t));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      qmul[i][j] = rep_of(perm::compose(reps[i], reps[j]));

  auto close = [&](std::vector<int> seed) {
    std::set<int> in(seed.begin(), seed.end());
    in.insert(id_coset);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(in.begin(), in.end());
      for (int i : cur)
        for (int j : cur)
          if (in.insert(qmul[i][j]).second) grew = true;
    }
    return std::vector<int>(in.begin(), in.end());
  };

  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue{close({})};
  found.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    auto sub = queue[head];
    std::set<int> in(sub.begin(), sub.end());
    for (int j = 0; j < t; ++j) {
      if (in.count(j)) continue;
      auto sub2 = sub;
      sub2.push_back(j);
      auto closed = close(sub2);
      if (found.insert(closed).second) queue.push_back(closed);
    }
  }

  std::vector<perm::PermGroup> out;
  for (const auto& sub : found) {
    perm::PermGroup g = core;
    for (int j : sub)
      if (j != id_coset) g.gens.push_back(reps[j]);
    out.push_back(std::move(g));
  }
  return out;
}

struct IntervalSub {
  perm::PermGroup g;
  gf::i64 order = 0;
  std::vector<char> member;  // over the class element list
};

// every subgroup between the point stabilizer and the whole class, found
// by single-element closures; one candidate per right coset suffices
std::vector<IntervalSub> interval_subgroups(
    const perm::PermGroup& g0, const std::vector<perm::Perm>& els,
    const perm::PermGroup& stab) {
  std::map<perm::Perm, int> eidx;
  for (size_t i = 0; i < els.size(); ++i) eidx[els[i]] = int(i);

  auto mk = [&](std::vector<perm::Perm> gens) {
    IntervalSub nd;
    nd.g = perm::PermGroup{g0.degree, std::move(gens)};
    perm::Chain ch = perm::stabilizer_chain(nd.g);
    nd.order = gf::i64(ch.order());
    nd.member.resize(els.size());
    for (size_t i = 0; i < els.size(); ++i)
      nd.member[i] = ch.contains(els[i]) ? 1 : 0;
    return nd;
  };

  std::map<std::vector<char>, IntervalSub> found;
  std::vector<std::vector<char>> queue;
  {
    IntervalSub seed = mk(stab.gens);
    queue.push_back(seed.member);
    found.emplace(seed.member, std::move(seed));
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    const IntervalSub& h = found.at(queue[head]);
    std::vector<char> covered = h.member;
    std::vector<perm::Perm> base_gens = h.g.gens;
    std::vector<int> hmem;
    for (size_t j = 0; j < els.size(); ++j)
      if (h.member[j]) hmem.push_back(int(j));
    for (size_t i = 0; i < els.size(); ++i) {
      if (covered[i]) continue;
      auto gens2 = base_gens;
      gens2.push_back(els[i]);
      IntervalSub nd = mk(std::move(gens2));
      if (!found.count(nd.member)) {
        queue.push_back(nd.member);
        found.emplace(nd.member, std::move(nd));
      }
      for (int j : hmem)
        covered[eidx.at(perm::compose(els[j], els[i]))] = 1;
    }
  }

  std::vector<IntervalSub> out;
  for (auto& [k, nd] : found) out.push_back(std::move(nd));
  return out;
}

bool collinear_block(int p, const std::vector<int>& block) {
  if (int(block.size()) != p - 1) return false;
  int c0 = block[0] + 1;
  int x0 = c0 / p, y0 = c0 % p;
  for (int pos : block) {
    int c = pos + 1;
    int x = c / p, y = c % p;
    if (md(x0 * y - y0 * x, p) != 0) return false;
  }
  return true;
}

struct RawBlock {
  std::vector<int> block;
};

std::vector<RawBlock> class_blocks(int p, const perm::PermGroup& gl,
                                   const perm::PermGroup& g0) {
  int n = p * p - 1;
  int x0 = vec_pos(p, 1, 0);
  auto els = perm::elements(g0);
  gf::i64 g0_order = gf::i64(els.size());
  perm::PermGroup stab = perm::point_stabilizer(g0, x0);
  gf::i64 stab_order = gf::i64(perm::group_order(stab));

  auto interval = interval_subgroups(g0, els, stab);
  perm::PermGroup nrm = perm::normalizer(gl, g0);

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;

  std::vector<const IntervalSub*> reps;
  std::vector<RawBlock> out;
  for (const auto& nd : interval) {
    if (nd.order == stab_order || nd.order == g0_order) continue;
    bool dup = false;
    for (const IntervalSub* r : reps)
      if (r->order == nd.order && perm::is_conjugate(nrm, r->g, nd.g)) {
        dup = true;
        break;
      }
    if (dup) continue;
    reps.push_back(&nd);

    auto horbs = perm::orbits_on(nd.g, all);
    gf::i64 target = nd.order / stab_order;
    std::vector<char> in_delta(n, 0);
    for (const auto& o : horbs)
      if (gf::i64(o.size()) == target)
        for (int x : o) in_delta[x] = 1;
    if (!in_delta[x0])
      throw error("survey: base point fell outside its own block");
    std::vector<int> delta;
    for (int x = 0; x < n; ++x)
      if (in_delta[x]) delta.push_back(x);

    perm::PermGroup mg = perm::normalizer(nrm, nd.g);
    for (const auto& morb : perm::orbits_on(mg, delta)) {
      int x = morb[0];
      for (const auto& o : horbs)
        if (std::binary_search(o.begin(), o.end(), x)) {
          if (2 <= int(o.size()) && int(o.size()) <= n / 2)
            out.push_back({o});
          break;
        }
    }
  }
  return out;
}

}  // namespace

fam::ActionGroup affine_action(int p, const perm::PermGroup& linear) {
  if (linear.degree != p * p - 1)
    throw error("survey: linear group degree mismatch");
  fam::ActionGroup ag;
  ag.family = "survey";
  ag.q = p;
  ag.field = gf::make_field(p, 1);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      fam::PointLabel lb;
      lb.kind = fam::PointLabel::Kind::tuple;
      lb.coords = {x, y};
      ag.points.push_back(lb);
    }
  ag.sigma = 0;
  ag.tau = p;  // the first basis vector

  int u = p * p;
  perm::Perm t1(u), t2(u);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      t1[x * p + y] = md(x + 1, p) * p + y;
      t2[x * p + y] = x * p + md(y + 1, p);
    }
  ag.group.degree = u;
  ag.group.gens = {t1, t2};
  for (const auto& lg : linear.gens) {
    perm::Perm a(u);
    a[0] = 0;
    for (int pos = 0; pos < p * p - 1; ++pos) a[pos + 1] = lg[pos] + 1;
    ag.group.gens.push_back(a);
  }
  return ag;
}

SurveyReport run_survey(int p) {
  if (!is_prime(p) || p < 5)
    throw error("survey needs an odd prime at least 5");
  if (p > 31) throw budget_error("survey: prime exceeds desk scale");

  auto gl = ambient_gl(p);
  std::vector<perm::PermGroup> socles{quaternionic_core(p)};
  if (p % 5 == 0 || p % 5 == 1 || p % 5 == 4)
    socles.push_back(icosahedral_core(p, socles[0]));

  int n = p * p - 1;
  std::vector<std::pair<gf::i64, perm::PermGroup>> cands;
  for (const auto& s : socles)
    for (auto& g : groups_between(gl, s)) {
      if (int(perm::orbit(g, 0).size()) != n) continue;
      cands.emplace_back(gf::i64(perm::group_order(g)), std::move(g));
    }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<std::pair<gf::i64, perm::PermGroup>> classes;
  for (auto& [ord, g] : cands) {
    bool dup = false;
    for (auto& [o2, g2] : classes)
      if (o2 == ord && perm::is_conjugate(gl, g2, g)) {
        dup = true;
        break;
      }
    if (!dup) classes.emplace_back(ord, std::move(g));
  }

  SurveyReport rep;
  rep.p = p;
  for (auto& [ord, g0] : classes) {
    ClassReport cr;
    cr.order = ord;
    cr.group = g0;
    auto aff = affine_action(p, g0);
    for (const auto& raw : class_blocks(p, gl, g0)) {
      BlockReport br;
      br.block = raw.block;
      std::vector<int> partial;
      for (int pos : raw.block) partial.push_back(pos + 1);
      des::Design d = des::design_from_block(aff, partial);
      br.line_size = d.k;
      br.lambda = d.lambda;
      br.affine_line = collinear_block(p, raw.block);

      auto orbits = des::flag_orbits(aff, d);
      const des::FlagOrbit* omega = nullptr;
      for (const auto& o : orbits)
        if (o.admissible()) {
          if (omega) throw error("survey: two admissible flag orbits");
          omega = &o;
        }
      if (!omega) throw error("survey: no admissible flag orbit");
      des::Graph gr = des::flag_graph(aff, d, *omega);
      des::spread_check(aff, gr);
      br.connected = gr.component_sizes.size() == 1;
      cr.blocks.push_back(std::move(br));
    }
    std::sort(cr.blocks.begin(), cr.blocks.end(),
              [](const BlockReport& a, const BlockReport& b) {
                if (a.line_size != b.line_size) return a.line_size < b.line_size;
                if (a.lambda != b.lambda) return a.lambda < b.lambda;
                return a.block < b.block;
              });
    for (const auto& br : cr.blocks) {
      if (!cr.rows.empty() && cr.rows.back().line_size == br.line_size &&
          cr.rows.back().lambda == br.lambda)
        ++cr.rows.back().count;
      else
        cr.rows.push_back({br.line_size, br.lambda, 1});
    }
    rep.classes.push_back(std::move(cr));
  }

  auto row_key = [](const ClassReport& c) {
    std::vector<std::array<int, 3>> k;
    for (const auto& r : c.rows) k.push_back({r.line_size, r.lambda, r.count});
    return k;
  };
  std::stable_sort(rep.classes.begin(), rep.classes.end(),
                   [&](const ClassReport& a, const ClassReport& b) {
                     if (a.order != b.order) return a.order < b.order;
                     return row_key(a) < row_key(b);
                   });
  return rep;
}

std::vector<std::string> format_rows(const SurveyReport& r) {
  std::vector<std::string> out;
  for (size_t ci = 0; ci < r.classes.size(); ++ci)
    for (const auto& row : r.classes[ci].rows) {
      std::ostringstream os;
      os << r.classes[ci].order << ' ' << ci + 1 << ' ' << row.line_size << ' '
         << row.lambda << ' ' << row.count;
      out.push_back(os.str());
    }
  return out;
}

std::vector<std::string> read_rows(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream is(line);
    std::string word, norm;
    while (is >> word) {
      if (word[0] == '#') break;
      if (!norm.empty()) norm += ' ';
      norm += word;
    }
    if (!norm.empty()) out.push_back(norm);
  }
  return out;
}

}  // namespace survey
}  // namespace fg
