#include "fg/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fg {
namespace fam {

namespace {

using gf::FieldSpec;

std::pair<int, int> prime_power(int q) {
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    int d = 0, rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++d;
    }
    if (rest != 1) throw error("prime_power: not a prime power");
    return {p, d};
  }
  throw error("prime_power: bad argument");
}

struct PointSet {
  std::vector<PointLabel> points;
  std::map<PointLabel, int> index;

  void add(PointLabel l) { points.push_back(std::move(l)); }
  void finalize() {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() > 4096)
      throw budget_error("point set exceeds 4096 points");
    for (size_t i = 0; i < points.size(); ++i) index[points[i]] = int(i);
  }
  int at(const PointLabel& l) const {
    auto it = index.find(l);
    if (it == index.end()) throw error("point lookup failed");
    return it->second;
  }
};

template <typename F>
perm::Perm perm_of(const PointSet& ps, F&& f) {
  perm::Perm p(ps.points.size());
  std::vector<char> seen(ps.points.size(), 0);
  for (size_t i = 0; i < ps.points.size(); ++i) {
    int img = ps.at(f(ps.points[i]));
    if (seen[img]) throw error("generator image is not a bijection");
    seen[img] = 1;
    p[i] = img;
  }
  return p;
}

PointLabel tuple_label(std::vector<int> coords) {
  return {PointLabel::Kind::tuple, std::move(coords)};
}
PointLabel proj_label(std::vector<int> coords) {
  return {PointLabel::Kind::proj, std::move(coords)};
}
PointLabel scalar_label(int x) {
  return {PointLabel::Kind::scalar, {x}};
}
PointLabel infinity_label() { return {PointLabel::Kind::infinity, {}}; }

std::vector<int> normalize_proj(const FieldSpec& F, std::vector<int> v) {
  for (int c : v)
    if (c != 0) {
      int scale = gf::inv(F, c);
      for (int& x : v) x = gf::mul(F, x, scale);
      return v;
    }
  throw error("normalize_proj: zero vector");
}

// All coordinate tuples of the given length, lexicographically.
std::vector<std::vector<int>> all_tuples(int q, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(len, 0);
  while (true) {
    out.push_back(cur);
    int i = len - 1;
    while (i >= 0 && cur[i] == q - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

void assert_2transitive(const ActionGroup& ag) {
  if (!is_2transitive(ag))
    throw error("family build is not 2-transitive: " + ag.family);
}

}  // namespace

int point_index(const ActionGroup& ag, const PointLabel& label) {
  auto it = std::lower_bound(ag.points.begin(), ag.points.end(), label);
  if (it == ag.points.end() || !(*it == label))
    throw error("point_index: label not found");
  return int(it - ag.points.begin());
}

ActionGroup build_psl(int d, int q) {
  if (d < 3) throw error("build_psl: dimension must be at least 3");
  auto [p, e] = prime_power(q);
  ActionGroup ag;
  ag.family = "psl";
  ag.q = q;
  ag.field = gf::make_field(p, e);
  const FieldSpec& F = ag.field;

  PointSet ps;
  for (auto& v : all_tuples(q, d)) {
    bool zero = std::all_of(v.begin(), v.end(), [](int c) { return c == 0; });
    if (!zero) ps.add(proj_label(normalize_proj(F, v)));
  }
  ps.finalize();

  std::vector<perm::Perm> gens;
  std::vector<int> scalars{1};
  if (F.generator != 1) scalars.push_back(F.generator);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      for (int c : scalars) {
        gens.push_back(perm_of(ps, [&](const PointLabel& l) {
          std::vector<int> v = l.coords;
          v[i] = gf::add(F, v[i], gf::mul(F, c, v[j]));
          return proj_label(normalize_proj(F, v));
        }));
      }
    }

  ag.points = ps.points;
  ag.group = {int(ps.points.size()), std::move(gens)};
  ag.sigma = 0;
  ag.tau = 1;
  assert_2transitive(ag);
  return ag;
}

ActionGroup build_agammal1(int q, const GammaLSpec& spec) {
  auto [p, d] = prime_power(q);
  ActionGroup ag;
  ag.family = "agammal1";
  ag.q = q;
  ag.field = gf::make_field(p, d);
  const FieldSpec& F = ag.field;

  int s = spec.s, m = spec.m, ell = spec.ell;
  switch (spec.kind) {
    case GammaLSpec::Kind::full:
      s = 1;
      m = 1;
      ell = 0;
      break;
    case GammaLSpec::Kind::linear:
      s = d;
      m = 1;
      ell = 0;
      break;
    case GammaLSpec::Kind::custom:
      if (s < 1 || d % s != 0) throw error("build_agammal1: s must divide d");
      if (m < 1 || (q - 1) % m != 0)
        throw error("build_agammal1: m must divide q-1");
      if (m == 1 && ell != 0) throw error("build_agammal1: ell must be 0 at m=1");
      if (m > 1) {
        if (ell < 1 || ell >= m || std::gcd(ell, m) != 1)
          throw error("build_agammal1: ell must be a unit mod m");
        if ((d / s) % m != 0)
          throw error("build_agammal1: m must divide d/s");
        gf::i64 ps1 = 1;
        for (int i = 0; i < s; ++i) ps1 *= p;
        for (gf::i64 r : gf::prime_divisors(m))
          if ((ps1 - 1) % r != 0)
            throw error("build_agammal1: prime of m outside p^s - 1");
        if (gf::order_mod(ps1, m * (ps1 - 1)) != m)
          throw error("build_agammal1: order condition fails");
      }
      break;
  }

  PointSet ps;
  for (int x = 0; x < q; ++x) ps.add(scalar_label(x));
  ps.finalize();

  std::vector<perm::Perm> gens;
  gens.push_back(perm_of(ps, [&](const PointLabel& l) {
    return scalar_label(gf::add(F, l.coords[0], 1));
  }));
  int h = gf::pow_int(F, F.generator, m);  // generates the scalar subgroup
  if (h != 1)
    gens.push_back(perm_of(ps, [&](const PointLabel& l) {
      return scalar_label(gf::mul(F, h, l.coords[0]));
    }));
  if (s % d != 0 || ell != 0) {
    int a = gf::pow_int(F, F.generator, ell);
    gens.push_back(perm_of(ps, [&](const PointLabel& l) {
      return scalar_label(gf::mul(F, a, gf::twist(F, l.coords[0], {s})));
    }));
  }

  ag.points = ps.points;
  ag.group = {q, std::move(gens)};
  ag.sigma = 0;
  ag.tau = 1;
  assert_2transitive(ag);
  return ag;
}

ActionGroup build_affine_matrix(const std::string& kind, int n, int q) {
  if (kind != "sl" && kind != "sp") throw error("build_affine_matrix: kind");
  if (kind == "sp" && n % 2 != 0) throw error("build_affine_matrix: sp needs even n");
  if (kind == "sl" && n < 2) throw error("build_affine_matrix: n too small");
  auto [p, e] = prime_power(q);
  ActionGroup ag;
  ag.family = "affine_" + kind;
  ag.q = q;
  ag.field = gf::make_field(p, e);
  const FieldSpec& F = ag.field;

  PointSet ps;
  for (auto& v : all_tuples(q, n)) ps.add(tuple_label(v));
  ps.finalize();

  std::vector<perm::Perm> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < e; ++j) {
      int shift = gf::pow_int(F, F.generator, j);
      gens.push_back(perm_of(ps, [&](const PointLabel& l) {
        std::vector<int> v = l.coords;
        v[i] = gf::add(F, v[i], shift);
        return tuple_label(v);
      }));
    }

  std::vector<int> scalars{1};
  if (F.generator != 1) scalars.push_back(F.generator);
  if (kind == "sl") {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        for (int c : scalars)
          gens.push_back(perm_of(ps, [&](const PointLabel& l) {
            std::vector<int> v = l.coords;
            v[i] = gf::add(F, v[i], gf::mul(F, c, v[j]));
            return tuple_label(v);
          }));
      }
  } else {
    // symplectic form on coordinate pairs (0,1), (2,3), ...
    auto form = [&](const std::vector<int>& x, const std::vector<int>& y) {
      int acc = 0;
      for (int k = 0; k < n; k += 2) {
        acc = gf::add(F, acc, gf::mul(F, x[k], y[k + 1]));
        acc = gf::sub(F, acc, gf::mul(F, x[k + 1], y[k]));
      }
      return acc;
    };
    std::vector<std::vector<int>> dirs;
    for (int i = 0; i < n; ++i) {
      std::vector<int> v(n, 0);
      v[i] = 1;
      dirs.push_back(v);
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> v(n, 0);
        v[i] = 1;
        v[j] = 1;
        dirs.push_back(v);
      }
    for (const auto& dir : dirs)
      for (int c : scalars)
        gens.push_back(perm_of(ps, [&](const PointLabel& l) {
          std::vector<int> v = l.coords;
          int t = gf::mul(F, c, form(v, dir));
          for (int k = 0; k < n; ++k)
            v[k] = gf::add(F, v[k], gf::mul(F, t, dir[k]));
          return tuple_label(v);
        }));
  }

  ag.points = ps.points;
  ag.group = {int(ps.points.size()), std::move(gens)};
  ag.sigma = 0;
  std::vector<int> e1(n, 0);
  e1[0] = 1;
  ag.tau = point_index(ag, tuple_label(e1));
  assert_2transitive(ag);
  return ag;
}

ActionGroup build_psu3(int q) {
  auto [p, e] = prime_power(q);
  if (gf::i64(q) * q * q + 1 > 4096)
    throw budget_error("build_psu3: q^3 + 1 exceeds 4096");
  ActionGroup ag;
  ag.family = "psu3";
  ag.q = q;
  ag.field = gf::make_field(p, 2 * e);
  const FieldSpec& F = ag.field;
  gf::AutPower bar{e};

  auto conj = [&](int x) { return gf::twist(F, x, bar); };
  auto herm = [&](const std::vector<int>& w, const std::vector<int>& z) {
    int acc = gf::mul(F, w[0], conj(z[2]));
    acc = gf::add(F, acc, gf::mul(F, w[1], conj(z[1])));
    return gf::add(F, acc, gf::mul(F, w[2], conj(z[0])));
  };

  PointSet ps;
  auto consider = [&](std::vector<int> v) {
    if (herm(v, v) == 0) ps.add(proj_label(normalize_proj(F, v)));
  };
  consider({0, 0, 1});
  for (int b = 0; b < F.q; ++b) consider({0, 1, b});
  for (int b = 0; b < F.q; ++b)
    for (int c = 0; c < F.q; ++c) consider({1, b, c});
  ps.finalize();
  if (int(ps.points.size()) != q * q * q + 1)
    throw error("build_psu3: isotropic point count mismatch");

  // additive generators of the trace-zero set, via greedy span
  std::vector<int> trace_zero;
  for (int x = 1; x < F.q; ++x)
    if (gf::add(F, x, conj(x)) == 0) trace_zero.push_back(x);
  std::vector<int> alpha_gens;
  {
    std::vector<char> span(F.q, 0);
    span[0] = 1;
    std::vector<int> members{0};
    for (int x : trace_zero) {
      if (span[x]) continue;
      alpha_gens.push_back(x);
      std::vector<int> fresh;
      for (int y : members)
        for (int c = 1; c < p; ++c) {
          int z = y;
          for (int t = 0; t < c; ++t) z = gf::add(F, z, x);
          if (!span[z]) {
            span[z] = 1;
            fresh.push_back(z);
          }
        }
      members.insert(members.end(), fresh.begin(), fresh.end());
    }
  }

  auto unitary_t = [&](int alpha, int beta) {
    return perm_of(ps, [&, alpha, beta](const PointLabel& l) {
      const std::vector<int>& v = l.coords;
      std::vector<int> w(3);
      w[0] = gf::add(F, v[0],
                     gf::sub(F, gf::mul(F, alpha, v[2]),
                             gf::mul(F, conj(beta), v[1])));
      w[1] = gf::add(F, v[1], gf::mul(F, beta, v[2]));
      w[2] = v[2];
      return proj_label(normalize_proj(F, w));
    });
  };

  std::vector<perm::Perm> gens;
  for (int a : alpha_gens) gens.push_back(unitary_t(a, 0));
  for (int i = 0; i < 2 * e; ++i) {
    int beta = 1;
    for (int t = 0; t < i; ++t) beta *= p;  // basis monomial index
    int target = gf::neg(F, gf::mul(F, beta, conj(beta)));
    int alpha = -1;
    for (int x = 0; x < F.q; ++x)
      if (gf::add(F, x, conj(x)) == target) {
        alpha = x;
        break;
      }
    if (alpha < 0) throw error("build_psu3: no alpha for beta");
    gens.push_back(unitary_t(alpha, beta));
  }
  {
    int g = F.generator;
    int mid = gf::pow_int(F, g, q - 1);
    int last = gf::inv(F, conj(g));
    gens.push_back(perm_of(ps, [&](const PointLabel& l) {
      const std::vector<int>& v = l.coords;
      return proj_label(normalize_proj(
          F, {gf::mul(F, g, v[0]), gf::mul(F, mid, v[1]), gf::mul(F, last, v[2])}));
    }));
  }

  ag.points = ps.points;
  ag.group = {int(ps.points.size()), gens};
  ag.sigma = point_index(ag, proj_label({1, 0, 0}));
  ag.tau = point_index(ag, proj_label({0, 0, 1}));

  if (!is_2transitive(ag)) {
    // the triangular generators span only a point stabilizer; one
    // form-preserving reflection completes the group
    gens.push_back(perm_of(ps, [&](const PointLabel& l) {
      const std::vector<int>& v = l.coords;
      return proj_label(normalize_proj(F, {v[2], gf::neg(F, v[1]), v[0]}));
    }));
    ag.group = {int(ps.points.size()), gens};
    assert_2transitive(ag);
  }
  return ag;
}

namespace {

struct SuzukiCtx {
  FieldSpec F;
  gf::AutPower sigma;

  int defining_eta3(int e1, int e2) const {
    // eta3 = eta1*eta2 + eta1^(sigma+2) + eta2^sigma
    int a = gf::mul(F, e1, e2);
    int b = gf::mul(F, gf::twist(F, e1, sigma), gf::mul(F, e1, e1));
    int c = gf::twist(F, e2, sigma);
    return gf::add(F, gf::add(F, a, b), c);
  }
};

}  // namespace

ActionGroup build_suzuki(int q) {
  auto [p, d] = prime_power(q);
  if (p != 2 || d % 2 == 0 || d < 3)
    throw error("build_suzuki: q must be 2^(2e+1), e >= 1");
  ActionGroup ag;
  ag.family = "suzuki";
  ag.q = q;
  ag.field = gf::make_field(2, d);
  SuzukiCtx ctx{ag.field, {(d + 1) / 2}};
  const FieldSpec& F = ag.field;
  const gf::AutPower sg = ctx.sigma;

  PointSet ps;
  ps.add(infinity_label());
  for (int e1 = 0; e1 < q; ++e1)
    for (int e2 = 0; e2 < q; ++e2)
      ps.add(tuple_label({e1, e2, ctx.defining_eta3(e1, e2)}));
  ps.finalize();
  if (int(ps.points.size()) != q * q + 1)
    throw error("build_suzuki: point count mismatch");

  auto t_map = [&](int alpha, int beta) {
    return perm_of(ps, [&, alpha, beta](const PointLabel& l) {
      if (l.kind == PointLabel::Kind::infinity) return l;
      int e1 = l.coords[0], e2 = l.coords[1], e3 = l.coords[2];
      int n1 = gf::add(F, e1, alpha);
      int n2 = gf::add(F, e2, gf::add(F, beta, gf::mul(F, gf::twist(F, alpha, sg), e1)));
      int asig = gf::twist(F, alpha, sg);
      int n3 = e3;
      n3 = gf::add(F, n3, gf::mul(F, alpha, beta));
      n3 = gf::add(F, n3, gf::mul(F, asig, gf::mul(F, alpha, alpha)));
      n3 = gf::add(F, n3, gf::twist(F, beta, sg));
      n3 = gf::add(F, n3, gf::mul(F, alpha, e2));
      n3 = gf::add(F, n3, gf::mul(F, gf::mul(F, asig, alpha), e1));
      n3 = gf::add(F, n3, gf::mul(F, beta, e1));
      return tuple_label({n1, n2, n3});
    });
  };

  std::vector<perm::Perm> gens;
  gens.push_back(t_map(1, 0));
  gens.push_back(t_map(0, 1));
  {
    int k = F.generator;
    int k1 = gf::mul(F, gf::twist(F, k, sg), k);            // kappa^(sigma+1)
    int k2 = gf::mul(F, gf::twist(F, k, sg), gf::mul(F, k, k));  // kappa^(sigma+2)
    gens.push_back(perm_of(ps, [&](const PointLabel& l) {
      if (l.kind == PointLabel::Kind::infinity) return l;
      return tuple_label({gf::mul(F, k, l.coords[0]), gf::mul(F, k1, l.coords[1]),
                          gf::mul(F, k2, l.coords[2])});
    }));
  }
  gens.push_back(perm_of(ps, [&](const PointLabel& l) {
    if (l.kind == PointLabel::Kind::infinity) return tuple_label({0, 0, 0});
    if (l.coords == std::vector<int>{0, 0, 0}) return infinity_label();
    int e3i = gf::inv(F, l.coords[2]);
    return tuple_label({gf::mul(F, l.coords[1], e3i), gf::mul(F, l.coords[0], e3i), e3i});
  }));

  ag.points = ps.points;
  ag.group = {int(ps.points.size()), std::move(gens)};
  ag.sigma = 0;
  ag.tau = point_index(ag, tuple_label({0, 0, 0}));
  assert_2transitive(ag);
  return ag;
}

int sz_point(const ActionGroup& ag, int eta1, int eta2) {
  if (ag.family != "suzuki") throw error("sz_point: wrong family");
  auto [p, d] = prime_power(ag.q);
  (void)p;
  SuzukiCtx ctx{ag.field, {(d + 1) / 2}};
  return point_index(
      ag, tuple_label({eta1, eta2, ctx.defining_eta3(eta1, eta2)}));
}

namespace {

struct ReeCtx {
  FieldSpec F;
  gf::AutPower sigma;

  int tw(int x) const { return gf::twist(F, x, sigma); }
  int mul(int a, int b) const { return gf::mul(F, a, b); }
  int mul3(int a, int b, int c) const { return mul(mul(a, b), c); }
  int add(int a, int b) const { return gf::add(F, a, b); }
  int sub(int a, int b) const { return gf::sub(F, a, b); }

  // the three dependent coordinates of a point with affine part (e1,e2,e3)
  std::vector<int> lambdas(int e1, int e2, int e3) const {
    int e1s = tw(e1), e2s = tw(e2), e3s = tw(e3);
    int e1sq = mul(e1, e1), e2sq = mul(e2, e2);
    int e1s3 = mul(e1s, mul3(e1, e1, e1));        // e1^(sigma+3)
    int l1 = sub(add(sub(mul(e1sq, e2), mul(e1, e3)), e2s), e1s3);
    int l2 = mul(e1s, e2s);
    l2 = sub(l2, e3s);
    l2 = add(l2, mul(e1, e2sq));
    l2 = add(l2, mul(e2, e3));
    l2 = sub(l2, mul(mul(e1s, e1s), mul3(e1, e1, e1)));  // e1^(2 sigma+3)
    int l3 = mul(e1, e3s);
    l3 = sub(l3, mul(mul(e1s, e1), e2s));                // e1^(sigma+1) e2^sigma
    l3 = add(l3, mul(e1s3, e2));
    l3 = add(l3, mul(e1sq, e2sq));
    l3 = sub(l3, mul(e2s, e2));                          // e2^(sigma+1)
    l3 = sub(l3, mul(e3, e3));
    l3 = add(l3, mul(mul(e1s, e1s), mul(e1sq, e1sq)));   // e1^(2 sigma+4)
    return {l1, l2, l3};
  }

  PointLabel point(int e1, int e2, int e3) const {
    auto l = lambdas(e1, e2, e3);
    return {PointLabel::Kind::tuple, {e1, e2, e3, l[0], l[1], l[2]}};
  }
};

}  // namespace

ActionGroup build_ree(int q) {
  auto [p, d] = prime_power(q);
  if (p != 3 || d % 2 == 0)
    throw error("build_ree: q must be 3^(2e+1)");
  if (gf::i64(q) * q * q + 1 > 4096)
    throw budget_error("build_ree: q^3 + 1 exceeds 4096");
  ActionGroup ag;
  ag.family = "ree";
  ag.q = q;
  ag.field = gf::make_field(3, d);
  ReeCtx ctx{ag.field, {(d + 1) / 2}};
  const FieldSpec& F = ag.field;

  PointSet ps;
  ps.add(infinity_label());
  for (int e1 = 0; e1 < q; ++e1)
    for (int e2 = 0; e2 < q; ++e2)
      for (int e3 = 0; e3 < q; ++e3) ps.add(ctx.point(e1, e2, e3));
  ps.finalize();
  if (int(ps.points.size()) != q * q * q + 1)
    throw error("build_ree: point count mismatch");

  auto t_map = [&](int alpha, int beta, int gamma) {
    return perm_of(ps, [&, alpha, beta, gamma](const PointLabel& l) {
      if (l.kind == PointLabel::Kind::infinity) return l;
      int e1 = l.coords[0], e2 = l.coords[1], e3 = l.coords[2];
      int n1 = ctx.add(e1, alpha);
      int n2 = ctx.add(e2, ctx.add(beta, ctx.mul(ctx.tw(alpha), e1)));
      int n3 = ctx.add(e3, gamma);
      n3 = ctx.sub(n3, ctx.mul(alpha, e2));
      n3 = ctx.add(n3, ctx.mul(beta, e1));
      n3 = ctx.sub(n3, ctx.mul(ctx.mul(ctx.tw(alpha), alpha), e1));
      return ctx.point(n1, n2, n3);
    });
  };

  std::vector<perm::Perm> gens;
  gens.push_back(t_map(1, 0, 0));
  gens.push_back(t_map(0, 1, 0));
  gens.push_back(t_map(0, 0, 1));
  {
    int k = F.generator;
    gf::AutPower sg = ctx.sigma;
    int ks = gf::twist(F, k, sg);
    int scale1 = k;
    int scale2 = gf::mul(F, ks, k);
    int scale3 = gf::mul(F, scale2, k);
    int scale4 = gf::mul(F, scale3, k);
    int scale5 = gf::mul(F, gf::mul(F, ks, ks), gf::pow_int(F, k, 3));
    int scale6 = gf::mul(F, scale5, k);
    gens.push_back(perm_of(ps, [&](const PointLabel& l) {
      if (l.kind == PointLabel::Kind::infinity) return l;
      std::vector<int> scales{scale1, scale2, scale3, scale4, scale5, scale6};
      std::vector<int> v(6);
      for (int i = 0; i < 6; ++i) v[i] = gf::mul(F, scales[i], l.coords[i]);
      return PointLabel{PointLabel::Kind::tuple, v};
    }));
  }
  gens.push_back(perm_of(ps, [&](const PointLabel& l) {
    if (l.kind == PointLabel::Kind::infinity)
      return ctx.point(0, 0, 0);
    if (l.coords[0] == 0 && l.coords[1] == 0 && l.coords[2] == 0)
      return infinity_label();
    int l3i = gf::inv(F, l.coords[5]);
    std::vector<int> v(6);
    v[0] = gf::mul(F, l.coords[4], l3i);
    v[1] = gf::mul(F, l.coords[3], l3i);
    v[2] = gf::mul(F, l.coords[2], l3i);
    v[3] = gf::mul(F, l.coords[1], l3i);
    v[4] = gf::mul(F, l.coords[0], l3i);
    v[5] = l3i;
    return PointLabel{PointLabel::Kind::tuple, v};
  }));

  ag.points = ps.points;
  ag.group = {int(ps.points.size()), std::move(gens)};
  ag.sigma = 0;
  ag.tau = point_index(ag, ctx.point(0, 0, 0));
  assert_2transitive(ag);
  return ag;
}

int ree_point(const ActionGroup& ag, int eta1, int eta2, int eta3) {
  if (ag.family != "ree") throw error("ree_point: wrong family");
  auto [p, d] = prime_power(ag.q);
  (void)p;
  ReeCtx ctx{ag.field, {(d + 1) / 2}};
  return point_index(ag, ctx.point(eta1, eta2, eta3));
}

ActionGroup build_from_generator_text(const std::string& text) {
  ActionGroup ag;
  ag.family = "custom";
  ag.group = perm::group_from_text(text);
  ag.q = 0;
  ag.field = gf::make_field(2, 1);
  for (int i = 0; i < ag.group.degree; ++i)
    ag.points.push_back(scalar_label(i));
  ag.sigma = 0;
  ag.tau = 1;
  assert_2transitive(ag);
  return ag;
}

std::vector<int> canonical_block(const ActionGroup& ag,
                                 const std::string& case_id) {
  const FieldSpec& F = ag.field;
  std::vector<int> out;
  if (ag.family == "suzuki") {
    if (!case_id.empty()) throw error("canonical_block: no cases for suzuki");
    for (int x = 0; x < ag.q; ++x) out.push_back(sz_point(ag, 0, x));
  } else if (ag.family == "psu3") {
    if (!case_id.empty()) throw error("canonical_block: no cases for psu3");
    gf::AutPower bar{F.d / 2};
    for (int a = 0; a < F.q; ++a)
      if (gf::add(F, a, gf::twist(F, a, bar)) == 0)
        out.push_back(point_index(
            ag, proj_label(normalize_proj(F, {a, 0, 1}))));
  } else if (ag.family == "ree") {
    if (case_id == "i") {
      for (int x = 0; x < ag.q; ++x) out.push_back(ree_point(ag, 0, x, 0));
    } else if (case_id == "ii") {
      for (int x = 0; x < ag.q; ++x) out.push_back(ree_point(ag, 0, 0, x));
    } else if (case_id == "iii") {
      for (int a = 0; a < ag.q; ++a)
        for (int b = 0; b < ag.q; ++b) out.push_back(ree_point(ag, 0, a, b));
    } else if (case_id == "iv") {
      if (ag.q != 3) throw error("canonical_block: case iv needs q = 3");
      auto [p, d] = prime_power(ag.q);
      (void)p;
      ReeCtx ctx{F, {(d + 1) / 2}};
      for (int a = 0; a < ag.q; ++a)
        for (int c = 0; c < ag.q; ++c) {
          int middle = gf::neg(F, gf::mul(F, ctx.tw(a), a));
          out.push_back(ree_point(ag, a, middle, c));
        }
    } else {
      throw error("canonical_block: unknown ree case " + case_id);
    }
  } else {
    throw error("canonical_block: no canonical set for " + ag.family);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  // the set excludes sigma by construction; blocks live off the base point
  for (int x : out)
    if (x == ag.sigma) throw error("canonical_block: contains sigma");
  return out;
}

bool ree_case4_criterion(int q) {
  auto [p, d] = prime_power(q);
  if (p != 3 || d % 2 == 0) throw error("ree_case4_criterion: bad q");
  auto F = gf::make_field(3, d);
  gf::AutPower sg{(d + 1) / 2};
  for (int c = 0; c < q; ++c)
    for (int x = 0; x < q; ++x)
      if (gf::mul(F, gf::twist(F, c, sg), x) != gf::mul(F, c, gf::twist(F, x, sg)))
        return false;
  return true;
}

bool is_2transitive(const ActionGroup& ag) {
  int n = ag.group.degree;
  if (int(perm::orbit(ag.group, ag.sigma).size()) != n) return false;
  perm::PermGroup st = perm::point_stabilizer(ag.group, ag.sigma);
  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (i != ag.sigma) rest.push_back(i);
  return perm::is_transitive_on(st, rest);
}

}  // namespace fam
}  // namespace fg
