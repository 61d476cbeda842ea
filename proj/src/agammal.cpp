#include "fg/agammal.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fg {
namespace agl {

namespace {

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

// rank of the F_p span of field elements, via their digit vectors
int fp_rank(const gf::FieldSpec& F, const std::vector<int>& xs) {
  std::vector<std::vector<int>> rows;
  for (int x : xs) {
    std::vector<int> dig(F.d);
    for (int i = 0; i < F.d; ++i) {
      dig[i] = x % F.p;
      x /= F.p;
    }
    rows.push_back(std::move(dig));
  }
  int rank = 0;
  for (int col = 0; col < F.d; ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    // scale pivot to 1 mod p
    int piv = rows[rank][col];
    int piv_inv = 1;
    while (piv * piv_inv % F.p != 1) ++piv_inv;
    for (int& v : rows[rank]) v = v * piv_inv % F.p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (int(i) == rank || rows[i][col] == 0) continue;
      int f = rows[i][col];
      for (int j = 0; j < F.d; ++j)
        rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % F.p + F.p) % F.p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

fam::GammaLSpec Structure::spec() const {
  fam::GammaLSpec sp;
  sp.kind = fam::GammaLSpec::Kind::custom;
  sp.s = s;
  sp.m = m;
  sp.ell = ell;
  return sp;
}

std::vector<Structure> enumerate_structures(int q) {
  auto [p, d] = prime_power(q);
  std::vector<Structure> out;
  for (int s = 1; s <= d; ++s) {
    if (d % s != 0) continue;
    if (s == d) {
      out.push_back({q, p, d, s, 1, 0});
      continue;
    }
    gf::i64 ps = 1;
    for (int i = 0; i < s; ++i) ps *= p;
    for (int m = 1; m <= d / s; ++m) {
      if ((d / s) % m != 0 || (q - 1) % m != 0) continue;
      if (m == 1) {
        out.push_back({q, p, d, s, 1, 0});
        continue;
      }
      bool primes_fit = true;
      for (gf::i64 r : gf::prime_divisors(m))
        if ((ps - 1) % r != 0) primes_fit = false;
      if (!primes_fit) continue;
      if (gf::order_mod(ps, gf::i64(m) * (ps - 1)) != m) continue;
      for (int ell = 1; ell < m; ++ell)
        if (std::gcd(ell, m) == 1) out.push_back({q, p, d, s, m, ell});
    }
  }
  std::sort(out.begin(), out.end(), [](const Structure& a, const Structure& b) {
    return std::tie(a.s, a.m, a.ell) < std::tie(b.s, b.m, b.ell);
  });
  return out;
}

std::vector<std::vector<int>> census_blocks(const gf::FieldSpec& F,
                                            const Structure& st) {
  const int q = F.q;
  auto H = gf::mult_subgroup(F, st.m);
  gf::i64 hsize = gf::i64(H.size());
  std::set<std::vector<int>> found;
  for (int e = 1; e <= st.m; ++e) {
    if (st.m % e != 0) continue;
    int terms = st.m / e;
    gf::i64 base_j = gf::i64(st.ell) * gf::bracket(st.s, e, st.p) % (q - 1);
    gf::i64 closure_exp = gf::bracket(e * st.s, terms, st.p);
    for (gf::i64 ksz = 1; ksz <= hsize; ++ksz) {
      if (hsize % ksz != 0) continue;
      auto K = gf::mult_subgroup(F, int((q - 1) / ksz));
      std::set<int> seen_coset;
      for (gf::i64 n = 0; n < hsize; ++n) {
        gf::i64 j = (base_j + n * st.m) % (q - 1);
        int w = gf::pow_int(F, F.generator, j);
        int key = q;
        for (int k0 : K) key = std::min(key, gf::mul(F, w, k0));
        if (!seen_coset.insert(key).second) continue;
        int wcl = gf::pow_int(F, w, closure_exp);
        if (!std::binary_search(K.begin(), K.end(), wcl)) continue;
        std::set<int> P;
        for (int i = 0; i < terms; ++i) {
          int wi =
              gf::pow_int(F, w, gf::bracket(e * st.s, i, st.p));
          for (int k0 : K) P.insert(gf::mul(F, wi, k0));
        }
        if (int(P.size()) < 2 || int(P.size()) > q - 2) continue;
        found.insert(std::vector<int>(P.begin(), P.end()));
      }
    }
  }
  std::vector<std::vector<int>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

bool is_mult_subgroup(const gf::FieldSpec& F, const std::vector<int>& P) {
  if (!std::binary_search(P.begin(), P.end(), 1)) return false;
  for (int a : P)
    for (int b : P)
      if (!std::binary_search(P.begin(), P.end(), gf::mul(F, a, b)))
        return false;
  return true;
}

bool is_subfield_line(const gf::FieldSpec& F, const std::vector<int>& P) {
  std::vector<int> L = P;
  L.push_back(0);
  std::sort(L.begin(), L.end());
  if (!std::binary_search(L.begin(), L.end(), 1)) return false;
  for (int a : L)
    for (int b : L) {
      if (!std::binary_search(L.begin(), L.end(), gf::add(F, a, b)))
        return false;
      if (!std::binary_search(L.begin(), L.end(), gf::mul(F, a, b)))
        return false;
    }
  return true;
}

Prediction predict(const gf::FieldSpec& F, const Structure& st,
                   const std::vector<int>& P) {
  Prediction R;
  auto H = gf::mult_subgroup(F, st.m);
  std::vector<int> K;
  std::set_intersection(P.begin(), P.end(), H.begin(), H.end(),
                        std::back_inserter(K));
  if (!is_mult_subgroup(F, K))
    throw error("predict: block meets the scalar subgroup in a non-subgroup");
  gf::i64 ksz = gf::i64(K.size());
  if ((st.m * ksz) % gf::i64(P.size()) != 0)
    throw error("predict: block size incompatible with its core");
  gf::i64 e = st.m * ksz / gf::i64(P.size());

  R.subfield = is_subfield_line(F, P);
  R.lambda = R.subfield ? 1 : int(P.size()) + 1;

  bool symmetric = true;
  for (int x : P)
    if (!std::binary_search(P.begin(), P.end(), gf::neg(F, x)))
      symmetric = false;

  std::vector<int> shifted;
  for (int x : P) shifted.push_back(gf::sub(F, x, 1));
  int c1 = fp_rank(F, shifted);
  int c2 = fp_rank(F, P);

  gf::i64 hk = gf::i64(H.size()) / ksz;
  auto ppow = [&](int ex) {
    gf::i64 v = 1;
    for (int i = 0; i < ex; ++i) v *= st.p;
    return v;
  };
  if (symmetric) {
    R.components = hk * e * ppow(st.d - c2);
  } else {
    gf::i64 doubled = hk * e * ppow(st.d - c1);
    if (doubled % 2 != 0) throw error("predict: odd doubled component count");
    R.components = doubled / 2;
  }

  if (st.d % (e * st.s) != 0)
    throw error("predict: twist step incompatible");
  R.flag_stab_order = ksz * (st.d / (e * st.s));

  R.connected_rule = st.p % 4 == 3 && st.d % 2 == 1 &&
                     gf::i64(P.size()) * 2 == F.q - 1 &&
                     is_mult_subgroup(F, P);
  return R;
}

}  // namespace agl
}  // namespace fg
