#include "fg/gf.hpp"

#include <algorithm>
#include <numeric>

namespace fg {
namespace gf {

namespace {

// Polynomials over F_p as coefficient vectors, constant term first,
// no trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  while (a.size() >= b.size()) {
    int lead = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      int& c = a[shift + i];
      c = (c - lead * b[i]) % p;
      if (c < 0) c += p;
    }
    trim(a);
  }
  return a;
}

Poly index_to_poly(int idx, int p) {
  Poly a;
  while (idx > 0) {
    a.push_back(idx % p);
    idx /= p;
  }
  return a;
}

int poly_to_index(const Poly& a, int p) {
  int idx = 0;
  for (size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return idx;
}

bool poly_is_zero_mod(const Poly& a, const Poly& b, int p) {
  return poly_mod(a, b, p).empty();
}

// Monic polynomial of degree deg whose lower coefficients encode n.
Poly monic_from_index(int n, int deg, int p) {
  Poly a = index_to_poly(n, p);
  a.resize(deg + 1, 0);
  a[deg] = 1;
  return a;
}

bool irreducible(const Poly& f, int p) {
  int deg = int(f.size()) - 1;
  if (deg <= 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int e = 1; 2 * e <= deg; ++e) {
    int count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (int n = 0; n < count; ++n) {
      Poly g = monic_from_index(n, e, p);
      if (poly_is_zero_mod(f, g, p)) return false;
    }
  }
  return true;
}

int mul_raw(const FieldSpec& F, int x, int y) {
  Poly c = poly_mul(index_to_poly(x, F.p), index_to_poly(y, F.p), F.p);
  return poly_to_index(poly_mod(c, F.modulus, F.p), F.p);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

}  // namespace

FieldSpec make_field(int p, int d) {
  if (p < 2 || !is_prime(p)) throw error("make_field: p must be prime");
  if (d < 1) throw error("make_field: d must be positive");
  i64 q = 1;
  for (int i = 0; i < d; ++i) {
    q *= p;
    if (q > (1 << 20)) throw budget_error("make_field: p^d exceeds 2^20");
  }

  FieldSpec F;
  F.p = p;
  F.d = d;
  F.q = int(q);

  // Least monic irreducible of degree d, scanning lower-coefficient
  // indices ascending.
  for (int n = 0;; ++n) {
    if (n >= F.q) throw error("make_field: no irreducible polynomial found");
    Poly f = monic_from_index(n, d, p);
    if (irreducible(f, p)) {
      F.modulus = f;
      break;
    }
  }

  std::vector<i64> primes = prime_divisors(q - 1);
  auto order_is_full = [&](int x) {
    for (i64 r : primes) {
      i64 e = (q - 1) / r;
      int acc = 1;
      int base = x;
      while (e > 0) {
        if (e & 1) acc = mul_raw(F, acc, base);
        base = mul_raw(F, base, base);
        e >>= 1;
      }
      if (acc == 1) return false;
    }
    return true;
  };
  F.generator = 0;
  for (int x = 1; x < F.q; ++x) {
    if (order_is_full(x)) {
      F.generator = x;
      break;
    }
  }
  if (F.generator == 0) throw error("make_field: no generator found");

  F.exp_tab.resize(q - 1);
  F.log_tab.assign(F.q, -1);
  int acc = 1;
  for (i64 i = 0; i < q - 1; ++i) {
    F.exp_tab[i] = acc;
    F.log_tab[acc] = int(i);
    acc = mul_raw(F, acc, F.generator);
  }
  if (acc != 1) throw error("make_field: generator order mismatch");
  return F;
}

int add(const FieldSpec& F, int x, int y) {
  int r = 0, mult = 1;
  while (x > 0 || y > 0) {
    r += mult * ((x % F.p + y % F.p) % F.p);
    x /= F.p;
    y /= F.p;
    mult *= F.p;
  }
  return r;
}

int neg(const FieldSpec& F, int x) {
  int r = 0, mult = 1;
  while (x > 0) {
    r += mult * ((F.p - x % F.p) % F.p);
    x /= F.p;
    mult *= F.p;
  }
  return r;
}

int sub(const FieldSpec& F, int x, int y) { return add(F, x, neg(F, y)); }

int mul(const FieldSpec& F, int x, int y) {
  if (x == 0 || y == 0) return 0;
  i64 l = i64(F.log_tab[x]) + F.log_tab[y];
  return F.exp_tab[l % (F.q - 1)];
}

int inv(const FieldSpec& F, int x) {
  if (x == 0) throw error("inv: zero");
  int l = F.log_tab[x];
  return F.exp_tab[(F.q - 1 - l) % (F.q - 1)];
}

int pow_int(const FieldSpec& F, int x, i64 e) {
  if (x == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw error("pow_int: zero to negative power");
  }
  i64 m = F.q - 1;
  i64 l = (i64(F.log_tab[x]) * (e % m)) % m;
  if (l < 0) l += m;
  return F.exp_tab[l];
}

int twist(const FieldSpec& F, int x, const AutPower& a) {
  if (x == 0) return 0;
  i64 e = 1;
  int k = ((a.k % F.d) + F.d) % F.d;
  for (int i = 0; i < k; ++i) e = (e * F.p) % (F.q - 1);
  return F.exp_tab[(i64(F.log_tab[x]) * e) % (F.q - 1)];
}

std::vector<int> mult_subgroup(const FieldSpec& F, int m) {
  if (m <= 0 || (F.q - 1) % m != 0)
    throw error("mult_subgroup: m must divide q-1");
  std::vector<int> h;
  for (int i = 0; i * m < F.q - 1; ++i) h.push_back(F.exp_tab[i64(i) * m]);
  std::sort(h.begin(), h.end());
  return h;
}

std::vector<std::vector<int>> subgroup_cosets(const FieldSpec& F, int m) {
  std::vector<std::vector<int>> cosets;
  std::vector<int> h = mult_subgroup(F, m);
  for (int j = 0; j < m; ++j) {
    std::vector<int> c;
    c.reserve(h.size());
    for (int x : h) c.push_back(mul(F, F.exp_tab[j], x));
    std::sort(c.begin(), c.end());
    cosets.push_back(std::move(c));
  }
  return cosets;
}

i64 bracket(int n, int i, int p) {
  i64 r = 0, term = 1;
  for (int t = 0; t < i; ++t) {
    r += term;
    for (int e = 0; e < n; ++e) {
      if (term > (i64(1) << 42)) throw budget_error("bracket: overflow");
      term *= p;
    }
  }
  return r;
}

std::vector<i64> prime_divisors(i64 n) {
  std::vector<i64> r;
  for (i64 f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      r.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) r.push_back(n);
  return r;
}

int padic_ord(i64 a, i64 p) {
  if (a == 0) throw error("padic_ord: zero");
  int e = 0;
  while (a % p == 0) {
    a /= p;
    ++e;
  }
  return e;
}

i64 order_mod(i64 a, i64 c) {
  if (c <= 1) throw error("order_mod: modulus must exceed 1");
  if (std::gcd(a, c) != 1) throw error("order_mod: base not coprime to modulus");
  i64 x = a % c, j = 1;
  while (x != 1) {
    x = (x * a) % c;
    ++j;
    if (j > c) throw error("order_mod: runaway");
  }
  return j;
}

bool order_criterion(i64 a, i64 m) {
  if (a < 2 || m < 1) throw error("order_criterion: need a >= 2, m >= 1");
  for (i64 r : prime_divisors(m))
    if ((a - 1) % r != 0) return false;
  if (m % 4 == 0 && a % 4 != 1) return false;
  return true;
}

DivisorScan divisor_lemmas(i64 q, int n) {
  if (q < 2) throw error("divisor_lemmas: q must exceed 1");
  DivisorScan s;
  i64 q3 = q * q * q;
  if ((q + 1) % 3 == 0) {
    i64 step = (q * q - 1) / 3;
    for (i64 l = 0; l * step + q <= q3; ++l)
      if (q3 % (l * step + q) == 0) s.cubic_with_q.push_back(l);
    for (i64 l = 0; l * step + 1 <= q3; ++l)
      if (q3 % (l * step + 1) == 0) s.cubic_with_1.push_back(l);
  }
  i64 qn = 1;
  for (int i = 0; i < n; ++i) {
    if (qn > (i64(1) << 42) / q) throw budget_error("divisor_lemmas: q^n overflow");
    qn *= q;
  }
  for (i64 l = 1; l * (q - 1) + 1 <= qn; ++l)
    if (qn % (l * (q - 1) + 1) == 0) s.geometric.push_back(l);
  s.half_shift_empty = true;
  if (q % 2 == 1) {
    i64 shift = (q - 1) / 2 + 1;
    for (i64 l = 0; l * (q - 1) + shift <= qn; ++l)
      if (qn % (l * (q - 1) + shift) == 0) s.half_shift_empty = false;
  }
  return s;
}

}  // namespace gf
}  // namespace fg
