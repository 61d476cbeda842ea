#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "fg/gf.hpp"

using namespace fg;
using gf::FieldSpec;
using i64 = gf::i64;

namespace {

// Independent reference arithmetic: digit vectors mod p, schoolbook
// multiply, explicit reduction by the field modulus.
std::vector<int> digits(int idx, int p, int len) {
  std::vector<int> a(len, 0);
  for (int i = 0; i < len && idx > 0; ++i) {
    a[i] = idx % p;
    idx /= p;
  }
  return a;
}

int undigits(const std::vector<int>& a, int p) {
  int idx = 0;
  for (size_t i = a.size(); i-- > 0;) idx = idx * p + a[i];
  return idx;
}

int ref_add(const FieldSpec& F, int x, int y) {
  auto a = digits(x, F.p, F.d), b = digits(y, F.p, F.d);
  for (int i = 0; i < F.d; ++i) a[i] = (a[i] + b[i]) % F.p;
  return undigits(a, F.p);
}

int ref_mul(const FieldSpec& F, int x, int y) {
  auto a = digits(x, F.p, F.d), b = digits(y, F.p, F.d);
  std::vector<int> c(2 * F.d, 0);
  for (int i = 0; i < F.d; ++i)
    for (int j = 0; j < F.d; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % F.p;
  for (int k = 2 * F.d - 1; k >= F.d; --k) {
    int lead = c[k];
    if (lead == 0) continue;
    c[k] = 0;
    for (int i = 0; i < F.d; ++i) {
      int& t = c[k - F.d + i];
      t = (t - lead * F.modulus[i]) % F.p;
      if (t < 0) t += F.p;
    }
  }
  c.resize(F.d);
  return undigits(c, F.p);
}

std::vector<std::pair<int, int>> prime_powers_upto(int bound) {
  std::vector<std::pair<int, int>> r;
  for (int p = 2; p <= bound; ++p) {
    bool prime = true;
    for (int f = 2; f * f <= p; ++f)
      if (p % f == 0) prime = false;
    if (!prime) continue;
    int q = p;
    for (int d = 1; q <= bound; ++d, q *= p) r.push_back({p, d});
  }
  std::sort(r.begin(), r.end(), [](auto a, auto b) {
    auto pw = [](std::pair<int, int> x) {
      i64 q = 1;
      for (int i = 0; i < x.second; ++i) q *= x.first;
      return q;
    };
    return pw(a) < pw(b);
  });
  return r;
}

i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("canonical moduli and generators") {
  auto F2 = gf::make_field(2, 1);
  CHECK(F2.modulus == std::vector<int>{0, 1});
  CHECK(F2.generator == 1);

  auto F9 = gf::make_field(3, 2);
  CHECK(F9.modulus == std::vector<int>{1, 0, 1});

  auto F8 = gf::make_field(2, 3);
  CHECK(F8.modulus == std::vector<int>{1, 1, 0, 1});

  auto F7 = gf::make_field(7, 1);
  CHECK(F7.generator == 3);
}

TEST_CASE("field axioms, exhaustive through order 81") {
  for (auto [p, d] : prime_powers_upto(81)) {
    auto F = gf::make_field(p, d);
    CAPTURE(p);
    CAPTURE(d);
    for (int x = 0; x < F.q; ++x) {
      CHECK(gf::add(F, x, gf::neg(F, x)) == 0);
      if (x != 0) {
        CHECK(gf::mul(F, x, gf::inv(F, x)) == 1);
        CHECK(F.exp_tab[F.log_tab[x]] == x);
      }
    }
    for (int x = 0; x < F.q; ++x)
      for (int y = 0; y < F.q; ++y) {
        CHECK(gf::add(F, x, y) == ref_add(F, x, y));
        CHECK(gf::mul(F, x, y) == ref_mul(F, x, y));
      }
    // associativity and distributivity on a full grid for small q,
    // on an 8-point slice otherwise
    int step = F.q <= 16 ? 1 : F.q / 8;
    for (int x = 0; x < F.q; x += step)
      for (int y = 0; y < F.q; y += step)
        for (int z = 0; z < F.q; z += step) {
          CHECK(gf::mul(F, x, gf::mul(F, y, z)) ==
                gf::mul(F, gf::mul(F, x, y), z));
          CHECK(gf::mul(F, x, gf::add(F, y, z)) ==
                gf::add(F, gf::mul(F, x, y), gf::mul(F, x, z)));
        }
  }
}

TEST_CASE("field axioms, random samples above 81") {
  std::mt19937 rng(12345);
  for (auto [p, d] : std::vector<std::pair<int, int>>{
           {2, 7}, {3, 5}, {5, 4}, {2, 10}, {7, 3}, {2, 16}}) {
    auto F = gf::make_field(p, d);
    std::uniform_int_distribution<int> pick(0, F.q - 1);
    for (int i = 0; i < 10000; ++i) {
      int x = pick(rng), y = pick(rng);
      CHECK(gf::add(F, x, y) == ref_add(F, x, y));
      CHECK(gf::mul(F, x, y) == ref_mul(F, x, y));
      if (x != 0) CHECK(gf::mul(F, x, gf::inv(F, x)) == 1);
    }
  }
}

TEST_CASE("twist is the p-power automorphism") {
  for (auto [p, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 2}, {3, 3}, {2, 5}}) {
    auto F = gf::make_field(p, d);
    for (int x = 0; x < F.q; ++x) {
      CHECK(gf::twist(F, x, {1}) == gf::pow_int(F, x, p));
      CHECK(gf::twist(F, x, {F.d}) == x);
      for (int y = 0; y < F.q; ++y) {
        CHECK(gf::twist(F, gf::add(F, x, y), {1}) ==
              gf::add(F, gf::twist(F, x, {1}), gf::twist(F, y, {1})));
        CHECK(gf::twist(F, gf::mul(F, x, y), {1}) ==
              gf::mul(F, gf::twist(F, x, {1}), gf::twist(F, y, {1})));
      }
    }
  }
}

TEST_CASE("odd characteristic-2 twist properties") {
  for (int e : {1, 2}) {
    int d = 2 * e + 1;
    auto F = gf::make_field(2, d);
    gf::AutPower sigma{e + 1};
    // sigma squared is the single Frobenius
    for (int x = 0; x < F.q; ++x)
      CHECK(gf::twist(F, gf::twist(F, x, sigma), sigma) == gf::pow_int(F, x, 2));
    // z -> z^(sigma+2) and z -> z^(sigma+1) are bijections on nonzero elements
    std::set<int> im1, im2;
    for (int x = 1; x < F.q; ++x) {
      im1.insert(gf::mul(F, gf::twist(F, x, sigma), x));
      im2.insert(gf::mul(F, gf::twist(F, x, sigma), gf::mul(F, x, x)));
    }
    CHECK(int(im1.size()) == F.q - 1);
    CHECK(int(im2.size()) == F.q - 1);
  }
}

TEST_CASE("multiplicative subgroups and cosets") {
  auto F7 = gf::make_field(7, 1);
  CHECK(gf::mult_subgroup(F7, 2) == std::vector<int>{1, 2, 4});

  auto F9 = gf::make_field(3, 2);
  CHECK(gf::mult_subgroup(F9, 4) == std::vector<int>{1, 2});

  for (auto [p, d] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {2, 4}, {13, 1}}) {
    auto F = gf::make_field(p, d);
    for (int m = 1; m < F.q; ++m) {
      if ((F.q - 1) % m != 0) continue;
      auto H = gf::mult_subgroup(F, m);
      CHECK(int(H.size()) * m == F.q - 1);
      // closure under multiplication
      for (int a : H)
        for (int b : H)
          CHECK(std::binary_search(H.begin(), H.end(), gf::mul(F, a, b)));
      // cosets partition the nonzero elements
      auto cosets = gf::subgroup_cosets(F, m);
      std::set<int> seen;
      for (auto& c : cosets)
        for (int x : c) seen.insert(x);
      CHECK(int(seen.size()) == F.q - 1);
      CHECK(cosets[0] == H);
    }
  }
}

TEST_CASE("bracket values and the twisted-power identity") {
  CHECK(gf::bracket(1, 0, 3) == 0);
  CHECK(gf::bracket(1, 1, 3) == 1);
  CHECK(gf::bracket(1, 2, 3) == 4);
  CHECK(gf::bracket(2, 2, 3) == 10);
  CHECK(gf::bracket(1, 3, 2) == 7);

  // x^bracket(n,i,p) equals the product of the first i twists of x by n steps
  auto F = gf::make_field(3, 4);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(1, F.q - 1);
  for (int trial = 0; trial < 200; ++trial) {
    int x = pick(rng);
    for (int n = 1; n <= 4; ++n)
      for (int i = 0; i <= 4; ++i) {
        int prod = 1;
        for (int t = 0; t < i; ++t)
          prod = gf::mul(F, prod, gf::twist(F, x, {(n * t) % F.d}));
        CHECK(gf::pow_int(F, x, gf::bracket(n, i, 3)) == prod);
      }
  }
}

TEST_CASE("divisor scans match their closed forms") {
  for (auto [p, d] : prime_powers_upto(128)) {
    i64 q = ipow(p, d);
    if (q < 3) continue;
    for (int n = 1; n <= 3; ++n) {
      auto s = gf::divisor_lemmas(q, n);
      if ((q + 1) % 3 == 0) {
        CHECK(s.cubic_with_q == std::vector<i64>{0, 3 * q});
        CHECK(s.cubic_with_1 == std::vector<i64>{0, 3});
      } else {
        CHECK(s.cubic_with_q.empty());
        CHECK(s.cubic_with_1.empty());
      }
      std::vector<i64> expect;
      for (int i = 1; i <= n; ++i) expect.push_back((ipow(q, i) - 1) / (q - 1));
      CHECK(s.geometric == expect);
      if (p == 3 && d % 2 == 1) CHECK(s.half_shift_empty);
    }
  }
  auto s5 = gf::divisor_lemmas(5, 1);
  CHECK(s5.cubic_with_q == std::vector<i64>{0, 15});
  auto s2 = gf::divisor_lemmas(2, 3);
  CHECK(s2.geometric == std::vector<i64>{1, 3, 7});
}

TEST_CASE("multiplicative order modulo an integer") {
  CHECK(gf::order_mod(5, 16) == 4);
  CHECK(gf::order_mod(2, 7) == 3);
  CHECK(gf::order_mod(3, 4) == 2);
  CHECK_THROWS_AS(gf::order_mod(6, 9), fg::error);

  CHECK(gf::prime_divisors(360) == std::vector<i64>{2, 3, 5});
  CHECK(gf::padic_ord(48, 2) == 4);
  CHECK(gf::padic_ord(48, 3) == 1);
}

TEST_CASE("order criterion against brute force") {
  // a has order exactly m modulo m(a-1) iff every prime of m divides a-1
  // and m = 0 mod 4 forces a = 1 mod 4
  for (i64 a = 2; a <= 50; ++a)
    for (i64 m = 2; m <= 24; ++m) {
      if (std::gcd(a, m) != 1) continue;
      i64 c = (a - 1) * m;
      bool brute = c > 1 && gf::order_mod(a, c) == m;
      CAPTURE(a);
      CAPTURE(m);
      CHECK(gf::order_criterion(a, m) == brute);
    }
  // spot values where the two halves of the criterion separate
  CHECK(gf::order_criterion(3, 2));
  CHECK(gf::order_criterion(7, 2));
  CHECK(gf::order_criterion(11, 10));
  CHECK(gf::order_criterion(7, 6));
  CHECK_FALSE(gf::order_criterion(3, 4));
  CHECK(gf::order_criterion(5, 4));
}
