#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fg/octonion.hpp"

using namespace fg;
using oct::Vec;

namespace {

Vec random_vec(const oct::Algebra& A, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, A.F.q - 1);
  Vec v(8);
  for (int& x : v) x = dist(rng);
  return v;
}

Vec random_eperp(const oct::Algebra& A, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, A.F.q - 1);
  std::vector<int> c(7);
  for (int& x : c) x = dist(rng);
  return oct::eperp_vec(A, c);
}

}  // namespace

TEST_CASE("pairing of coordinates") {
  auto A = oct::make_algebra(2);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j)
      CHECK(oct::bil(A, oct::basis(i), oct::basis(j)) == (i + j == 9 ? 1 : 0));
  // polar form of the norm
  auto A4 = oct::make_algebra(4);
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    Vec a = random_vec(A4, rng), b = random_vec(A4, rng);
    int lhs = oct::bil(A4, a, b);
    int rhs = gf::add(A4.F, oct::norm(A4, oct::add(A4, a, b)),
                      gf::add(A4.F, oct::norm(A4, a), oct::norm(A4, b)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("norm is multiplicative") {
  auto A2 = oct::make_algebra(2);
  for (int ai = 0; ai < 256; ai += 3)
    for (int bi = 0; bi < 256; bi += 5) {
      Vec a(8), b(8);
      for (int k = 0; k < 8; ++k) {
        a[k] = (ai >> k) & 1;
        b[k] = (bi >> k) & 1;
      }
      CHECK(oct::norm(A2, oct::mul(A2, a, b)) ==
            gf::mul(A2.F, oct::norm(A2, a), oct::norm(A2, b)));
    }

  auto A4 = oct::make_algebra(4);
  std::mt19937 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    Vec a = random_vec(A4, rng), b = random_vec(A4, rng);
    CHECK(oct::norm(A4, oct::mul(A4, a, b)) ==
          gf::mul(A4.F, oct::norm(A4, a), oct::norm(A4, b)));
  }
}

TEST_CASE("multiplication is bilinear") {
  auto A = oct::make_algebra(4);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> dist(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    Vec a = random_vec(A, rng), b = random_vec(A, rng), c = random_vec(A, rng);
    int s = dist(rng);
    CHECK(oct::mul(A, oct::add(A, a, b), c) ==
          oct::add(A, oct::mul(A, a, c), oct::mul(A, b, c)));
    CHECK(oct::mul(A, a, oct::add(A, b, c)) ==
          oct::add(A, oct::mul(A, a, b), oct::mul(A, a, c)));
    CHECK(oct::mul(A, oct::scale(A, s, a), b) ==
          oct::scale(A, s, oct::mul(A, a, b)));
  }
}

TEST_CASE("idempotent and its polar complement") {
  auto A = oct::make_algebra(2);
  Vec e = oct::idem();
  CHECK(oct::mul(A, e, e) == e);
  CHECK(oct::norm(A, e) == 1);
  CHECK(oct::in_eperp(e));
  CHECK(oct::bil(A, e, e) == 0);

  // basis round trip
  for (int i = 0; i < 7; ++i) {
    std::vector<int> c(7, 0);
    c[i] = 1;
    Vec v = oct::eperp_vec(A, c);
    CHECK(oct::in_eperp(v));
    CHECK(oct::bil(A, v, e) == 0);
    CHECK(oct::eperp_coords(A, v) == c);
  }
  CHECK_FALSE(oct::in_eperp(oct::basis(4)));
  CHECK_THROWS_AS(oct::eperp_coords(A, oct::basis(4)), error);
}

TEST_CASE("trilinear form agrees with the product pairing") {
  for (int q : {2, 4}) {
    auto A = oct::make_algebra(q);
    std::vector<Vec> bs;
    for (int i = 0; i < 7; ++i) {
      std::vector<int> c(7, 0);
      c[i] = 1;
      bs.push_back(oct::eperp_vec(A, c));
    }
    for (const auto& a : bs)
      for (const auto& b : bs)
        for (const auto& c : bs)
          CHECK(oct::triple(A, a, b, c) ==
                oct::bil(A, oct::mul(A, a, b), c));
  }
  auto A = oct::make_algebra(4);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Vec a = random_eperp(A, rng), b = random_eperp(A, rng),
        c = random_eperp(A, rng);
    CHECK(oct::triple(A, a, b, c) == oct::bil(A, oct::mul(A, a, b), c));
  }
  CHECK_THROWS_AS(oct::triple(A, oct::basis(4), oct::basis(1), oct::basis(2)),
                  error);
}

TEST_CASE("trilinear form is symmetric") {
  auto A = oct::make_algebra(4);
  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Vec a = random_eperp(A, rng), b = random_eperp(A, rng),
        c = random_eperp(A, rng);
    int t = oct::triple(A, a, b, c);
    CHECK(t == oct::triple(A, b, a, c));
    CHECK(t == oct::triple(A, c, b, a));
    CHECK(t == oct::triple(A, a, c, b));
  }
}

TEST_CASE("annihilator subspaces") {
  for (int q : {2, 4}) {
    auto A = oct::make_algebra(q);
    auto d1 = oct::delta_subspace(A, oct::basis(1));
    CHECK(d1 == std::vector<Vec>{oct::basis(1), oct::basis(2), oct::basis(3)});
    auto d2 = oct::delta_subspace(A, oct::basis(2));
    CHECK(d2 == std::vector<Vec>{oct::basis(1), oct::basis(2), oct::basis(6)});

    // membership property: every reported vector annihilates everything
    std::vector<Vec> zs;
    for (int i = 0; i < 7; ++i) {
      std::vector<int> c(7, 0);
      c[i] = 1;
      zs.push_back(oct::eperp_vec(A, c));
    }
    for (const auto& y : d1)
      for (const auto& z : zs) CHECK(oct::triple(A, oct::basis(1), y, z) == 0);
  }
}
