#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fg {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an input exceeds a documented scale bound.
struct budget_error : error {
  explicit budget_error(const std::string& what) : error(what) {}
};

namespace gf {

using i64 = std::int64_t;

// Finite field of order p^d, elements indexed 0..q-1.  The index of an
// element with coordinates c_0..c_{d-1} (c_0 = constant term) is
// sum c_i p^i, so 0 and 1 mean the field's zero and one.
struct FieldSpec {
  int p = 0;
  int d = 0;
  int q = 0;
  std::vector<int> modulus;  // monic, degree d, constant term first
  int generator = 0;         // least primitive element
  std::vector<int> exp_tab;  // exp_tab[i] = generator^i, i in [0, q-1)
  std::vector<int> log_tab;  // inverse of exp_tab on nonzero indices
};

// A field automorphism x -> x^(p^k).
struct AutPower {
  int k = 0;
};

FieldSpec make_field(int p, int d);

int add(const FieldSpec& F, int x, int y);
int sub(const FieldSpec& F, int x, int y);
int neg(const FieldSpec& F, int x);
int mul(const FieldSpec& F, int x, int y);
int inv(const FieldSpec& F, int x);
// x^e for any integer exponent; 0^e = 0 for e > 0, error on e <= 0 with x = 0.
int pow_int(const FieldSpec& F, int x, i64 e);
int twist(const FieldSpec& F, int x, const AutPower& a);

// The subgroup of index m in the cyclic group of nonzero elements,
// as a sorted element list.  Requires m | q-1.
std::vector<int> mult_subgroup(const FieldSpec& F, int m);
// Cosets g^j * H for j = 0..m-1, each sorted, in that order.
std::vector<std::vector<int>> subgroup_cosets(const FieldSpec& F, int m);

// (p^(n*i) - 1) / (p^n - 1) = 1 + p^n + ... + p^(n(i-1)); bracket(n,0,p) = 0.
i64 bracket(int n, int i, int p);

// Prime divisors of n, ascending.
std::vector<i64> prime_divisors(i64 n);
// Largest e with p^e | a.
int padic_ord(i64 a, i64 p);
// Multiplicative order of a modulo c; requires gcd(a, c) = 1.
i64 order_mod(i64 a, i64 c);

// Whether a has order exactly m modulo m*(a-1), by the closed-form
// criterion: every prime of m divides a-1, and if 4 | m then a = 1 mod 4.
bool order_criterion(i64 a, i64 m);

// Solution sets of three divisibility conditions that bound which unions
// of stabilizer-orbit lengths can divide a point-stabilizer order.
struct DivisorScan {
  std::vector<i64> cubic_with_q;  // l >= 0 with (l(q^2-1)/3 + q) | q^3, needs 3 | q+1
  std::vector<i64> cubic_with_1;  // l >= 0 with (l(q^2-1)/3 + 1) | q^3, needs 3 | q+1
  std::vector<i64> geometric;     // l >= 1 with (l(q-1) + 1) | q^n
  bool half_shift_empty = false;  // no l >= 0 with (l(q-1) + (q-1)/2 + 1) | q^n
};
DivisorScan divisor_lemmas(i64 q, int n);

}  // namespace gf
}  // namespace fg
