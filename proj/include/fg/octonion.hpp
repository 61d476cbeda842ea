#pragma once

#include <vector>

#include "fg/gf.hpp"

namespace fg {
namespace oct {

// Split octonion algebra over a field of characteristic 2, in the basis
// x1..x8 whose multiplication sends basis pairs to basis elements or zero.
// Vectors hold eight field element indices, coordinate i for x_(i+1).

using Vec = std::vector<int>;

struct Algebra {
  gf::FieldSpec F;
};

Algebra make_algebra(int q);

Vec zero();
Vec basis(int i);  // 1-based, matching the classical labels x1..x8
Vec add(const Algebra& A, const Vec& a, const Vec& b);
Vec scale(const Algebra& A, int c, const Vec& a);
Vec mul(const Algebra& A, const Vec& a, const Vec& b);

// quadratic norm a1 a8 + a2 a7 + a3 a6 + a4 a5 and its polar form
int norm(const Algebra& A, const Vec& a);
int bil(const Algebra& A, const Vec& a, const Vec& b);

// the idempotent e = x4 + x5 and its polar complement, a 7-space with
// ordered basis x1, x8, x2, x7, x3, x6, e
Vec idem();
bool in_eperp(const Vec& a);
Vec eperp_vec(const Algebra& A, const std::vector<int>& coords7);
std::vector<int> eperp_coords(const Algebra& A, const Vec& a);

// trilinear form on the polar complement; throws off it
int triple(const Algebra& A, const Vec& a, const Vec& b, const Vec& c);

// { y : triple(x, y, z) = 0 for all z }, as a reduced-echelon basis of
// ambient vectors (unique, rows ordered by pivot)
std::vector<Vec> delta_subspace(const Algebra& A, const Vec& x);

}  // namespace oct
}  // namespace fg
