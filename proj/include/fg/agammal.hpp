#pragma once

#include <vector>

#include "fg/families.hpp"

namespace fg {
namespace agl {

// zero-stabilizer shape inside the one-dimensional semilinear group:
// the index-m scalar subgroup extended by z -> g^ell * z^(p^s); s = d
// with m = 1 is the purely affine case
struct Structure {
  int q = 0, p = 0, d = 0;
  int s = 1, m = 1, ell = 0;

  gf::i64 stab_order() const {
    return gf::i64(q - 1) / m * (d / s);
  }
  fam::GammaLSpec spec() const;
};

std::vector<Structure> enumerate_structures(int q);

// nontrivial proper blocks through 1 of the zero stabilizer, generated
// from the coset parametrization; sorted by size then lexicographically,
// matching the order of the generic block search
std::vector<std::vector<int>> census_blocks(const gf::FieldSpec& F,
                                            const Structure& st);

struct Prediction {
  int lambda = 0;
  bool subfield = false;       // P with 0 is a subfield, forcing lambda 1
  gf::i64 components = 0;      // component count of the flag graph
  gf::i64 flag_stab_order = 0;  // |K| d / (e s)
  bool connected_rule = false;  // half-index subgroup, p = 3 mod 4, d odd
};
Prediction predict(const gf::FieldSpec& F, const Structure& st,
                   const std::vector<int>& P);

bool is_mult_subgroup(const gf::FieldSpec& F, const std::vector<int>& P);
bool is_subfield_line(const gf::FieldSpec& F, const std::vector<int>& P);

}  // namespace agl
}  // namespace fg
