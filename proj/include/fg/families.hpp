#pragma once

#include <string>
#include <vector>

#include "fg/gf.hpp"
#include "fg/permgrp.hpp"

namespace fg {
namespace fam {

// Point of a 2-transitive action: the fixed symbol at infinity, an affine
// coordinate tuple, a normalized projective point, or a single field scalar.
struct PointLabel {
  enum class Kind { infinity, tuple, proj, scalar };
  Kind kind = Kind::tuple;
  std::vector<int> coords;  // field element indices; empty for infinity

  friend bool operator==(const PointLabel& a, const PointLabel& b) {
    return a.kind == b.kind && a.coords == b.coords;
  }
  friend bool operator<(const PointLabel& a, const PointLabel& b) {
    if (a.kind != b.kind)
      return int(a.kind) < int(b.kind);  // infinity sorts first
    return a.coords < b.coords;
  }
};

struct ActionGroup {
  std::string family;
  int q = 0;  // defining field size (for the unitary family: the base q)
  gf::FieldSpec field;
  std::vector<PointLabel> points;
  perm::PermGroup group;
  int sigma = 0;  // canonical point
  int tau = 0;    // canonical companion, in the same orbit pattern everywhere
};

int point_index(const ActionGroup& ag, const PointLabel& label);

// Projective special linear group on the points of PG(d-1, q), d >= 3.
ActionGroup build_psl(int d, int q);

// One-dimensional semilinear and affine groups.  The stabilizer of zero is
// selected by the spec: the full semilinear group, the linear subgroup, or
// the subgroup generated by an index-m scalar subgroup together with one
// twisted map z -> g^ell * z^(p^s).
struct GammaLSpec {
  enum class Kind { full, linear, custom };
  Kind kind = Kind::full;
  int s = 1;
  int m = 1;
  int ell = 0;
};
ActionGroup build_agammal1(int q, const GammaLSpec& spec);

// Affine groups V . G_0 with G_0 = SL(n, q) or Sp(n, q) in its natural
// action; kind is "sl" or "sp".
ActionGroup build_affine_matrix(const std::string& kind, int n, int q);

// Projective special unitary group on the q^3 + 1 isotropic points.
ActionGroup build_psu3(int q);

// Suzuki group on q^2 + 1 points, q = 2^(2e+1).
ActionGroup build_suzuki(int q);
int sz_point(const ActionGroup& ag, int eta1, int eta2);

// Ree group on q^3 + 1 points, q = 3^(2e+1).
ActionGroup build_ree(int q);
int ree_point(const ActionGroup& ag, int eta1, int eta2, int eta3);

// Any transitive action given by raw generator lines; points are bare
// indices.
ActionGroup build_from_generator_text(const std::string& text);

// The distinguished stabilizer-orbit union for each family, as a sorted
// point set not containing sigma.  case_id: "" for the unitary and Suzuki
// families, "i".."iv" for the Ree family (case iv only at q = 3).
std::vector<int> canonical_block(const ActionGroup& ag,
                                 const std::string& case_id);

// Algebraic test for the case-iv set at any q = 3^(2e+1) without building
// the group: the set is a block iff c^sigma * x = c * x^sigma for all
// field elements c, x.
bool ree_case4_criterion(int q);

bool is_2transitive(const ActionGroup& ag);

}  // namespace fam
}  // namespace fg
