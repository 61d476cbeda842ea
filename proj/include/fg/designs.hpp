#pragma once

#include <utility>
#include <vector>

#include "fg/families.hpp"

namespace fg {
namespace des {

// 2-design built from one stabilizer block: the base line is the canonical
// point together with the block, and the block set is its full orbit.
struct Design {
  int u = 0;            // points
  int k = 0;            // line size
  int lambda = 0;       // lines through a point pair
  int replication = 0;  // lines through a point
  std::vector<std::vector<int>> blocks;  // sorted sets, lexicographic order
};

Design design_from_block(const fam::ActionGroup& ag,
                         const std::vector<int>& partial);

// pair count predicted from the line stabilizer: 1 when the set stabilizer
// of the base line moves the canonical point, else the full line size
int predict_lambda(const fam::ActionGroup& ag, const std::vector<int>& partial);

struct Flag {
  int point = 0;
  int block = 0;
  friend bool operator==(const Flag& a, const Flag& b) {
    return a.point == b.point && a.block == b.block;
  }
};

// orbit of incident point-line pairs, with the three admissibility marks:
// each point carries at least two flags, the two-point stabilizer acts
// transitively along the line, and distinct lines at a point meet only there
struct FlagOrbit {
  std::vector<int> flags;  // flag ids (block * k + slot), sorted
  int rho = 0;             // flags per point
  bool doubly_covered = false;
  bool stabilizer_transitive = false;
  bool clean_intersections = false;
  Flag rep;  // representative at the canonical point

  bool admissible() const {
    return doubly_covered && stabilizer_transitive && clean_intersections;
  }
};

std::vector<FlagOrbit> flag_orbits(const fam::ActionGroup& ag, const Design& D);

// single-orbit path for large designs: the orbit of one flag
FlagOrbit flag_orbit_of(const fam::ActionGroup& ag, const Design& D, Flag f);

struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // a < b, sorted
  std::vector<Flag> verts;                 // flag per vertex
  std::vector<int> component_sizes;        // descending
  int valency = 0;
};

// vertices are the orbit flags; each flag joins the unique orbit flag at
// every other point of its line whose own line returns to the flag's point
Graph flag_graph(const fam::ActionGroup& ag, const Design& D,
                 const FlagOrbit& orbit);

// fibre structure over the point set: equal fibres, no edge inside a
// fibre, exactly one edge between any two fibres
struct SpreadShape {
  int u = 0;      // fibres
  int v = 0;      // fibre size
  int r = 0;      // vertex valency
  gf::i64 b = 0;  // edges meeting one fibre, equals v * r
  int k = 1;      // edges between two fibres
};
SpreadShape spread_check(const fam::ActionGroup& ag, const Graph& G);

// the same graph as cosets: vertex count against the flag stabilizer,
// component count against the subgroup closing one edge
struct CosetCheck {
  gf::i64 t_order = 0;
  gf::i64 omega = 0;
  gf::i64 components = 0;
};
CosetCheck coset_cross_check(const fam::ActionGroup& ag, const Design& D,
                             const FlagOrbit& orbit, const Graph& G);

}  // namespace des
}  // namespace fg
