#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fg/designs.hpp"

namespace fg {
namespace rep {

struct Summary {
  std::string family;
  int q = 0;
  std::string case_id;
  int u = 0;
  int k = 0;
  int lambda = 0;
  gf::i64 omega_size = 0;
  int valency = 0;
  std::vector<int> components;
  des::SpreadShape spread;
};

Summary summarize(const fam::ActionGroup& ag, const std::string& case_id,
                  const des::Design& d, const des::FlagOrbit& omega,
                  const des::Graph& g, const des::SpreadShape& spread);

std::string to_json(const Summary& s);

std::string label_text(const fam::PointLabel& l);

// graphviz form; each vertex is labeled "point|line" with the point shown
// by its label text and the line by its design index
void write_dot(std::ostream& os, const fam::ActionGroup& ag,
               const des::Graph& g);

// one "a b" line per edge
void write_edge_list(std::ostream& os, const des::Graph& g);

}  // namespace rep
}  // namespace fg
