#include "fg/report.hpp"

#include <ostream>

#include "json.hpp"

namespace fg {
namespace rep {

Summary summarize(const fam::ActionGroup& ag, const std::string& case_id,
                  const des::Design& d, const des::FlagOrbit& omega,
                  const des::Graph& g, const des::SpreadShape& spread) {
  Summary s;
  s.family = ag.family;
  s.q = ag.q;
  s.case_id = case_id;
  s.u = d.u;
  s.k = d.k;
  s.lambda = d.lambda;
  s.omega_size = gf::i64(omega.flags.size());
  s.valency = g.valency;
  s.components = g.component_sizes;
  s.spread = spread;
  return s;
}

std::string to_json(const Summary& s) {
  nlohmann::json j;
  j["family"] = s.family;
  j["q"] = s.q;
  j["case"] = s.case_id;
  j["u"] = s.u;
  j["k"] = s.k;
  j["lambda"] = s.lambda;
  j["omega_size"] = s.omega_size;
  j["valency"] = s.valency;
  j["components"] = s.components;
  j["spread"] = {{"v", s.spread.v},
                 {"r", s.spread.r},
                 {"b", s.spread.b},
                 {"k", s.spread.k}};
  return j.dump();
}

std::string label_text(const fam::PointLabel& l) {
  if (l.kind == fam::PointLabel::Kind::infinity) return "inf";
  char sep = l.kind == fam::PointLabel::Kind::proj ? ':' : ',';
  std::string out;
  for (size_t i = 0; i < l.coords.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(l.coords[i]);
  }
  return out;
}

void write_dot(std::ostream& os, const fam::ActionGroup& ag,
               const des::Graph& g) {
  os << "graph flag_graph {\n  node [shape=box];\n";
  for (int i = 0; i < g.n; ++i)
    os << "  v" << i << " [label=\"" << label_text(ag.points[g.verts[i].point])
       << '|' << g.verts[i].block << "\"];\n";
  for (const auto& [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
}

void write_edge_list(std::ostream& os, const des::Graph& g) {
  for (const auto& [a, b] : g.edges) os << a << ' ' << b << '\n';
}

}  // namespace rep
}  // namespace fg
