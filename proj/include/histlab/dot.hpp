#pragma once

#include <stdexcept>
#include <string>

#include "histlab/graph.hpp"
#include "histlab/roles.hpp"

namespace histlab {

// DOT text for the graph; deterministic: node statements ascend by id and
// edge statements follow canonical (min,max) lexicographic order. Node
// statements are emitted only when role labels are supplied.
inline std::string emit_dot(const Graph& g, const RoleLabels* labels = nullptr) {
  if (labels && labels->vertex_count() != g.vertex_count())
    throw std::invalid_argument("emit_dot: labels do not match graph");
  std::string out = "graph {\n";
  if (labels) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const Role r = labels->role[static_cast<std::size_t>(v)];
      std::string text(role_name(r));
      if (const int b = labels->block[static_cast<std::size_t>(v)]; b > 0)
        text += "#" + std::to_string(b);
      out += "  " + std::to_string(v) + " [label=\"" + text + "\"];\n";
    }
  }
  for (const Edge& e : g.edges())
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace histlab
