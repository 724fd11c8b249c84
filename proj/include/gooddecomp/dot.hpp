#pragma once

#include <optional>
#include <sstream>

#include "gooddecomp/decomposition.hpp"
#include "gooddecomp/graph.hpp"

namespace gooddecomp {

// DOT export. With a decomposition, each edge carries fixed attributes:
//   part=tree         color=black  style=solid
//   part=matching     color=red    style=dashed
//   part=tworegular   color=blue   style=bold
// Edges appear once, in canonical order.

inline std::string to_dot(const Graph& g, const std::optional<Decomposition>& d = std::nullopt) {
  std::ostringstream out;
  out << "graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  std::map<Edge, const char*> part;
  if (d) {
    const auto rep = verify(g, *d);
    if (!rep.ok) {
      std::string msg = "to_dot: decomposition fails verification:";
      for (const auto& [code, detail] : rep.violations)
        msg += std::string(" [") + to_string(code) + "] " + detail;
      throw GraphError(msg);
    }
    for (const Edge& e : d->tree) part[e] = "tree";
    for (const Edge& e : d->matching) part[e] = "matching";
    for (const Edge& e : d->two_regular) part[e] = "tworegular";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (d) {
      const char* p = part.at(e);
      const char* color = "black";
      const char* style = "solid";
      if (p[0] == 'm') { color = "red"; style = "dashed"; }
      else if (p[0] == 't' && p[1] == 'w') { color = "blue"; style = "bold"; }
      out << " [part=" << p << ", color=" << color << ", style=" << style << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gooddecomp
