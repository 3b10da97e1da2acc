#pragma once

#include <sstream>
#include <string>

#include "grabgraph/document.hpp"

namespace grab {

/// Graphviz rendering: weights as node labels, blow-up classes as
/// subgraph clusters. Output order is fixed, so equal documents export
/// byte-identically.
inline std::string to_dot(const GraphDocument& d) {
  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle];\n";
  std::vector<char> in_class(static_cast<size_t>(d.n), 0);
  if (d.classes) {
    for (size_t i = 0; i < d.classes->size(); ++i) {
      out << "  subgraph cluster_" << i << " {\n";
      out << "    label=\"V" << i + 1 << "\";\n";
      for (int v : (*d.classes)[i]) {
        out << "    v" << v << " [label=\"" << v << "\\nw=" << d.weights[static_cast<size_t>(v)].str()
            << "\"];\n";
        in_class[static_cast<size_t>(v)] = 1;
      }
      out << "  }\n";
    }
  }
  for (int v = 0; v < d.n; ++v)
    if (!in_class[static_cast<size_t>(v)])
      out << "  v" << v << " [label=\"" << v << "\\nw=" << d.weights[static_cast<size_t>(v)].str()
          << "\"];\n";
  for (auto [u, v] : d.edges) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace grab
