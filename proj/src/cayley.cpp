#include "cannon/cayley.hpp"

#include <map>
#include <sstream>

namespace cannon {

std::string export_dot(const DistanceMap& map) {
  const auto nodes = map.sorted();
  std::map<GroupElement, std::size_t> id;
  for (std::size_t i = 0; i < nodes.size(); ++i) id.emplace(nodes[i].first, i);

  std::ostringstream out;
  out << "digraph cayley {\n";
  out << "  edge [dir=none];\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << nodes[i].first.to_string() << "\"];\n";
  }
  // a-edges are emitted along their a direction; a t-edge from its bottom end.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const GroupElement& g = nodes[i].first;
    if (auto it = id.find(step(g, Letter::a)); it != id.end()) {
      out << "  n" << i << " -> n" << it->second << " [label=\"a\"];\n";
    }
    if (g.layer == Layer::bottom) {
      if (auto it = id.find(step(g, Letter::t)); it != id.end()) {
        out << "  n" << i << " -> n" << it->second << " [label=\"t\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cannon
