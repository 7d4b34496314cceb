#include "semidyn/dot_export.hpp"

#include <sstream>

namespace semidyn {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string groupoid_dot(const FiniteGroupoid& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << escape(name) << "\" {\n";
  std::vector<int> node(g.size(), -1);
  for (size_t i = 0; i < g.units().size(); ++i) {
    int u = g.units()[i];
    node[u] = static_cast<int>(i);
    os << "  n" << i << " [label=\"" << escape(g.label(u)) << "\"];\n";
  }
  for (int x = 0; x < g.size(); ++x) {
    if (g.is_unit(x)) continue;
    os << "  n" << node[g.d(x)] << " -> n" << node[g.r(x)] << " [label=\""
       << escape(g.label(x)) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string germ_dot(const GermGroupoid& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << escape(name) << "\" {\n";
  for (int p = 0; p < g.base.space().size(); ++p)
    os << "  n" << p << " [label=\"" << escape(g.base.space().points[p])
       << "\"];\n";
  for (int arrow = 0; arrow < g.size(); ++arrow) {
    auto [rep_elem, sigma] = g.representative(arrow);
    os << "  n" << sigma << " -> n" << g.target_point(arrow) << " [label=\""
       << escape(g.base.sg().label(rep_elem)) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace semidyn
