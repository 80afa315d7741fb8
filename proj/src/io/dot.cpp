#include <set>
#include <sstream>

#include "precubical/model_io.hpp"

namespace precubical {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Complex& p, const std::optional<std::string>& name) {
  if (p.num_levels() > 3) throw DimensionUnsupported("DOT export supports dimension <= 2 only");
  std::ostringstream os;
  os << "digraph " << quoted(name.value_or("precubical")) << " {\n";
  os << "  node [shape=circle];\n";
  for (const auto& [v, _] : p.level(0)) {
    os << "  " << quoted(v) << " [label=" << quoted(v);
    if (auto it = p.positions().find({0, v}); it != p.positions().end()) {
      os << ", pos=\"" << it->second.x << "," << it->second.y << "!\"";
    }
    os << "];\n";
  }
  std::set<std::string> bounding;
  for (const auto& [s, f] : p.level(2)) {
    for (const auto& pair : f) bounding.insert(pair.begin(), pair.end());
  }
  for (const auto& [e, f] : p.level(1)) {
    os << "  " << quoted(f[0][0]) << " -> " << quoted(f[0][1]) << " [label=" << quoted(e) << "];\n";
  }
  // Midpoint anchors for edges that bound a square.
  for (const auto& e : bounding) {
    const auto& f = p.level(1).at(e);
    os << "  " << quoted("mid:" + e) << " [shape=point, width=0.05, xlabel=" << quoted(e);
    auto from = p.positions().find({0, f[0][0]});
    auto to = p.positions().find({0, f[0][1]});
    if (from != p.positions().end() && to != p.positions().end()) {
      os << ", pos=\"" << (from->second.x + to->second.x) / 2.0 << "," << (from->second.y + to->second.y) / 2.0
         << "!\"";
    }
    os << "];\n";
  }
  for (const auto& [s, f] : p.level(2)) {
    os << "  // square " << s << ": [" << f[0][0] << " " << f[0][1] << " " << f[1][0] << " " << f[1][1]
       << "]\n";
    os << "  " << quoted("square:" + s) << " [shape=plaintext, label=" << quoted(s) << "];\n";
    for (const auto& pair : f) {
      for (const auto& e : pair) {
        os << "  " << quoted("square:" + s) << " -> " << quoted("mid:" + e)
           << " [style=dashed, dir=none, constraint=false];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace precubical
