#pragma once

#include <sstream>
#include <string>

#include "qlab/quiver.hpp"

namespace qlab {

inline std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// GraphViz export; node and edge order follow the declared quiver order so
/// output is stable.
inline std::string to_dot(const Quiver& q, const std::string& name = "Q") {
  std::ostringstream os;
  os << "digraph " << quote_dot(name) << " {\n";
  for (const auto& v : q.vertices()) os << "  " << quote_dot(v) << ";\n";
  for (const Arrow& a : q.arrows())
    os << "  " << quote_dot(a.from) << " -> " << quote_dot(a.to) << " [label=" << quote_dot(a.id)
       << "];\n";
  os << "}\n";
  return os.str();
}

inline std::string to_dot(const BoundQuiver& bq, const std::string& name = "Q") {
  return to_dot(bq.quiver(), name);
}

}  // namespace qlab
