#include "possat/hasse.hpp"

#include <sstream>

namespace possat {

std::vector<std::pair<std::size_t, std::size_t>> cover_relations(const SetFamily& family) {
  const auto m = family.bits();
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t lo = 0; lo < m.size(); ++lo) {
    for (std::size_t hi = 0; hi < m.size(); ++hi) {
      if (!is_proper_subset(m[lo], m[hi])) continue;
      bool direct = true;
      for (std::size_t mid = 0; mid < m.size() && direct; ++mid) {
        direct = !(is_proper_subset(m[lo], m[mid]) && is_proper_subset(m[mid], m[hi]));
      }
      if (direct) covers.emplace_back(lo, hi);
    }
  }
  return covers;
}

std::string emit_hasse(const SetFamily& family) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < family.size(); ++i) {
    os << "  s" << i << " [label=\"" << to_string(family[i]) << "\"];\n";
  }
  for (auto [lo, hi] : cover_relations(family)) os << "  s" << lo << " -> s" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace possat
