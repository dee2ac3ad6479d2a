#pragma once

#include <string>
#include <utility>
#include <vector>

#include "possat/model.hpp"

namespace possat {

/// Cover pairs (lower, upper) as member indices in canonical order: A < B
/// with no member strictly between them.
std::vector<std::pair<std::size_t, std::size_t>> cover_relations(const SetFamily& family);

/// DOT digraph of the family's Hasse diagram, edges pointing upward.
std::string emit_hasse(const SetFamily& family);

}  // namespace possat
