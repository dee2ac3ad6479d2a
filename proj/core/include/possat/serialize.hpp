#pragma once

#include <string>

#include "possat/embedding.hpp"
#include "possat/saturation.hpp"
#include "possat/solver.hpp"
#include "possat/theorems.hpp"

namespace possat {

// Compact single-line JSON documents. Key order is fixed.

std::string to_json(const EmbeddingWitness& w);
std::string to_json(const SaturationReport& r);
std::string to_json(const TheoremReport& r);
/// `with_timing` = false drops elapsed_ms for byte-stable output.
std::string to_json(const SolveResult& r, bool with_timing = true);
std::string to_json(const PosetSpec& q);

}  // namespace possat
