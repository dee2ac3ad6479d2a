#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "possat/model.hpp"
#include "possat/poset.hpp"

namespace possat {

/// Family text format: one set per line, either 1-indexed integers separated
/// by commas and/or spaces inside optional braces ("{1,3,4}", "1 3 4"), or a
/// 0x-prefixed hex mask. "{}" is the empty set; blank lines and '#' comments
/// are skipped. When `n` is not given the ground set is [max element seen]
/// (at least [1]). Throws UsageError with the line number on bad input.
SetFamily parse_family(std::string_view text, std::optional<int> n = std::nullopt);
SetFamily read_family_file(const std::filesystem::path& path, std::optional<int> n = std::nullopt);

/// Canonical order, one "{...}" per line.
std::string format_family(const SetFamily& family);

/// One set in the same syntax as a family line.
SubsetMask parse_subset(std::string_view text, GroundSet ground);

/// {"size": m, "less": [[a, b], ...]} with optional "labels" and "name";
/// pairs are 0-indexed and closed transitively before validation.
PosetSpec parse_poset_json(std::string_view text);
PosetSpec read_poset_file(const std::filesystem::path& path);

}  // namespace possat
