#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "possat/model.hpp"
#include "possat/poset.hpp"

namespace possat {

/// Injective map poset element -> family member whose image reproduces the
/// poset's comparabilities and incomparabilities exactly.
struct EmbeddingWitness {
  PosetSpec poset;
  std::vector<SubsetMask> assignment;  // indexed by poset element
};

/// Independent relation-by-relation recheck of a candidate assignment.
bool is_induced_copy(const PosetSpec& q, std::span<const std::uint32_t> images);
bool is_induced_copy(const EmbeddingWitness& w);

/// Backtracking search for induced copies of one poset.
///
/// Poset elements are visited by descending degree (ties by index) and each
/// element's candidates are filtered by cardinality: an element with h
/// elements below it in a chain needs an image of at least h elements, and
/// symmetrically from above. Members are tried in the order given, so with a
/// canonically ordered member list the first witness found is reproducible.
///
/// The finder works on raw member masks so that callers in hot loops can
/// test `members + {forced}` without materialising a new family.
class CopyFinder {
 public:
  CopyFinder(const PosetSpec& q, GroundSet ground);

  /// First induced copy among `members`. When `forced` is given, it is placed
  /// at each poset position in turn (index order) and must be part of the
  /// image; it need not appear in `members`.
  std::optional<std::vector<std::uint32_t>> find(
      std::span<const std::uint32_t> members,
      std::optional<std::uint32_t> forced = std::nullopt) const;

  bool exists(std::span<const std::uint32_t> members,
              std::optional<std::uint32_t> forced = std::nullopt) const {
    return find(members, forced).has_value();
  }

  /// Number of distinct image sets, stopping once `cap` is reached.
  std::size_t count_images(std::span<const std::uint32_t> members, std::size_t cap) const;

  const PosetSpec& poset() const noexcept { return q_; }

 private:
  PosetSpec q_;
  GroundSet ground_;
  std::vector<int> order_;
  std::vector<int> min_card_;
  std::vector<int> max_card_;
};

/// Induced copy of `q` inside `family`, using `required` as one of the
/// images when given. Throws UsageError if `required` is not a member.
std::optional<EmbeddingWitness> find_induced_copy(const SetFamily& family, const PosetSpec& q,
                                                  std::optional<SubsetMask> required = std::nullopt);

/// Number of distinct member sets that carry an induced copy of `q`
/// (assignments differing by an automorphism of `q` count once), truncated at
/// `cap`. Throws UsageError when cap is zero.
std::size_t count_induced_copies(const SetFamily& family, const PosetSpec& q, std::size_t cap);

}  // namespace possat
