#pragma once

#include <string>
#include <utility>
#include <vector>

namespace possat {

using RelationMatrix = std::vector<std::vector<bool>>;

/// A finite poset stored as its full strict order: less(a, b) iff a < b.
///
/// Instances are only produced by validate_poset and the builders below, so
/// irreflexivity, antisymmetry and transitivity always hold.
class PosetSpec {
 public:
  int size() const noexcept { return size_; }
  bool less(int a, int b) const { return less_[index(a, b)] != 0; }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

  /// Number of strict pairs a < b.
  int relation_count() const noexcept { return relation_count_; }
  /// Number of elements related to `a` in either direction.
  int degree(int a) const;
  /// Longest chain strictly below `a` (number of elements).
  int height(int a) const;
  /// Longest chain strictly above `a` (number of elements).
  int depth(int a) const;

  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }

  RelationMatrix matrix() const;
  std::vector<std::pair<int, int>> strict_pairs() const;

  bool operator==(const PosetSpec&) const = default;

 private:
  friend PosetSpec validate_poset(const RelationMatrix&, std::vector<std::string>, std::string);

  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(b);
  }

  int size_ = 0;
  int relation_count_ = 0;
  std::vector<unsigned char> less_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Checks a square strict-order matrix. On failure throws ValidationError
/// listing every offending cell (reflexive, antisymmetric and transitive
/// violations), not just the first one.
PosetSpec validate_poset(const RelationMatrix& raw, std::vector<std::string> labels = {},
                         std::string name = {});

/// Builds the transitive closure of the given strict pairs (0-indexed) and
/// validates it. A cycle surfaces as a reflexivity violation.
PosetSpec poset_from_pairs(int size, const std::vector<std::pair<int, int>>& less,
                           std::vector<std::string> labels = {}, std::string name = {});

/// `bottoms` pairwise incomparable minimal elements, each below all of the
/// `tops` pairwise incomparable maximal elements. (2,2) is the butterfly;
/// (k,2) is K_{2,k}; (k,k) is K_{k,k}.
PosetSpec complete_bipartite_poset(int bottoms, int tops);

PosetSpec butterfly_poset();

/// Elements a, b, c, d with a < b, c < b, c < d and nothing else.
PosetSpec n_poset();

PosetSpec chain_poset(int length);
PosetSpec antichain_poset(int width);

}  // namespace possat
