#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace possat {

/// Largest supported ground set. Exhaustive loops over 2^[n] stay below 2^24.
inline constexpr int kMaxGroundSize = 24;

/// The ground set [n] = {1, ..., n}.
class GroundSet {
 public:
  explicit GroundSet(int n);

  int size() const noexcept { return n_; }
  std::uint32_t full_mask() const noexcept { return (std::uint32_t{1} << n_) - 1; }
  std::uint32_t subset_count() const noexcept { return std::uint32_t{1} << n_; }

  bool operator==(const GroundSet&) const = default;

 private:
  int n_;
};

/// One subset of [n]. Element i lives at bit i-1.
class SubsetMask {
 public:
  SubsetMask(GroundSet ground, std::uint32_t bits);

  static SubsetMask empty(GroundSet ground) { return {ground, 0}; }
  static SubsetMask full(GroundSet ground) { return {ground, ground.full_mask()}; }
  /// From 1-indexed elements.
  static SubsetMask of(GroundSet ground, std::span<const int> elements);
  static SubsetMask of(GroundSet ground, std::initializer_list<int> elements) {
    return of(ground, std::span<const int>(elements.begin(), elements.size()));
  }
  /// The prefix {1, ..., i}.
  static SubsetMask prefix(GroundSet ground, int i);

  GroundSet ground() const noexcept { return ground_; }
  std::uint32_t bits() const noexcept { return bits_; }
  int cardinality() const noexcept { return std::popcount(bits_); }
  bool contains(int element) const noexcept {
    return element >= 1 && element <= ground_.size() && ((bits_ >> (element - 1)) & 1U);
  }
  std::vector<int> elements() const;

  bool operator==(const SubsetMask&) const = default;

 private:
  std::uint32_t bits_;
  GroundSet ground_;
};

/// Canonical order: cardinality first, then numeric mask value.
inline bool canonical_less(std::uint32_t a, std::uint32_t b) noexcept {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  return ca != cb ? ca < cb : a < b;
}

inline bool is_proper_subset(std::uint32_t a, std::uint32_t b) noexcept {
  return a != b && (a & ~b) == 0;
}

inline bool is_incomparable(std::uint32_t a, std::uint32_t b) noexcept {
  return (a & ~b) != 0 && (b & ~a) != 0;
}

enum class Relation { ProperSubset, ProperSuperset, Equal, Incomparable };

/// Containment relation of a to b. Throws UsageError on mismatched ground sets.
Relation subset_relation(SubsetMask a, SubsetMask b);

std::string to_string(Relation r);

/// "{1,3,4}" with 1-indexed elements; "{}" for the empty set.
std::string to_string(SubsetMask s);
std::string format_bits(std::uint32_t bits);

/// All 2^n subsets of [n] in canonical order.
std::vector<std::uint32_t> canonical_subsets(GroundSet ground);

/// Deduplicated family of subsets over one ground set, kept in canonical order.
class SetFamily {
 public:
  explicit SetFamily(GroundSet ground) : ground_(ground) {}
  SetFamily(GroundSet ground, std::span<const SubsetMask> members);
  SetFamily(GroundSet ground, std::initializer_list<SubsetMask> members)
      : SetFamily(ground, std::span<const SubsetMask>(members.begin(), members.size())) {}

  static SetFamily from_bits(GroundSet ground, std::vector<std::uint32_t> bits);
  static SetFamily power_set(GroundSet ground);

  GroundSet ground() const noexcept { return ground_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  std::span<const std::uint32_t> bits() const noexcept { return bits_; }
  SubsetMask operator[](std::size_t i) const { return {ground_, bits_[i]}; }
  std::vector<SubsetMask> members() const;

  bool contains(SubsetMask s) const;
  bool contains_bits(std::uint32_t bits) const;

  /// This family with one more set (no-op if already present).
  SetFamily with(SubsetMask s) const;
  void insert(SubsetMask s);

  /// Subsets of [n] outside the family, canonical order.
  std::vector<SubsetMask> missing() const;

  bool operator==(const SetFamily&) const = default;

 private:
  GroundSet ground_;
  std::vector<std::uint32_t> bits_;
};

/// Lexicographic comparison of canonical member lists, after size.
bool family_less(const SetFamily& a, const SetFamily& b);

}  // namespace possat
