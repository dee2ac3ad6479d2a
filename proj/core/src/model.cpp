#include "possat/model.hpp"

#include <algorithm>
#include <sstream>

#include "possat/errors.hpp"

namespace possat {

GroundSet::GroundSet(int n) : n_(n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw UsageError("ground set size must be in [1, " + std::to_string(kMaxGroundSize) +
                     "], got " + std::to_string(n));
  }
}

SubsetMask::SubsetMask(GroundSet ground, std::uint32_t bits) : bits_(bits), ground_(ground) {
  if ((bits & ~ground.full_mask()) != 0) {
    throw UsageError("mask " + format_bits(bits) + " has elements outside [" +
                     std::to_string(ground.size()) + "]");
  }
}

SubsetMask SubsetMask::of(GroundSet ground, std::span<const int> elements) {
  std::uint32_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > ground.size()) {
      throw UsageError("element " + std::to_string(e) + " outside [" +
                       std::to_string(ground.size()) + "]");
    }
    bits |= std::uint32_t{1} << (e - 1);
  }
  return {ground, bits};
}

SubsetMask SubsetMask::prefix(GroundSet ground, int i) {
  if (i < 0 || i > ground.size()) {
    throw UsageError("prefix length " + std::to_string(i) + " outside [0, " +
                     std::to_string(ground.size()) + "]");
  }
  return {ground, (std::uint32_t{1} << i) - 1};
}

std::vector<int> SubsetMask::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

Relation subset_relation(SubsetMask a, SubsetMask b) {
  if (a.ground() != b.ground()) {
    throw UsageError("subset_relation: masks over [" + std::to_string(a.ground().size()) +
                     "] and [" + std::to_string(b.ground().size()) + "]");
  }
  const std::uint32_t x = a.bits();
  const std::uint32_t y = b.bits();
  if (x == y) return Relation::Equal;
  if ((x & ~y) == 0) return Relation::ProperSubset;
  if ((y & ~x) == 0) return Relation::ProperSuperset;
  return Relation::Incomparable;
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::ProperSubset: return "subset";
    case Relation::ProperSuperset: return "superset";
    case Relation::Equal: return "equal";
    case Relation::Incomparable: return "incomparable";
  }
  return "?";
}

std::string format_bits(std::uint32_t bits) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::uint32_t rest = bits; rest != 0; rest &= rest - 1) {
    if (!first) os << ',';
    os << std::countr_zero(rest) + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string to_string(SubsetMask s) { return format_bits(s.bits()); }

std::vector<std::uint32_t> canonical_subsets(GroundSet ground) {
  std::vector<std::uint32_t> all(ground.subset_count());
  for (std::uint32_t m = 0; m < all.size(); ++m) all[m] = m;
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

SetFamily::SetFamily(GroundSet ground, std::span<const SubsetMask> members) : ground_(ground) {
  bits_.reserve(members.size());
  for (const auto& s : members) {
    if (s.ground() != ground) {
      throw UsageError("family member " + to_string(s) + " is over [" +
                       std::to_string(s.ground().size()) + "], family over [" +
                       std::to_string(ground.size()) + "]");
    }
    bits_.push_back(s.bits());
  }
  std::sort(bits_.begin(), bits_.end(), canonical_less);
  bits_.erase(std::unique(bits_.begin(), bits_.end()), bits_.end());
}

SetFamily SetFamily::from_bits(GroundSet ground, std::vector<std::uint32_t> bits) {
  SetFamily f(ground);
  for (std::uint32_t b : bits) {
    if ((b & ~ground.full_mask()) != 0) {
      throw UsageError("mask " + format_bits(b) + " has elements outside [" +
                       std::to_string(ground.size()) + "]");
    }
  }
  std::sort(bits.begin(), bits.end(), canonical_less);
  bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
  f.bits_ = std::move(bits);
  return f;
}

SetFamily SetFamily::power_set(GroundSet ground) {
  SetFamily f(ground);
  f.bits_ = canonical_subsets(ground);
  return f;
}

std::vector<SubsetMask> SetFamily::members() const {
  std::vector<SubsetMask> out;
  out.reserve(bits_.size());
  for (std::uint32_t b : bits_) out.emplace_back(ground_, b);
  return out;
}

bool SetFamily::contains_bits(std::uint32_t bits) const {
  return std::binary_search(bits_.begin(), bits_.end(), bits, canonical_less);
}

bool SetFamily::contains(SubsetMask s) const {
  return s.ground() == ground_ && contains_bits(s.bits());
}

void SetFamily::insert(SubsetMask s) {
  if (s.ground() != ground_) {
    throw UsageError("cannot insert " + to_string(s) + " over [" +
                     std::to_string(s.ground().size()) + "] into a family over [" +
                     std::to_string(ground_.size()) + "]");
  }
  auto it = std::lower_bound(bits_.begin(), bits_.end(), s.bits(), canonical_less);
  if (it == bits_.end() || *it != s.bits()) bits_.insert(it, s.bits());
}

SetFamily SetFamily::with(SubsetMask s) const {
  SetFamily out = *this;
  out.insert(s);
  return out;
}

std::vector<SubsetMask> SetFamily::missing() const {
  std::vector<SubsetMask> out;
  out.reserve(ground_.subset_count() - bits_.size());
  auto it = bits_.begin();
  for (std::uint32_t m : canonical_subsets(ground_)) {
    if (it != bits_.end() && *it == m) {
      ++it;
    } else {
      out.emplace_back(ground_, m);
    }
  }
  return out;
}

bool family_less(const SetFamily& a, const SetFamily& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto x = a.bits();
  const auto y = b.bits();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), canonical_less);
}

}  // namespace possat
