#include "possat/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "possat/errors.hpp"

namespace possat {

namespace {

/// Does image `cx` for element x agree with image `cy` for element y?
/// Equal images never agree, which is what keeps assignments injective.
bool fits(const PosetSpec& q, int x, std::uint32_t cx, int y, std::uint32_t cy) {
  if (q.less(x, y)) return is_proper_subset(cx, cy);
  if (q.less(y, x)) return is_proper_subset(cy, cx);
  return is_incomparable(cx, cy);
}

/// Static-order backtracking with forward checking: after each assignment the
/// candidate lists of all later elements are filtered against it.
class Search {
 public:
  Search(const PosetSpec& q, std::vector<int> order)
      : q_(q), order_(std::move(order)), image_(static_cast<std::size_t>(q.size())) {
    const std::size_t m = order_.size();
    domains_.assign(m + 1, std::vector<std::vector<std::uint32_t>>(m));
  }

  std::vector<std::uint32_t>& root_domain(std::size_t position) { return domains_[0][position]; }

  /// Calls visit(image) on every complete assignment until it returns true.
  template <typename Visit>
  bool run(Visit&& visit) { return descend(0, visit); }

 private:
  template <typename Visit>
  bool descend(std::size_t level, Visit& visit) {
    const std::size_t m = order_.size();
    if (level == m) return visit(image_);
    const int x = order_[level];
    const auto& mine = domains_[level][level];
    auto& next = domains_[level + 1];
    for (std::uint32_t c : mine) {
      image_[static_cast<std::size_t>(x)] = c;
      bool viable = true;
      for (std::size_t k = level + 1; k < m && viable; ++k) {
        const int y = order_[k];
        auto& dst = next[k];
        dst.clear();
        for (std::uint32_t d : domains_[level][k]) {
          if (fits(q_, y, d, x, c)) dst.push_back(d);
        }
        viable = !dst.empty();
      }
      if (viable && descend(level + 1, visit)) return true;
    }
    return false;
  }

  const PosetSpec& q_;
  std::vector<int> order_;
  std::vector<std::uint32_t> image_;
  std::vector<std::vector<std::vector<std::uint32_t>>> domains_;
};

}  // namespace

bool is_induced_copy(const PosetSpec& q, std::span<const std::uint32_t> images) {
  const int m = q.size();
  if (static_cast<int>(images.size()) != m) return false;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (x == y) continue;
      const std::uint32_t a = images[static_cast<std::size_t>(x)];
      const std::uint32_t b = images[static_cast<std::size_t>(y)];
      if (a == b) return false;
      const bool below = (a & ~b) == 0;
      if (q.less(x, y) != below) return false;
    }
  }
  return true;
}

bool is_induced_copy(const EmbeddingWitness& w) {
  std::vector<std::uint32_t> images;
  images.reserve(w.assignment.size());
  for (const auto& s : w.assignment) {
    if (!w.assignment.empty() && s.ground() != w.assignment.front().ground()) return false;
    images.push_back(s.bits());
  }
  return is_induced_copy(w.poset, images);
}

CopyFinder::CopyFinder(const PosetSpec& q, GroundSet ground) : q_(q), ground_(ground) {
  const int m = q.size();
  order_.resize(static_cast<std::size_t>(m));
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](int a, int b) { return q.degree(a) > q.degree(b); });
  min_card_.resize(static_cast<std::size_t>(m));
  max_card_.resize(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) {
    min_card_[static_cast<std::size_t>(x)] = q.height(x);
    max_card_[static_cast<std::size_t>(x)] = ground.size() - q.depth(x);
  }
}

std::optional<std::vector<std::uint32_t>> CopyFinder::find(std::span<const std::uint32_t> members,
                                                           std::optional<std::uint32_t> forced) const {
  const int m = q_.size();
  auto fill = [&](Search& search, const std::vector<int>& order, std::size_t from) {
    for (std::size_t k = from; k < order.size(); ++k) {
      const auto x = static_cast<std::size_t>(order[k]);
      auto& dom = search.root_domain(k);
      for (std::uint32_t c : members) {
        const int card = std::popcount(c);
        if (card >= min_card_[x] && card <= max_card_[x]) dom.push_back(c);
      }
    }
  };

  std::optional<std::vector<std::uint32_t>> found;
  auto keep_first = [&](const std::vector<std::uint32_t>& image) {
    found = image;
    return true;
  };

  if (!forced) {
    Search search(q_, order_);
    fill(search, order_, 0);
    search.run(keep_first);
    return found;
  }

  const int card = std::popcount(*forced);
  for (int p = 0; p < m; ++p) {
    const auto pi = static_cast<std::size_t>(p);
    if (card < min_card_[pi] || card > max_card_[pi]) continue;
    std::vector<int> order;
    order.reserve(order_.size());
    order.push_back(p);
    for (int x : order_)
      if (x != p) order.push_back(x);
    Search search(q_, order);
    search.root_domain(0).push_back(*forced);
    fill(search, order, 1);
    if (search.run(keep_first)) return found;
  }
  return std::nullopt;
}

std::size_t CopyFinder::count_images(std::span<const std::uint32_t> members, std::size_t cap) const {
  Search search(q_, order_);
  for (std::size_t k = 0; k < order_.size(); ++k) {
    const auto x = static_cast<std::size_t>(order_[k]);
    for (std::uint32_t c : members) {
      const int card = std::popcount(c);
      if (card >= min_card_[x] && card <= max_card_[x]) search.root_domain(k).push_back(c);
    }
  }
  std::set<std::vector<std::uint32_t>> images;
  search.run([&](const std::vector<std::uint32_t>& image) {
    std::vector<std::uint32_t> key = image;
    std::sort(key.begin(), key.end());
    images.insert(std::move(key));
    return images.size() >= cap;
  });
  return std::min(images.size(), cap);
}

std::optional<EmbeddingWitness> find_induced_copy(const SetFamily& family, const PosetSpec& q,
                                                  std::optional<SubsetMask> required) {
  if (required && !family.contains(*required)) {
    throw UsageError("required set " + to_string(*required) + " is not a member of the family");
  }
  const CopyFinder finder(q, family.ground());
  auto image = finder.find(family.bits(),
                           required ? std::optional<std::uint32_t>(required->bits()) : std::nullopt);
  if (!image) return std::nullopt;
  EmbeddingWitness w{q, {}};
  w.assignment.reserve(image->size());
  for (std::uint32_t b : *image) w.assignment.emplace_back(family.ground(), b);
  return w;
}

std::size_t count_induced_copies(const SetFamily& family, const PosetSpec& q, std::size_t cap) {
  if (cap == 0) throw UsageError("count_induced_copies: cap must be at least 1");
  return CopyFinder(q, family.ground()).count_images(family.bits(), cap);
}

}  // namespace possat
