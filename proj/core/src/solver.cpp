#include "possat/solver.hpp"

#include <algorithm>
#include <numeric>

#include "parallel.hpp"
#include "possat/embedding.hpp"
#include "possat/errors.hpp"
#include "possat/random.hpp"
#include "possat/saturation.hpp"

namespace possat {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

/// Members of `all` selected by the bits of `index`.
std::vector<std::uint32_t> select(const std::vector<std::uint32_t>& all, std::uint32_t index) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t rest = index; rest != 0; rest &= rest - 1) {
    out.push_back(all[static_cast<std::size_t>(std::countr_zero(rest))]);
  }
  return out;  // `all` is canonical, so this is too
}

void sort_families(std::vector<SetFamily>& families) {
  std::sort(families.begin(), families.end(), family_less);
}

/// Every m-subset of the canonical subsets of [n] that carries an induced
/// copy of q, as a bitmask over canonical indices. Checks each subset by
/// trying all bijections; deliberately shares no code with CopyFinder.
std::vector<std::uint32_t> copy_hypergraph(const std::vector<std::uint32_t>& all, const PosetSpec& q) {
  const int m = q.size();
  const int total = static_cast<int>(all.size());
  std::vector<std::uint32_t> edges;
  if (m > total) return edges;
  std::vector<int> pick(static_cast<std::size_t>(m));
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<std::uint32_t> images(static_cast<std::size_t>(m));
  while (true) {
    std::vector<int> perm(pick);
    bool hit = false;
    do {
      for (int x = 0; x < m; ++x) images[static_cast<std::size_t>(x)] = all[static_cast<std::size_t>(perm[x])];
      hit = is_induced_copy(q, images);
    } while (!hit && std::next_permutation(perm.begin(), perm.end()));
    if (hit) {
      std::uint32_t e = 0;
      for (int t : pick) e |= std::uint32_t{1} << t;
      edges.push_back(e);
    }
    // next combination
    int i = m - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - m + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return edges;
}

SolveResult solve_by_hypergraph(int n, const PosetSpec& q, int threads) {
  const auto start = Clock::now();
  const GroundSet g(n);
  const auto all = canonical_subsets(g);
  const auto edges = copy_hypergraph(all, q);
  const std::size_t total = std::size_t{1} << all.size();
  const std::uint32_t everything = static_cast<std::uint32_t>(total - 1);

  struct Best {
    std::size_t count = 0;
    std::optional<SetFamily> family;
  };
  auto parts = detail::map_ranges(total, threads, [&](std::size_t begin, std::size_t end) {
    Best best;
    for (std::size_t raw = begin; raw < end; ++raw) {
      const auto idx = static_cast<std::uint32_t>(raw);
      bool free = true;
      for (std::uint32_t e : edges) {
        if ((e & ~idx) == 0) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      bool maximal = true;
      for (std::uint32_t rest = everything & ~idx; rest != 0 && maximal; rest &= rest - 1) {
        const std::uint32_t t = rest & (~rest + 1);
        const std::uint32_t grown = idx | t;
        maximal = std::any_of(edges.begin(), edges.end(),
                              [&](std::uint32_t e) { return (e & t) != 0 && (e & ~grown) == 0; });
      }
      if (!maximal) continue;
      ++best.count;
      SetFamily f = SetFamily::from_bits(g, select(all, idx));
      if (!best.family || family_less(f, *best.family)) best.family = std::move(f);
    }
    return best;
  });

  SolveResult result;
  result.n = n;
  result.poset = q.name();
  result.exact = true;
  std::size_t count = 0;
  std::optional<SetFamily> winner;
  for (auto& part : parts) {
    count += part.count;
    if (part.family && (!winner || family_less(*part.family, *winner))) winner = std::move(part.family);
  }
  if (!winner) throw ContractViolation("no saturated family exists, which is impossible: every maximal free family is saturated");
  result.value = winner->size();
  result.certificate = std::move(*winner);
  result.enumerated_count = count;
  result.elapsed = since(start);
  return result;
}

/// Include/exclude backtracking over the canonical subsets of [n]. Leaves
/// are exactly the maximal free families: every included set keeps the
/// family free, and every excluded set must end up closing a copy.
class MaximalFreeSearch {
 public:
  enum class Mode { Minimize, Enumerate };

  MaximalFreeSearch(int n, const PosetSpec& q, Mode mode, Clock::time_point deadline)
      : ground_(n), finder_(q, ground_), order_(canonical_subsets(ground_)), mode_(mode), deadline_(deadline) {}

  void set_incumbent(SetFamily f) {
    best_size_ = f.size();
    best_ = std::move(f);
  }
  void set_cap(std::size_t cap) { cap_ = cap; }

  /// Returns false if the deadline or cap cut the search short.
  bool run() {
    descend(0);
    return !stopped_;
  }

  const std::optional<SetFamily>& best() const { return best_; }
  std::vector<SetFamily>& found() { return found_; }

 private:
  bool out_of_time() {
    if ((++nodes_ & 0xFF) == 0 && Clock::now() >= deadline_) stopped_ = true;
    return stopped_;
  }

  /// Can `s` still be killed, assuming every undecided set could be added?
  bool killable(std::uint32_t s, std::size_t pos) const {
    std::vector<std::uint32_t> optimistic(current_);
    optimistic.insert(optimistic.end(), order_.begin() + static_cast<std::ptrdiff_t>(pos), order_.end());
    std::sort(optimistic.begin(), optimistic.end(), canonical_less);
    return finder_.exists(optimistic, s);
  }

  void add(std::uint32_t s) {
    current_.insert(std::lower_bound(current_.begin(), current_.end(), s, canonical_less), s);
  }
  void remove(std::uint32_t s) {
    current_.erase(std::lower_bound(current_.begin(), current_.end(), s, canonical_less));
  }

  void leaf() {
    for (std::uint32_t s : pending_) {
      if (!finder_.exists(current_, s)) return;
    }
    SetFamily f = SetFamily::from_bits(ground_, current_);
    if (mode_ == Mode::Enumerate) {
      found_.push_back(std::move(f));
      if (found_.size() >= cap_) stopped_ = true;
    } else if (!best_ || f.size() < best_size_) {
      best_size_ = f.size();
      best_ = std::move(f);
    }
  }

  void descend(std::size_t pos) {
    if (stopped_ || out_of_time()) return;
    if (mode_ == Mode::Minimize && best_ && current_.size() >= best_size_) return;
    if (pos == order_.size()) {
      leaf();
      return;
    }
    const std::uint32_t s = order_[pos];
    // On entering a new cardinality level, drop branches where a pending
    // exclusion can no longer be closed.
    if (pos > 0 && std::popcount(order_[pos - 1]) != std::popcount(s)) {
      for (std::uint32_t p : pending_) {
        if (!finder_.exists(current_, p) && !killable(p, pos)) return;
      }
    }
    if (finder_.exists(current_, s)) {
      // already closes a copy; excluded for good
      descend(pos + 1);
      return;
    }
    if (killable(s, pos + 1)) {
      pending_.push_back(s);
      descend(pos + 1);
      pending_.pop_back();
    }
    if (mode_ == Mode::Minimize && best_ && current_.size() + 1 >= best_size_) return;
    add(s);
    descend(pos + 1);
    remove(s);
  }

  GroundSet ground_;
  CopyFinder finder_;
  std::vector<std::uint32_t> order_;
  Mode mode_;
  Clock::time_point deadline_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> pending_;
  std::optional<SetFamily> best_;
  std::size_t best_size_ = 0;
  std::vector<SetFamily> found_;
  std::size_t cap_ = static_cast<std::size_t>(-1);
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

SolveResult solve_by_branch_and_bound(int n, const PosetSpec& q, std::chrono::milliseconds budget) {
  const auto start = Clock::now();
  MaximalFreeSearch search(n, q, MaximalFreeSearch::Mode::Minimize, start + budget);
  search.set_incumbent(greedy_saturate(SetFamily(GroundSet(n)), q));
  const bool complete = search.run();
  SolveResult result;
  result.n = n;
  result.poset = q.name();
  result.exact = complete;
  result.certificate = *search.best();
  result.value = result.certificate.size();
  result.elapsed = since(start);
  return result;
}

}  // namespace

std::vector<SetFamily> enumerate_saturated_families(int n, const PosetSpec& q, std::optional<std::size_t> cap,
                                                    int threads) {
  const GroundSet g(n);
  if (cap && *cap == 0) throw UsageError("enumerate_saturated_families: cap must be at least 1");
  if (n > kExhaustiveLimit + 1 || (n == kExhaustiveLimit + 1 && !cap)) {
    throw UsageError("enumerate_saturated_families: n=" + std::to_string(n) +
                     " is too large; exhaustive mode needs n <= 4, capped mode n = 5");
  }

  if (n == kExhaustiveLimit + 1) {
    MaximalFreeSearch search(n, q, MaximalFreeSearch::Mode::Enumerate, Clock::time_point::max());
    search.set_cap(*cap);
    search.run();
    auto families = std::move(search.found());
    sort_families(families);
    return families;
  }

  const CopyFinder finder(q, g);
  const auto all = canonical_subsets(g);
  const std::size_t total = std::size_t{1} << all.size();
  auto parts = detail::map_ranges(total, threads, [&](std::size_t begin, std::size_t end) {
    std::vector<SetFamily> out;
    for (std::size_t raw = begin; raw < end; ++raw) {
      const auto idx = static_cast<std::uint32_t>(raw);
      const auto members = select(all, idx);
      if (finder.exists(members)) continue;
      bool saturated = true;
      for (std::size_t t = 0; t < all.size() && saturated; ++t) {
        if ((idx >> t) & 1U) continue;
        saturated = finder.exists(members, all[t]);
      }
      if (saturated) out.push_back(SetFamily::from_bits(g, members));
    }
    return out;
  });
  std::vector<SetFamily> families;
  for (auto& part : parts) {
    for (auto& f : part) families.push_back(std::move(f));
  }
  sort_families(families);
  if (cap && families.size() > *cap) families.erase(families.begin() + static_cast<std::ptrdiff_t>(*cap), families.end());
  return families;
}

SolveResult exact_sat_star(int n, const PosetSpec& q, SolveOptions options) {
  const GroundSet g(n);
  SolveMethod method = options.method;
  if (method == SolveMethod::Auto) {
    method = n <= kExhaustiveLimit ? SolveMethod::CopyHypergraph : SolveMethod::BranchAndBound;
  }
  if (method == SolveMethod::CopyHypergraph) {
    if (n > kExhaustiveLimit) {
      throw UsageError("copy-hypergraph solving needs n <= " + std::to_string(kExhaustiveLimit));
    }
    return solve_by_hypergraph(g.size(), q, options.threads);
  }
  return solve_by_branch_and_bound(g.size(), q, options.budget);
}

SolveResult upper_bound_via_random_greedy(int n, const PosetSpec& q, std::size_t trials, std::uint64_t rng_seed,
                                          std::span<const SetFamily> seeds) {
  const auto start = Clock::now();
  const GroundSet g(n);
  if (trials == 0) throw UsageError("upper_bound_via_random_greedy: trials must be at least 1");
  for (const auto& s : seeds) {
    if (s.ground() != g) throw UsageError("upper_bound_via_random_greedy: seed family over a different ground set");
  }
  Rng rng(rng_seed);
  std::optional<SetFamily> best;
  for (std::size_t t = 0; t < trials; ++t) {
    const SetFamily seed = t < seeds.size() ? seeds[t] : SetFamily(g);
    SetFamily result = t == 0 && !seeds.empty()
                           ? greedy_saturate(seed, q)
                           : greedy_saturate(seed, q, shuffled_candidates(seed, rng));
    if (!best || result.size() < best->size()) best = std::move(result);
  }
  SolveResult out;
  out.n = n;
  out.poset = q.name();
  out.exact = false;
  out.certificate = std::move(*best);
  out.value = out.certificate.size();
  out.elapsed = since(start);
  return out;
}

}  // namespace possat
