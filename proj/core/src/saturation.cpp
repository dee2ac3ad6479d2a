#include "possat/saturation.hpp"

#include <algorithm>

#include "parallel.hpp"
#include "possat/errors.hpp"

namespace possat {

namespace {

void require_n_at_least(const char* what, int n, int lo) {
  if (n < lo) {
    throw UsageError(std::string(what) + " needs n >= " + std::to_string(lo) + ", got " +
                     std::to_string(n));
  }
}

std::string describe(const EmbeddingWitness& w) {
  std::string s;
  for (std::size_t x = 0; x < w.assignment.size(); ++x) {
    if (x) s += ", ";
    s += w.poset.label(static_cast<int>(x)) + "->" + to_string(w.assignment[x]);
  }
  return s;
}

/// Adds every candidate that keeps `current` free. `candidates` are raw masks.
SetFamily greedy_close(SetFamily current, const PosetSpec& q, std::span<const std::uint32_t> candidates) {
  const CopyFinder finder(q, current.ground());
  for (std::uint32_t s : candidates) {
    if (current.contains_bits(s)) continue;
    if (!finder.exists(current.bits(), s)) current.insert(SubsetMask(current.ground(), s));
  }
  return current;
}

void require_free_seed(const SetFamily& seed, const PosetSpec& q) {
  if (auto w = find_induced_copy(seed, q)) {
    throw UsageError("greedy_saturate: seed already contains an induced copy of " +
                     (q.name().empty() ? std::string("the poset") : q.name()) + ": " + describe(*w));
  }
}

}  // namespace

bool is_free(const SetFamily& family, const PosetSpec& q) {
  return !CopyFinder(q, family.ground()).exists(family.bits());
}

SaturationReport saturation_report(const SetFamily& family, const PosetSpec& q, SaturationOptions options) {
  SaturationReport report;
  report.witness = find_induced_copy(family, q);
  report.free = !report.witness.has_value();
  if (!report.free) return report;

  const CopyFinder finder(q, family.ground());
  const std::vector<SubsetMask> missing = family.missing();
  auto chunks = detail::map_ranges(missing.size(), options.threads, [&](std::size_t begin, std::size_t end) {
    std::vector<SubsetMask> bad;
    for (std::size_t i = begin; i < end; ++i) {
      if (!finder.exists(family.bits(), missing[i].bits())) {
        bad.push_back(missing[i]);
        if (options.fail_fast) break;
      }
    }
    return bad;
  });
  for (auto& chunk : chunks) {
    for (const auto& s : chunk) {
      report.unsaturated.push_back(s);
      if (options.fail_fast) break;
    }
    if (options.fail_fast && !report.unsaturated.empty()) break;
  }
  report.saturated = report.unsaturated.empty();
  return report;
}

SetFamily greedy_saturate(const SetFamily& seed, const PosetSpec& q) {
  require_free_seed(seed, q);
  return greedy_close(seed, q, canonical_subsets(seed.ground()));
}

SetFamily greedy_saturate(const SetFamily& seed, const PosetSpec& q, std::span<const SubsetMask> order) {
  require_free_seed(seed, q);
  std::vector<std::uint32_t> candidates;
  candidates.reserve(order.size());
  std::vector<bool> seen(seed.ground().subset_count());
  for (const auto& s : order) {
    if (s.ground() != seed.ground()) throw UsageError("greedy_saturate: candidate over a different ground set");
    if (seen[s.bits()]) throw UsageError("greedy_saturate: candidate " + to_string(s) + " listed twice");
    seen[s.bits()] = true;
    candidates.push_back(s.bits());
  }
  for (const auto& s : seed.missing()) {
    if (!seen[s.bits()]) {
      throw UsageError("greedy_saturate: candidate order omits missing set " + to_string(s));
    }
  }
  return greedy_close(seed, q, candidates);
}

std::vector<SubsetMask> shuffled_candidates(const SetFamily& seed, Rng& rng) {
  std::vector<SubsetMask> order = seed.missing();
  shuffle_in_place(std::span<SubsetMask>(order), rng);
  return order;
}

SetFamily butterfly_construction(int n) {
  require_n_at_least("butterfly_construction", n, 2);
  const GroundSet g(n);
  SetFamily f(g);
  f.insert(SubsetMask::empty(g));
  for (int i = 1; i <= n; ++i) {
    f.insert(SubsetMask::of(g, {i}));
    f.insert(SubsetMask::prefix(g, i));
    for (int j = i + 1; j <= n; ++j) f.insert(SubsetMask::of(g, {i, j}));
  }
  return f;
}

SetFamily n_construction(int n) {
  require_n_at_least("n_construction", n, 2);
  const GroundSet g(n);
  SetFamily f(g);
  f.insert(SubsetMask::empty(g));
  for (int i = 1; i <= n; ++i) {
    f.insert(SubsetMask::of(g, {i}));
    f.insert(SubsetMask::prefix(g, i));
  }
  return f;
}

SetFamily k2k_seed(int n, int k) {
  if (k < 2 || n <= k) {
    throw UsageError("k2k_seed needs n > k >= 2, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  const GroundSet g(n);
  SetFamily f(g);
  for (int t = 0; t <= n; ++t) f.insert(SubsetMask::prefix(g, t));
  for (int i = 1; i <= n; ++i) f.insert(SubsetMask::of(g, {i}));
  return f;
}

SetFamily kkk_seed(int n, int k) {
  if (k < 2 || n < 2 * k - 1) {
    throw UsageError("kkk_seed needs k >= 2 and n >= 2k-1, got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k));
  }
  const GroundSet g(n);
  SetFamily f(g);
  for (int i = 1; i <= n; ++i) f.insert(SubsetMask::of(g, {i}));
  for (int i = 1; i <= k - 1; ++i) {
    std::uint32_t bits = 0;
    f.insert(SubsetMask(g, bits));
    for (int e = 1; e <= n; ++e) {
      if (e == i) continue;
      bits |= std::uint32_t{1} << (e - 1);
      f.insert(SubsetMask(g, bits));
    }
    f.insert(SubsetMask::full(g));
  }
  return f;
}

}  // namespace possat
