#include "possat/theorems.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "possat/errors.hpp"
#include "possat/poset.hpp"
#include "possat/saturation.hpp"

namespace possat {

namespace {

std::uint32_t bit(int element) { return std::uint32_t{1} << (element - 1); }

long long choose2(long long k) { return k * (k - 1) / 2; }

int count_singletons(const SetFamily& family) {
  int k = 0;
  for (std::uint32_t b : family.bits()) {
    if (std::popcount(b) == 1) ++k;
    if (std::popcount(b) > 1) break;  // canonical order: all singletons come early
  }
  return k;
}

/// Butterflies of family + {item} with `item` as a minimal element, reduced
/// to the max-|C| chevron. `item` itself is assumed not to be a member.
std::optional<Chevron> best_chevron(const SetFamily& family, std::uint32_t item) {
  const GroundSet g = family.ground();
  std::vector<std::uint32_t> tops;
  std::vector<std::uint32_t> others;
  for (std::uint32_t s : family.bits()) {
    if (is_proper_subset(item, s)) tops.push_back(s);
    if (is_incomparable(s, item)) others.push_back(s);
  }
  std::sort(tops.begin(), tops.end());
  // Largest C first, then smallest mask value.
  std::sort(others.begin(), others.end(), [](std::uint32_t a, std::uint32_t b) {
    const int ca = std::popcount(a);
    const int cb = std::popcount(b);
    return ca != cb ? ca > cb : a < b;
  });

  std::optional<std::tuple<int, std::uint32_t, std::uint32_t, std::uint32_t>> best;  // (-|C|, C, A, B)
  for (std::size_t ia = 0; ia < tops.size(); ++ia) {
    for (std::size_t ib = ia + 1; ib < tops.size(); ++ib) {
      const std::uint32_t a = tops[ia];
      const std::uint32_t b = tops[ib];
      if (!is_incomparable(a, b)) continue;
      const std::uint32_t common = a & b;
      for (std::uint32_t c : others) {
        if ((c & ~common) != 0) continue;
        auto key = std::make_tuple(-std::popcount(c), c, a, b);
        if (!best || key < *best) best = key;
        break;  // later candidates are no better for this (A, B)
      }
    }
  }
  if (!best) return std::nullopt;
  const auto [neg, c, a, b] = *best;
  return Chevron{SubsetMask(g, a), SubsetMask(g, b), SubsetMask(g, c)};
}

/// Records only the first failure.
struct Failures {
  std::optional<Counterexample>& slot;

  void operator()(std::string kind, std::string detail, std::vector<SubsetMask> sets = {}) const {
    if (!slot) slot = Counterexample{std::move(kind), std::move(detail), std::move(sets)};
  }
};

/// Common gate for the butterfly results. Returns false (and fills the
/// report) if the theorem does not apply.
bool butterfly_gate(TheoremReport& report, const SetFamily& family, int threads) {
  if (family.ground().size() < 2) {
    report.notes.push_back("n=1 is outside the theorem's scope");
    return false;
  }
  if (!is_saturated(family, butterfly_poset(), threads)) {
    report.notes.push_back("family is not butterfly-saturated");
    return false;
  }
  return true;
}

void check_injective(const std::vector<std::uint32_t>& images, const std::vector<SubsetMask>& domain,
                     GroundSet g, const Failures& fail) {
  for (std::size_t x = 0; x < images.size(); ++x) {
    for (std::size_t y = x + 1; y < images.size(); ++y) {
      if (images[x] == images[y]) {
        fail("image-collision",
             to_string(domain[x]) + " and " + to_string(domain[y]) + " both map to " + format_bits(images[x]),
             {domain[x], domain[y], SubsetMask(g, images[x])});
        return;
      }
    }
  }
}

}  // namespace

bool is_chevron(const Chevron& ch) {
  return is_proper_subset(ch.c.bits(), ch.a.bits()) && is_proper_subset(ch.c.bits(), ch.b.bits()) &&
         is_incomparable(ch.a.bits(), ch.b.bits());
}

Chevron assign_chevron_to_singleton(const SetFamily& family, int i) {
  const GroundSet g = family.ground();
  if (i < 1 || i > g.size()) throw UsageError("element " + std::to_string(i) + " outside [" + std::to_string(g.size()) + "]");
  if (family.contains_bits(bit(i))) {
    throw UsageError("singleton {" + std::to_string(i) + "} is already a member");
  }
  auto ch = best_chevron(family, bit(i));
  if (!ch) {
    throw ContractViolation("adding {" + std::to_string(i) +
                            "} creates no butterfly with it as a minimal element; family is not butterfly-saturated");
  }
  return *ch;
}

Chevron assign_chevron_to_pair(const SetFamily& family, SubsetMask pair) {
  if (pair.ground() != family.ground()) throw UsageError("pair over a different ground set");
  if (pair.cardinality() != 2) throw UsageError(to_string(pair) + " is not a pair");
  if (family.contains(pair)) throw UsageError("pair " + to_string(pair) + " is already a member");
  const auto e = pair.elements();
  const int present = (family.contains_bits(bit(e[0])) ? 1 : 0) + (family.contains_bits(bit(e[1])) ? 1 : 0);
  if (present != 1) {
    throw UsageError("pair " + to_string(pair) + " has " + std::to_string(present) +
                     " of its singletons in the family; exactly one is required");
  }
  auto ch = best_chevron(family, pair.bits());
  if (!ch) {
    throw ContractViolation("adding " + to_string(pair) +
                            " creates no butterfly with it as a minimal element; family is not butterfly-saturated");
  }
  const std::uint32_t image = ch->c.bits() | pair.bits();
  if (!family.contains_bits(image)) {
    throw ContractViolation("C + pair = " + format_bits(image) + " is not a member for pair " + to_string(pair));
  }
  return *ch;
}

ChevronAssignment singleton_chevron_map(const SetFamily& family) {
  ChevronAssignment out;
  const GroundSet g = family.ground();
  for (int i = 1; i <= g.size(); ++i) {
    if (family.contains_bits(bit(i))) continue;
    const Chevron ch = assign_chevron_to_singleton(family, i);
    out.domain.emplace_back(g, bit(i));
    out.chevrons.push_back(ch);
    out.images.emplace_back(g, ch.c.bits() | bit(i));
  }
  return out;
}

ChevronAssignment pair_chevron_map(const SetFamily& family) {
  ChevronAssignment out;
  const GroundSet g = family.ground();
  for (int i = 1; i <= g.size(); ++i) {
    for (int j = i + 1; j <= g.size(); ++j) {
      const std::uint32_t p = bit(i) | bit(j);
      if (family.contains_bits(p)) continue;
      if (family.contains_bits(bit(i)) == family.contains_bits(bit(j))) continue;
      const Chevron ch = assign_chevron_to_pair(family, SubsetMask(g, p));
      out.domain.emplace_back(g, p);
      out.chevrons.push_back(ch);
      out.images.emplace_back(g, ch.c.bits() | p);
    }
  }
  return out;
}

std::string chevron_map_tsv(const ChevronAssignment& assignment) {
  std::ostringstream os;
  os << "item\tA\tB\tC\timage\n";
  for (std::size_t x = 0; x < assignment.domain.size(); ++x) {
    const Chevron& ch = assignment.chevrons[x];
    os << to_string(assignment.domain[x]) << '\t' << to_string(ch.a) << '\t' << to_string(ch.b) << '\t'
       << to_string(ch.c) << '\t' << to_string(assignment.images[x]) << '\n';
  }
  return os.str();
}

TheoremReport lemma1_check(const SetFamily& family, int threads) {
  TheoremReport report;
  report.theorem = "L1";
  report.n = family.ground().size();
  report.size = family.size();
  const int k = count_singletons(family);
  report.k = k;
  report.bound = choose2(k);
  report.hypotheses_hold = butterfly_gate(report, family, threads);
  if (!report.hypotheses_hold) return report;

  const Failures fail{report.counterexample};
  const GroundSet g = family.ground();
  for (int i = 1; i <= g.size() && !report.counterexample; ++i) {
    if (!family.contains_bits(bit(i))) continue;
    for (int j = i + 1; j <= g.size(); ++j) {
      if (family.contains_bits(bit(j)) && !family.contains_bits(bit(i) | bit(j))) {
        fail("missing-pair", "{" + std::to_string(i) + "} and {" + std::to_string(j) + "} present, pair absent",
             {SubsetMask(g, bit(i) | bit(j))});
        break;
      }
    }
  }
  report.passed = !report.counterexample;
  return report;
}

TheoremReport verify_theorem2(const SetFamily& family, int threads) {
  TheoremReport report;
  report.theorem = "T2";
  const GroundSet g = family.ground();
  report.n = g.size();
  report.size = family.size();
  report.k = count_singletons(family);
  report.bound = g.size() + 1;
  report.hypotheses_hold = butterfly_gate(report, family, threads);
  if (!report.hypotheses_hold) return report;

  const Failures fail{report.counterexample};
  if (!family.contains_bits(0)) fail("empty-set-missing", "the empty set is not a member");

  std::vector<SubsetMask> domain;
  std::vector<std::uint32_t> images;
  std::vector<Chevron> chevrons;
  for (int i = 1; i <= g.size(); ++i) {
    const SubsetMask item(g, bit(i));
    domain.push_back(item);
    if (family.contains_bits(bit(i))) {
      images.push_back(bit(i));
      continue;
    }
    auto ch = best_chevron(family, bit(i));
    if (!ch) {
      fail("no-chevron", "adding " + to_string(item) + " forms no butterfly through it", {item});
      images.push_back(bit(i));
      continue;
    }
    if (!is_chevron(*ch)) fail("not-a-chevron", "chevron for " + to_string(item), {ch->a, ch->b, ch->c});
    if (ch->c.contains(i)) fail("element-in-c", to_string(item) + " lies inside its chevron's C", {ch->c});
    const std::uint32_t image = ch->c.bits() | bit(i);
    if (!family.contains_bits(image)) {
      fail("image-not-member", "C + {i} = " + format_bits(image) + " for " + to_string(item),
           {SubsetMask(g, image)});
    }
    for (const auto& other : chevrons) {
      if (other == *ch) fail("chevron-reused", "two singletons share a chevron", {ch->a, ch->b, ch->c});
    }
    chevrons.push_back(*ch);
    images.push_back(image);
  }
  check_injective(images, domain, g, fail);
  if (static_cast<long long>(family.size()) < report.bound) {
    fail("bound", "|F| = " + std::to_string(family.size()) + " < n + 1");
  }
  report.passed = !report.counterexample;
  return report;
}

TheoremReport verify_theorem3(const SetFamily& family, int threads) {
  TheoremReport report;
  report.theorem = "T3";
  const GroundSet g = family.ground();
  const int n = g.size();
  const int k = count_singletons(family);
  report.n = n;
  report.k = k;
  report.size = family.size();
  report.bound = choose2(k) + static_cast<long long>(k) * (n - k);
  if (k == 0) {
    report.notes.push_back("vacuous: the family contains no singletons (k >= 1 required)");
    return report;
  }
  report.hypotheses_hold = butterfly_gate(report, family, threads);
  if (!report.hypotheses_hold) return report;

  const Failures fail{report.counterexample};
  std::vector<SubsetMask> domain;
  std::vector<std::uint32_t> images;
  std::vector<Chevron> chevrons;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const bool has_i = family.contains_bits(bit(i));
      const bool has_j = family.contains_bits(bit(j));
      if (!has_i && !has_j) continue;
      const std::uint32_t p = bit(i) | bit(j);
      const SubsetMask pair(g, p);
      domain.push_back(pair);
      if (family.contains_bits(p)) {
        images.push_back(p);
        continue;
      }
      if (has_i && has_j) {
        fail("missing-pair", "both singletons of " + to_string(pair) + " present, pair absent", {pair});
        images.push_back(p);
        continue;
      }
      auto ch = best_chevron(family, p);
      if (!ch) {
        fail("no-chevron", "adding " + to_string(pair) + " forms no butterfly through it", {pair});
        images.push_back(p);
        continue;
      }
      if (!is_chevron(*ch)) fail("not-a-chevron", "chevron for " + to_string(pair), {ch->a, ch->b, ch->c});
      const std::uint32_t image = ch->c.bits() | p;
      if (!family.contains_bits(image)) {
        fail("image-not-member", "C + pair = " + format_bits(image) + " for " + to_string(pair),
             {SubsetMask(g, image)});
      }
      for (const auto& other : chevrons) {
        if (other == *ch) fail("chevron-reused", "two pairs share a chevron", {ch->a, ch->b, ch->c});
      }
      chevrons.push_back(*ch);
      images.push_back(image);
    }
  }
  check_injective(images, domain, g, fail);
  if (static_cast<long long>(family.size()) < report.bound) {
    fail("bound", "|F| = " + std::to_string(family.size()) + " < C(k,2) + k(n-k) = " + std::to_string(report.bound));
  }
  report.passed = !report.counterexample;
  return report;
}

std::vector<std::optional<std::pair<SubsetMask, SubsetMask>>> try_difference_pair_cover(const SetFamily& family) {
  const GroundSet g = family.ground();
  std::vector<std::optional<std::pair<SubsetMask, SubsetMask>>> cover(static_cast<std::size_t>(g.size()));
  std::size_t open = cover.size();
  for (std::uint32_t f : family.bits()) {
    for (std::uint32_t h : family.bits()) {
      const std::uint32_t d = f & ~h;
      if (std::popcount(d) != 1) continue;
      auto& slot = cover[static_cast<std::size_t>(std::countr_zero(d))];
      if (!slot) {
        slot.emplace(SubsetMask(g, f), SubsetMask(g, h));
        if (--open == 0) return cover;
      }
    }
  }
  return cover;
}

std::map<int, std::pair<SubsetMask, SubsetMask>> difference_pair_cover(const SetFamily& family) {
  std::map<int, std::pair<SubsetMask, SubsetMask>> out;
  std::string uncovered;
  const auto cover = try_difference_pair_cover(family);
  for (std::size_t x = 0; x < cover.size(); ++x) {
    if (cover[x]) {
      out.emplace(static_cast<int>(x) + 1, *cover[x]);
    } else {
      uncovered += (uncovered.empty() ? "" : ",") + std::to_string(x + 1);
    }
  }
  if (!uncovered.empty()) {
    throw ContractViolation("no ordered member pair (F, G) with F \\ G = {i} for i in {" + uncovered + "}");
  }
  return out;
}

TheoremReport verify_prop4(const SetFamily& family, Prop4Options options) {
  TheoremReport report;
  report.theorem = "P4";
  const GroundSet g = family.ground();
  const int n = g.size();
  report.n = n;
  report.size = family.size();
  long long root = 0;
  while (root * root < n) ++root;
  report.bound = root;
  report.hypotheses_hold = is_saturated(family, n_poset(), options.threads);
  if (!report.hypotheses_hold) {
    report.notes.push_back("family is not N-saturated");
    return report;
  }

  const Failures fail{report.counterexample};
  const auto cover = try_difference_pair_cover(family);
  for (std::size_t x = 0; x < cover.size(); ++x) {
    if (!cover[x]) {
      fail("uncovered-element", "no (F, G) with F \\ G = {" + std::to_string(x + 1) + "}",
           {SubsetMask(g, std::uint32_t{1} << x)});
      break;
    }
  }

  if (options.local_cover) {
    // reach[a]: elements d with some member B such that A \ B = {d}
    const auto members = family.bits();
    std::vector<std::uint32_t> reach(members.size());
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::uint32_t b : members) {
        const std::uint32_t d = members[a] & ~b;
        if (std::popcount(d) == 1) reach[a] |= d;
      }
    for (std::uint32_t f : members) {
      std::uint32_t covered = 0;
      for (std::size_t a = 0; a < members.size(); ++a)
        if ((members[a] & ~f) == 0) covered |= reach[a];
      if ((f & ~covered) != 0) {
        fail("local-cover", "member " + format_bits(f) + " misses elements " + format_bits(f & ~covered),
             {SubsetMask(g, f)});
        break;
      }
    }
  }

  const auto size = static_cast<long long>(family.size());
  if (size * size < n) fail("bound", "|F|^2 = " + std::to_string(size * size) + " < n = " + std::to_string(n));
  report.passed = !report.counterexample;
  return report;
}

}  // namespace possat
