#include "cli/suite.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "possat/embedding.hpp"
#include "possat/poset.hpp"
#include "possat/random.hpp"
#include "possat/saturation.hpp"
#include "possat/solver.hpp"
#include "possat/theorems.hpp"

namespace possat::cli {

namespace {

long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long v = 1;
  for (int i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

long long binomial_prefix(int n, int upto) {
  long long s = 0;
  for (int i = 0; i <= upto; ++i) s += binomial(n, i);
  return s;
}

/// Random greedy completions from the empty family, `per_n` for each n.
std::vector<SetFamily> greedy_instances(const PosetSpec& q, int n_lo, int n_hi, int per_n, std::uint64_t seed) {
  std::vector<SetFamily> out;
  Rng rng(seed);
  for (int n = n_lo; n <= n_hi; ++n) {
    const SetFamily empty{GroundSet(n)};
    for (int t = 0; t < per_n; ++t) out.push_back(greedy_saturate(empty, q, shuffled_candidates(empty, rng)));
  }
  return out;
}

/// Ordered m-tuples of distinct members checked pair by pair; independent of
/// the library's search and of its witness checker.
bool naive_has_copy(std::span<const std::uint32_t> members, const PosetSpec& q) {
  const int m = q.size();
  std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
  if (members.size() < static_cast<std::size_t>(m)) return false;
  while (true) {
    bool ok = true;
    for (int x = 0; x < m && ok; ++x) {
      for (int y = 0; y < m && ok; ++y) {
        if (x == y) continue;
        const std::uint32_t a = members[pick[static_cast<std::size_t>(x)]];
        const std::uint32_t b = members[pick[static_cast<std::size_t>(y)]];
        const bool sub = a != b && (a | b) == b;
        const bool sup = a != b && (a | b) == a;
        const bool inc = !sub && !sup && a != b;
        if (q.less(x, y)) {
          ok = sub;
        } else if (q.less(y, x)) {
          ok = sup;
        } else {
          ok = inc;
        }
      }
    }
    if (ok) return true;
    int d = m - 1;
    while (d >= 0 && ++pick[static_cast<std::size_t>(d)] == members.size()) pick[static_cast<std::size_t>(d--)] = 0;
    if (d < 0) return false;
  }
}

struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void add(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failures++ == 0) first_failure = what;
  }
  bool clean() const { return failures == 0; }
  std::string summary() const {
    std::string s = std::to_string(checked) + " checks, " + std::to_string(failures) + " counterexamples";
    if (!clean()) s += "; first: " + first_failure;
    return s;
  }
};

std::string describe(const SetFamily& f) {
  std::string s = "n=" + std::to_string(f.ground().size()) + " |F|=" + std::to_string(f.size()) + " {";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + to_string(f[i]);
  return s + "}";
}

std::string describe(const TheoremReport& r) {
  std::string s = r.theorem + " n=" + std::to_string(r.n) + " size=" + std::to_string(r.size) +
                  " bound=" + std::to_string(r.bound);
  if (!r.hypotheses_hold) s += " hypotheses fail";
  if (r.counterexample) s += " " + r.counterexample->kind + ": " + r.counterexample->detail;
  return s;
}

CriterionResult criterion(int id, std::string claim, std::string title, const Tally& tally, std::string extra = {}) {
  std::string detail = extra.empty() ? tally.summary() : extra + "; " + tally.summary();
  return {id, std::move(claim), std::move(title), tally.clean(), std::move(detail)};
}

/// Shared instance set for the butterfly criteria.
struct ButterflyInstances {
  std::vector<SetFamily> exhaustive;  // every B-saturated family over [4]
  std::vector<SetFamily> greedy;      // greedy-closed, n = 5..8
};

}  // namespace

std::vector<CriterionResult> run_paper_checks(const SuiteOptions& options) {
  const int threads = options.threads;
  const PosetSpec B = butterfly_poset();
  const PosetSpec N = n_poset();
  std::vector<CriterionResult> results;

  {
    Tally t;
    for (int n = 4; n <= 8; ++n) {
      t.add(saturation_report(butterfly_construction(n), B, {.threads = threads}).saturated,
            "butterfly construction n=" + std::to_string(n));
    }
    for (int n = 3; n <= 10; ++n) {
      t.add(saturation_report(n_construction(n), N, {.threads = threads}).saturated,
            "N construction n=" + std::to_string(n));
    }
    results.push_back(criterion(1, "definitions", "construction saturation", t,
                                "butterfly n=4..8 B-saturated, N family n=3..10 N-saturated"));
  }

  {
    Tally t;
    for (int n = 2; n <= 16; ++n) {
      t.add(n_construction(n).size() == static_cast<std::size_t>(2 * n), "|N family| n=" + std::to_string(n));
    }
    for (int n = 3; n <= 16; ++n) {
      const auto expected = static_cast<std::size_t>(1 + n + binomial(n, 2) + (n - 2));
      t.add(butterfly_construction(n).size() == expected, "|butterfly family| n=" + std::to_string(n));
    }
    results.push_back(criterion(2, "definitions", "construction sizes", t));
  }

  ButterflyInstances inst;
  inst.exhaustive = enumerate_saturated_families(4, B, std::nullopt, threads);
  inst.greedy = greedy_instances(B, 5, 8, 15, options.seed);

  {
    Tally t;
    std::ostringstream values;
    for (int n = 2; n <= 4; ++n) {
      const SolveResult r = exact_sat_star(n, B, {.threads = threads});
      const auto families = n == 4 ? inst.exhaustive : enumerate_saturated_families(n, B, std::nullopt, threads);
      const std::size_t oracle_min = families.empty() ? 0 : families.front().size();
      t.add(r.exact, "sat*(" + std::to_string(n) + ",B) not exact");
      t.add(r.value == oracle_min, "sat*(" + std::to_string(n) + ",B) hypergraph " + std::to_string(r.value) +
                                       " vs enumeration " + std::to_string(oracle_min));
      t.add(is_saturated(r.certificate, B, threads), "certificate n=" + std::to_string(n));
      t.add(r.value >= static_cast<std::size_t>(n + 1), "T2 bound at n=" + std::to_string(n));
      if (n == 2) t.add(r.value == 4, "sat*(2,B) = " + std::to_string(r.value) + ", expected 4");
      if (n == 3) t.add(r.value == 8, "sat*(3,B) = " + std::to_string(r.value) + ", expected 8");
      values << (n > 2 ? ", " : "") << "sat*(" << n << ",B)=" << r.value << " over "
             << r.enumerated_count.value_or(0) << " saturated families";
    }
    results.push_back(criterion(3, "T2", "exact oracle values", t, values.str()));
  }

  auto for_each_instance = [&](const std::function<void(const SetFamily&)>& fn) {
    for (const auto& f : inst.exhaustive) fn(f);
    for (const auto& f : inst.greedy) fn(f);
  };
  const std::string instance_note = std::to_string(inst.exhaustive.size()) + " exhaustive (n=4) + " +
                                    std::to_string(inst.greedy.size()) + " greedy (n=5..8) families";

  {
    Tally t;
    for_each_instance([&](const SetFamily& f) {
      const TheoremReport r = verify_theorem2(f, threads);
      t.add(r.passed, describe(r) + " on " + describe(f));
    });
    results.push_back(criterion(4, "T2", "singleton chevron injection and n+1 bound", t, instance_note));
  }

  {
    Tally t;
    for_each_instance([&](const SetFamily& f) {
      const TheoremReport r = lemma1_check(f, threads);
      t.add(r.passed, describe(r) + " on " + describe(f));
    });
    results.push_back(criterion(5, "L1", "pair closure over present singletons", t, instance_note));
  }

  {
    Tally t;
    std::size_t vacuous = 0;
    for_each_instance([&](const SetFamily& f) {
      const TheoremReport r = verify_theorem3(f, threads);
      if (r.k.value_or(0) == 0) {
        ++vacuous;
        return;
      }
      t.add(r.passed, describe(r) + " on " + describe(f));
    });
    results.push_back(criterion(6, "T3", "pair chevron injection and C(k,2)+k(n-k) bound", t,
                                instance_note + ", " + std::to_string(vacuous) + " with k=0 skipped"));
  }

  {
    Tally t;
    std::size_t exhaustive = 0;
    std::vector<SetFamily> greedy = greedy_instances(N, 5, 10, 10, options.seed + 1);
    auto check = [&](const SetFamily& f) {
      const TheoremReport r = verify_prop4(f, {.threads = threads});
      t.add(r.passed, describe(r) + " on " + describe(f));
    };
    for (int n = 1; n <= 4; ++n) {
      for (const auto& f : enumerate_saturated_families(n, N, std::nullopt, threads)) {
        ++exhaustive;
        check(f);
      }
    }
    for (const auto& f : greedy) check(f);
    results.push_back(criterion(7, "P4", "difference-pair cover and |F|^2 >= n", t,
                                std::to_string(exhaustive) + " exhaustive (n<=4) + " + std::to_string(greedy.size()) +
                                    " greedy (n=5..10) families"));
  }

  {
    Tally t;
    for (int k = 2; k <= 3; ++k) {
      const PosetSpec q = complete_bipartite_poset(k, 2);
      for (int n = k + 1; n <= 8; ++n) {
        const std::string tag = "k=" + std::to_string(k) + " n=" + std::to_string(n);
        const SetFamily seed = k2k_seed(n, k);
        const SetFamily f = greedy_saturate(seed, q);
        t.add(saturation_report(f, q, {.threads = threads}).saturated, "not saturated " + tag);
        bool small = true;
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (!seed.contains(f[i]) && f[i].cardinality() > k) small = false;
        }
        t.add(small, "added a set of size > k " + tag);
        const long long bound = binomial_prefix(n, k) + n - k;
        t.add(static_cast<long long>(f.size()) <= bound,
              "|F|=" + std::to_string(f.size()) + " > " + std::to_string(bound) + " " + tag);
      }
    }
    results.push_back(criterion(8, "P5", "K_{2,k} greedy completion", t, "k=2,3 and n=k+1..8"));
  }

  {
    Tally t;
    const int k = 3;
    const PosetSpec q = complete_bipartite_poset(k, k);
    for (int n = 6; n <= 8; ++n) {
      const std::string tag = "n=" + std::to_string(n);
      const SetFamily seed = kkk_seed(n, k);
      const SetFamily f = greedy_saturate(seed, q);
      t.add(saturation_report(f, q, {.threads = threads}).saturated, "not saturated " + tag);
      bool small = true;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (!seed.contains(f[i]) && f[i].cardinality() >= 2 * k - 1) small = false;
      }
      t.add(small, "added a set of size >= 2k-1 " + tag);
      const long long bound = binomial_prefix(n, 2 * k - 2) + static_cast<long long>(k - 1) * (n - 2 * k + 1);
      t.add(static_cast<long long>(f.size()) <= bound,
            "|F|=" + std::to_string(f.size()) + " > " + std::to_string(bound) + " " + tag);
    }
    results.push_back(criterion(9, "P6", "K_{3,3} greedy completion", t, "n=6..8"));
  }

  {
    Tally t;
    const GroundSet g(3);
    const auto all = canonical_subsets(g);
    const std::vector<PosetSpec> posets = {B, N, chain_poset(2), antichain_poset(2)};
    for (const auto& q : posets) {
      const CopyFinder finder(q, g);
      for (std::uint32_t idx = 0; idx < 256; ++idx) {
        std::vector<std::uint32_t> members;
        for (std::size_t i = 0; i < all.size(); ++i)
          if ((idx >> i) & 1U) members.push_back(all[i]);
        const auto found = finder.find(members);
        const bool oracle = naive_has_copy(members, q);
        t.add(found.has_value() == oracle && (!found || is_induced_copy(q, *found)),
              q.name() + " subfamily #" + std::to_string(idx));
      }
    }
    results.push_back(criterion(10, "definitions", "embedding search vs all-tuples oracle", t,
                                "256 families over [3] x {B, N, 2-chain, 2-antichain}"));
  }

  return results;
}

std::vector<CriterionResult> run_paper_suite(const SuiteOptions& options) {
  auto results = run_paper_checks(options);
  SuiteOptions other = options;
  other.threads = options.threads == 1 ? 4 : 1;
  const std::string first = render(results);
  const std::string second = render(run_paper_checks(other));
  const int lo = std::min(options.threads, other.threads);
  const int hi = std::max(options.threads, other.threads);
  CriterionResult det{11, "all", "determinism across thread counts", first == second, {}};
  det.detail = std::string(det.passed ? "byte-identical" : "differing") + " reports at " + std::to_string(lo) +
               " and " + std::to_string(hi) + " threads";
  results.push_back(std::move(det));
  return results;
}

std::string render(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.claim << " - " << r.title << ": " << r.detail
       << '\n';
  }
  return os.str();
}

}  // namespace possat::cli
