#include "cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "cli/suite.hpp"
#include "possat/embedding.hpp"
#include "possat/errors.hpp"
#include "possat/family_io.hpp"
#include "possat/hasse.hpp"
#include "possat/saturation.hpp"
#include "possat/serialize.hpp"
#include "possat/solver.hpp"
#include "possat/theorems.hpp"

namespace possat::cli {

namespace {

int parse_positive(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size() && v >= 1) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + " must be a positive integer, got '" + text + "'");
}

struct Config {
  std::string poset = "butterfly";
  std::string in;
  std::optional<int> n;
  std::optional<int> k;
  std::string family;
  std::string format = "json";
  std::string require;
  std::size_t count_cap = 0;
  std::string order = "canonical";
  std::uint64_t seed = 1;
  int threads = 1;
  bool fail_fast = false;
  bool local_cover = false;
  std::string which = "all";
  std::string method = "exact";
  long long budget_ms = 60000;
  std::size_t trials = 100;
  std::size_t cap = 0;
  std::string suite;
};

SetFamily load_family(const Config& cfg) {
  if (cfg.in.empty()) throw UsageError("--in is required");
  if (cfg.in == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_family(text, cfg.n);
  }
  return read_family_file(cfg.in, cfg.n);
}

int cmd_construct(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.n) throw UsageError("construct needs --n");
  const int n = *cfg.n;
  SetFamily f(GroundSet(1));
  if (cfg.family == "butterfly") {
    f = butterfly_construction(n);
  } else if (cfg.family == "n") {
    f = n_construction(n);
  } else if (cfg.family == "k2k" || cfg.family == "kkk") {
    if (!cfg.k) throw UsageError("construct --family " + cfg.family + " needs --k");
    f = cfg.family == "k2k" ? k2k_seed(n, *cfg.k) : kkk_seed(n, *cfg.k);
  } else {
    throw UsageError("unknown family '" + cfg.family + "' (butterfly, n, k2k, kkk)");
  }
  out << format_family(f);
  err << cfg.family << " family over [" << n << "]: " << f.size() << " sets\n";
  return kOk;
}

int cmd_check(const Config& cfg, std::ostream& out, std::ostream& err) {
  const PosetSpec q = resolve_poset(cfg.poset);
  const SetFamily f = load_family(cfg);
  const auto report = saturation_report(f, q, {.fail_fast = cfg.fail_fast, .threads = cfg.threads});
  out << to_json(report) << '\n';
  err << (report.saturated ? "saturated" : report.free ? "free but not saturated" : "not free") << " ("
      << f.size() << " sets over [" << f.ground().size() << "], poset " << q.name() << ")\n";
  return report.saturated ? kOk : kCheckFailed;
}

int cmd_embed(const Config& cfg, std::ostream& out, std::ostream& err) {
  const PosetSpec q = resolve_poset(cfg.poset);
  const SetFamily f = load_family(cfg);
  if (cfg.count_cap > 0) {
    out << count_induced_copies(f, q, cfg.count_cap) << '\n';
    return kOk;
  }
  std::optional<SubsetMask> required;
  if (!cfg.require.empty()) required = parse_subset(cfg.require, f.ground());
  const auto w = find_induced_copy(f, q, required);
  if (w) {
    if (!is_induced_copy(*w)) throw ContractViolation("embedding search returned an invalid witness");
    out << to_json(*w) << '\n';
  } else {
    out << "none\n";
  }
  err << (w ? "induced copy found" : "no induced copy") << '\n';
  return kOk;
}

int cmd_greedy(const Config& cfg, std::ostream& out, std::ostream& err) {
  const PosetSpec q = resolve_poset(cfg.poset);
  SetFamily seed(GroundSet(1));
  if (cfg.in.empty()) {
    if (!cfg.n) throw UsageError("greedy needs --in or --n (empty seed)");
    seed = SetFamily(GroundSet(*cfg.n));
  } else {
    seed = load_family(cfg);
  }
  SetFamily result(GroundSet(1));
  if (cfg.order == "canonical") {
    result = greedy_saturate(seed, q);
  } else if (cfg.order == "random") {
    Rng rng(cfg.seed);
    result = greedy_saturate(seed, q, shuffled_candidates(seed, rng));
  } else {
    throw UsageError("unknown order '" + cfg.order + "' (canonical, random)");
  }
  if (!is_saturated(result, q, cfg.threads)) {
    throw ContractViolation("greedy completion is not saturated");
  }
  out << format_family(result);
  err << "greedy: " << seed.size() << " -> " << result.size() << " sets\n";
  return kOk;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const SetFamily f = load_family(cfg);
  std::vector<std::string> which;
  if (cfg.which == "all") {
    which = {"lemma1", "t2", "t3", "p4"};
  } else {
    which = {cfg.which};
  }
  if (cfg.format == "tsv") {
    if (cfg.which == "t2") {
      out << chevron_map_tsv(singleton_chevron_map(f));
    } else if (cfg.which == "t3") {
      out << chevron_map_tsv(pair_chevron_map(f));
    } else {
      throw UsageError("--format tsv exports chevron maps; use it with t2 or t3");
    }
    return kOk;
  }
  bool all_passed = true;
  for (const auto& w : which) {
    TheoremReport r;
    if (w == "lemma1") {
      r = lemma1_check(f, cfg.threads);
    } else if (w == "t2") {
      r = verify_theorem2(f, cfg.threads);
    } else if (w == "t3") {
      r = verify_theorem3(f, cfg.threads);
    } else if (w == "p4") {
      r = verify_prop4(f, {.local_cover = cfg.local_cover, .threads = cfg.threads});
    } else {
      throw UsageError("unknown verifier '" + w + "' (lemma1, t2, t3, p4, all)");
    }
    out << to_json(r) << '\n';
    err << r.theorem << ": " << (r.passed ? "passed" : "FAILED") << " (size " << r.size << ", bound " << r.bound
        << (r.hypotheses_hold ? "" : ", hypotheses do not hold") << ")\n";
    all_passed = all_passed && r.passed;
  }
  return all_passed ? kOk : kCheckFailed;
}

int cmd_solve(const Config& cfg, std::ostream& out, std::ostream& err) {
  const PosetSpec q = resolve_poset(cfg.poset);
  if (!cfg.n) throw UsageError("solve needs --n");
  const int n = *cfg.n;
  SolveResult r;
  if (cfg.method == "exact") {
    r = exact_sat_star(n, q, {.budget = std::chrono::milliseconds(cfg.budget_ms), .threads = cfg.threads});
  } else if (cfg.method == "random") {
    r = upper_bound_via_random_greedy(n, q, cfg.trials, cfg.seed);
  } else if (cfg.method == "enumerate") {
    auto families = enumerate_saturated_families(
        n, q, cfg.cap > 0 ? std::optional<std::size_t>(cfg.cap) : std::nullopt, cfg.threads);
    r.n = n;
    r.poset = q.name();
    r.certificate = families.front();
    r.value = r.certificate.size();
    r.exact = n <= kExhaustiveLimit;
    r.enumerated_count = families.size();
  } else {
    throw UsageError("unknown method '" + cfg.method + "' (exact, random, enumerate)");
  }
  if (!is_saturated(r.certificate, q, cfg.threads)) {
    throw ContractViolation("solver certificate is not saturated");
  }
  out << to_json(r) << '\n';
  err << "sat*(" << n << ", " << q.name() << ") " << (r.exact ? "= " : "<= ") << r.value << '\n';
  return kOk;
}

int cmd_hasse(const Config& cfg, std::ostream& out, std::ostream&) {
  out << emit_hasse(load_family(cfg));
  return kOk;
}

int cmd_suite(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.suite != "paper") throw UsageError("unknown suite '" + cfg.suite + "' (paper)");
  const auto results = run_paper_suite({.threads = cfg.threads, .seed = cfg.seed});
  out << render(results);
  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  err << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? kOk : kCheckFailed;
}

}  // namespace

PosetSpec resolve_poset(const std::string& selector) {
  if (selector == "butterfly" || selector == "B") return butterfly_poset();
  if (selector == "n" || selector == "N") return n_poset();
  const auto colon = selector.find(':');
  if (colon != std::string::npos) {
    const std::string kind = selector.substr(0, colon);
    const std::string arg = selector.substr(colon + 1);
    if (kind == "k2k") return complete_bipartite_poset(parse_positive(arg, "k"), 2);
    if (kind == "kkk") {
      const int k = parse_positive(arg, "k");
      return complete_bipartite_poset(k, k);
    }
    if (kind == "chain") return chain_poset(parse_positive(arg, "chain length"));
    if (kind == "antichain") return antichain_poset(parse_positive(arg, "antichain width"));
  }
  return read_poset_file(selector);
}

int default_threads() {
  if (const char* env = std::getenv("POSSAT_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  cfg.threads = default_threads();

  CLI::App app{"Induced poset saturation in the Boolean lattice", "possat"};
  app.option_defaults()->always_capture_default();
  app.add_option("--suite", cfg.suite, "Run a verification battery (paper)");
  app.add_option("--threads", cfg.threads, "Worker threads (default: $POSSAT_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "RNG seed");
  app.require_subcommand(0, 1);

  auto add_poset = [&](CLI::App* sub) {
    sub->add_option("--poset", cfg.poset, "butterfly | n | k2k:K | kkk:K | chain:M | antichain:M | poset.json");
  };
  auto add_input = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--in", cfg.in, "Family file ('-' for stdin)");
    if (required) opt->required();
    sub->add_option("--n", cfg.n, "Ground set size (default: largest element in the file)");
  };

  auto* construct = app.add_subcommand("construct", "Emit a named family");
  construct->add_option("--family", cfg.family, "butterfly | n | k2k | kkk")->required();
  construct->add_option("--n", cfg.n, "Ground set size")->required();
  construct->add_option("--k", cfg.k, "Parameter k for k2k / kkk");

  auto* check = app.add_subcommand("check", "Saturation report for a family");
  add_poset(check);
  add_input(check, true);
  check->add_flag("--fail-fast", cfg.fail_fast, "Stop at the first unsaturated set");

  auto* embed = app.add_subcommand("embed", "Find an induced copy");
  add_poset(embed);
  add_input(embed, true);
  embed->add_option("--require", cfg.require, "A member that must be part of the copy, e.g. {1,2}");
  embed->add_option("--count", cfg.count_cap, "Count distinct copies up to this cap instead");

  auto* greedy = app.add_subcommand("greedy", "Greedy saturation from a free seed");
  add_poset(greedy);
  add_input(greedy, false);
  greedy->add_option("--order", cfg.order, "canonical | random");
  greedy->add_option("--seed", cfg.seed, "RNG seed for --order random");

  auto* verify = app.add_subcommand("verify", "Run the lemma/theorem verifiers");
  verify->add_option("which", cfg.which, "lemma1 | t2 | t3 | p4 | all");
  add_input(verify, true);
  verify->add_option("--format", cfg.format, "json | tsv (chevron map for t2/t3)");
  verify->add_flag("--local-cover", cfg.local_cover, "p4: also check the per-member difference cover");

  auto* solve = app.add_subcommand("solve", "Compute or bound sat*(n, poset)");
  add_poset(solve);
  solve->add_option("--n", cfg.n, "Ground set size")->required();
  solve->add_option("--method", cfg.method, "exact | random | enumerate");
  solve->add_option("--budget-ms", cfg.budget_ms, "Time budget for branch and bound");
  solve->add_option("--trials", cfg.trials, "Trials for --method random");
  solve->add_option("--seed", cfg.seed, "RNG seed for --method random");
  solve->add_option("--cap", cfg.cap, "Family cap for --method enumerate");

  auto* hasse = app.add_subcommand("hasse", "DOT digraph of the family's Hasse diagram");
  add_input(hasse, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (!cfg.suite.empty()) return cmd_suite(cfg, out, err);
    if (construct->parsed()) return cmd_construct(cfg, out, err);
    if (check->parsed()) return cmd_check(cfg, out, err);
    if (embed->parsed()) return cmd_embed(cfg, out, err);
    if (greedy->parsed()) return cmd_greedy(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (solve->parsed()) return cmd_solve(cfg, out, err);
    if (hasse->parsed()) return cmd_hasse(cfg, out, err);
    err << app.help();
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return kContract;
  }
}

}  // namespace possat::cli
