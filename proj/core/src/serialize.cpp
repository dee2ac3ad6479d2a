#include "possat/serialize.hpp"

#include <json.hpp>

namespace possat {

namespace {

using Json = nlohmann::ordered_json;

Json set_json(SubsetMask s) { return s.elements(); }

Json sets_json(std::span<const SubsetMask> sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(set_json(s));
  return out;
}

Json family_json(const SetFamily& f) {
  Json out = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(set_json(f[i]));
  return out;
}

Json witness_json(const EmbeddingWitness& w) {
  Json out = Json::array();
  for (std::size_t x = 0; x < w.assignment.size(); ++x) {
    Json pair;
    pair["poset_element"] = w.poset.label(static_cast<int>(x));
    pair["set"] = set_json(w.assignment[x]);
    out.push_back(std::move(pair));
  }
  return out;
}

}  // namespace

std::string to_json(const EmbeddingWitness& w) { return witness_json(w).dump(); }

std::string to_json(const SaturationReport& r) {
  Json out;
  out["free"] = r.free;
  out["saturated"] = r.saturated;
  out["unsaturated"] = sets_json(r.unsaturated);
  out["witness"] = r.witness ? witness_json(*r.witness) : Json(nullptr);
  return out.dump();
}

std::string to_json(const TheoremReport& r) {
  Json out;
  out["theorem"] = r.theorem;
  out["n"] = r.n;
  out["k"] = r.k ? Json(*r.k) : Json(nullptr);
  out["bound"] = r.bound;
  out["size"] = r.size;
  out["hypotheses_hold"] = r.hypotheses_hold;
  out["passed"] = r.passed;
  if (r.counterexample) {
    Json ce;
    ce["kind"] = r.counterexample->kind;
    ce["detail"] = r.counterexample->detail;
    ce["sets"] = sets_json(r.counterexample->sets);
    out["counterexample"] = std::move(ce);
  } else {
    out["counterexample"] = nullptr;
  }
  out["notes"] = r.notes;
  return out.dump();
}

std::string to_json(const SolveResult& r, bool with_timing) {
  Json out;
  out["n"] = r.n;
  out["poset"] = r.poset;
  out["value"] = r.value;
  out["exact"] = r.exact;
  out["certificate"] = family_json(r.certificate);
  if (r.enumerated_count) out["enumerated_count"] = *r.enumerated_count;
  if (with_timing) out["elapsed_ms"] = r.elapsed.count();
  return out.dump();
}

std::string to_json(const PosetSpec& q) {
  Json out;
  out["name"] = q.name();
  out["size"] = q.size();
  Json less = Json::array();
  for (auto [a, b] : q.strict_pairs()) less.push_back({a, b});
  out["less"] = std::move(less);
  out["labels"] = q.labels();
  return out.dump();
}

}  // namespace possat
