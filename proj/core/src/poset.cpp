#include "possat/poset.hpp"

#include <algorithm>

#include "possat/errors.hpp"

namespace possat {

namespace {

std::string cell(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::vector<std::string> default_labels(int size) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

int PosetSpec::degree(int a) const {
  int d = 0;
  for (int b = 0; b < size_; ++b) d += comparable(a, b) ? 1 : 0;
  return d;
}

int PosetSpec::height(int a) const {
  // Longest chain below a; the order is transitive so memo-free recursion
  // over at most a dozen elements is fine.
  int best = 0;
  for (int b = 0; b < size_; ++b) {
    if (less(b, a)) best = std::max(best, 1 + height(b));
  }
  return best;
}

int PosetSpec::depth(int a) const {
  int best = 0;
  for (int b = 0; b < size_; ++b) {
    if (less(a, b)) best = std::max(best, 1 + depth(b));
  }
  return best;
}

RelationMatrix PosetSpec::matrix() const {
  RelationMatrix m(static_cast<std::size_t>(size_), std::vector<bool>(static_cast<std::size_t>(size_)));
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b) m[a][b] = less(a, b);
  return m;
}

std::vector<std::pair<int, int>> PosetSpec::strict_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      if (less(a, b)) out.emplace_back(a, b);
  return out;
}

PosetSpec validate_poset(const RelationMatrix& raw, std::vector<std::string> labels, std::string name) {
  const int m = static_cast<int>(raw.size());
  if (m == 0) throw UsageError("poset must have at least one element");
  for (const auto& row : raw) {
    if (static_cast<int>(row.size()) != m) {
      throw UsageError("relation matrix is not square (" + std::to_string(m) + " rows, a row of " +
                       std::to_string(row.size()) + ")");
    }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != m) {
    throw UsageError("expected " + std::to_string(m) + " labels, got " + std::to_string(labels.size()));
  }

  std::vector<std::string> violations;
  for (int a = 0; a < m; ++a) {
    if (raw[a][a]) violations.push_back("reflexive at element " + std::to_string(a));
  }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (raw[a][b] && raw[b][a]) violations.push_back("antisymmetry violated at " + cell(a, b));
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      if (raw[a][c] || a == c) continue;
      for (int b = 0; b < m; ++b) {
        if (raw[a][b] && raw[b][c]) {
          violations.push_back("transitivity violated at " + cell(a, c) + " via " + std::to_string(b));
          break;
        }
      }
    }
  if (!violations.empty()) {
    std::string what = "invalid poset:";
    for (const auto& v : violations) what += " " + v + ";";
    throw ValidationError(what, std::move(violations));
  }

  PosetSpec q;
  q.size_ = m;
  q.less_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (raw[a][b]) {
        q.less_[q.index(a, b)] = 1;
        ++q.relation_count_;
      }
  q.labels_ = labels.empty() ? default_labels(m) : std::move(labels);
  q.name_ = std::move(name);
  return q;
}

PosetSpec poset_from_pairs(int size, const std::vector<std::pair<int, int>>& less,
                           std::vector<std::string> labels, std::string name) {
  if (size < 1) throw UsageError("poset size must be positive");
  RelationMatrix m(static_cast<std::size_t>(size), std::vector<bool>(static_cast<std::size_t>(size)));
  for (auto [a, b] : less) {
    if (a < 0 || a >= size || b < 0 || b >= size) {
      throw UsageError("relation " + cell(a, b) + " outside a poset of size " + std::to_string(size));
    }
    m[a][b] = true;
  }
  // Warshall
  for (int k = 0; k < size; ++k)
    for (int i = 0; i < size; ++i)
      if (m[i][k])
        for (int j = 0; j < size; ++j)
          if (m[k][j]) m[i][j] = true;
  return validate_poset(m, std::move(labels), std::move(name));
}

PosetSpec complete_bipartite_poset(int bottoms, int tops) {
  if (bottoms < 1 || tops < 1) {
    throw UsageError("complete bipartite poset needs at least one bottom and one top, got (" +
                     std::to_string(bottoms) + "," + std::to_string(tops) + ")");
  }
  const int m = bottoms + tops;
  RelationMatrix rel(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m)));
  std::vector<std::string> labels;
  for (int i = 0; i < bottoms; ++i) labels.push_back("b" + std::to_string(i + 1));
  for (int j = 0; j < tops; ++j) labels.push_back("t" + std::to_string(j + 1));
  for (int i = 0; i < bottoms; ++i)
    for (int j = 0; j < tops; ++j) rel[i][bottoms + j] = true;
  std::string name = (bottoms == 2 && tops == 2)
                         ? "butterfly"
                         : "K" + std::to_string(tops) + "," + std::to_string(bottoms);
  return validate_poset(rel, std::move(labels), std::move(name));
}

PosetSpec butterfly_poset() { return complete_bipartite_poset(2, 2); }

PosetSpec n_poset() {
  // a=0, b=1, c=2, d=3
  return poset_from_pairs(4, {{0, 1}, {2, 1}, {2, 3}}, {"a", "b", "c", "d"}, "N");
}

PosetSpec chain_poset(int length) {
  if (length < 1) throw UsageError("chain length must be positive");
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < length; ++i) rel.emplace_back(i, i + 1);
  return poset_from_pairs(length, rel, {}, "chain" + std::to_string(length));
}

PosetSpec antichain_poset(int width) {
  if (width < 1) throw UsageError("antichain width must be positive");
  return poset_from_pairs(width, {}, {}, "antichain" + std::to_string(width));
}

}  // namespace possat
