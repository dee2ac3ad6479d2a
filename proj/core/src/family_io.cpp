#include "possat/family_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "possat/errors.hpp"

namespace possat {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

/// Raw mask of one non-blank line; elements are only range-checked against
/// the global cap here.
std::uint32_t parse_line(std::string_view line) {
  if (line.size() > 2 && line[0] == '0' && (line[1] == 'x' || line[1] == 'X')) {
    std::uint64_t value = 0;
    const auto hex = line.substr(2);
    auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), value, 16);
    if (ec != std::errc() || ptr != hex.data() + hex.size()) {
      throw UsageError("bad hex mask '" + std::string(line) + "'");
    }
    if (value >> kMaxGroundSize) {
      throw UsageError("hex mask '" + std::string(line) + "' exceeds " + std::to_string(kMaxGroundSize) + " elements");
    }
    return static_cast<std::uint32_t>(value);
  }

  std::string_view body = line;
  const bool braced = !body.empty() && body.front() == '{';
  if (braced) {
    if (body.back() != '}') throw UsageError("unbalanced braces in '" + std::string(line) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::uint32_t bits = 0;
  std::size_t tokens = 0;
  std::size_t i = 0;
  while (i < body.size()) {
    const char ch = body[i];
    if (ch == ',' || ch == ' ' || ch == '\t') {
      ++i;
      continue;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(body.data() + i, body.data() + body.size(), value);
    if (ec != std::errc()) throw UsageError("bad element in '" + std::string(line) + "'");
    if (value < 1 || value > kMaxGroundSize) {
      throw UsageError("element " + std::to_string(value) + " outside [1, " + std::to_string(kMaxGroundSize) + "]");
    }
    bits |= std::uint32_t{1} << (value - 1);
    ++tokens;
    i = static_cast<std::size_t>(ptr - body.data());
  }
  if (tokens == 0 && !braced) throw UsageError("empty set must be written as {}");
  return bits;
}

}  // namespace

SetFamily parse_family(std::string_view text, std::optional<int> n) {
  std::vector<std::uint32_t> masks;
  std::uint32_t seen = 0;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      masks.push_back(parse_line(line));
    } catch (const UsageError& e) {
      throw UsageError("line " + std::to_string(line_no) + ": " + e.what());
    }
    seen |= masks.back();
  }
  const int inferred = seen == 0 ? 1 : std::bit_width(seen);
  const GroundSet g(n.value_or(inferred));
  if (inferred > g.size() && seen != 0) {
    throw UsageError("family mentions element " + std::to_string(inferred) + " but the ground set is [" +
                     std::to_string(g.size()) + "]");
  }
  return SetFamily::from_bits(g, std::move(masks));
}

SetFamily read_family_file(const std::filesystem::path& path, std::optional<int> n) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open family file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str(), n);
}

std::string format_family(const SetFamily& family) {
  std::string out;
  for (std::uint32_t b : family.bits()) {
    out += format_bits(b);
    out += '\n';
  }
  return out;
}

SubsetMask parse_subset(std::string_view text, GroundSet ground) {
  const auto line = trim(text);
  if (line.empty()) throw UsageError("empty set must be written as {}");
  return SubsetMask(ground, parse_line(line));
}

PosetSpec parse_poset_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("poset file is not valid JSON: ") + e.what());
  }
  try {
    const int size = doc.at("size").get<int>();
    std::vector<std::pair<int, int>> less;
    for (const auto& pair : doc.value("less", nlohmann::json::array())) {
      if (!pair.is_array() || pair.size() != 2) throw UsageError("each 'less' entry must be a pair [a, b]");
      less.emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
    auto labels = doc.value("labels", std::vector<std::string>{});
    auto name = doc.value("name", std::string{});
    return poset_from_pairs(size, less, std::move(labels), std::move(name));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed poset file: ") + e.what());
  }
}

PosetSpec read_poset_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open poset file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset_json(buf.str());
}

}  // namespace possat
