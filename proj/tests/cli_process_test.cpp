#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome shell(const std::string& command) {
  Outcome r{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string bin() { return POSSAT_BIN; }

/// Drops the determinism line, whose detail names the thread counts compared.
std::string without_criterion_11(const std::string& report) {
  const auto pos = report.find("] 11. ");
  if (pos == std::string::npos) return report;
  const auto start = report.rfind('\n', pos);
  const auto end = report.find('\n', pos);
  return report.substr(0, start == std::string::npos ? 0 : start + 1) +
         (end == std::string::npos ? "" : report.substr(end + 1));
}

}  // namespace

TEST_CASE("process exit codes") {
  CHECK(shell(bin() + " construct --family n --n 5 2>/dev/null").code == 0);
  CHECK(shell(bin() + " construct --family n --n 5 2>/dev/null | " + bin() + " check --poset n --in - 2>/dev/null").code == 0);
  CHECK(shell("printf '{}\\n{1}\\n' | " + bin() + " check --n 4 --in - 2>/dev/null").code == 1);
  CHECK(shell(bin() + " bogus 2>/dev/null").code == 2);
  CHECK(shell("printf '{}\\n' | " + bin() + " verify t2 --format tsv --n 4 --in - 2>/dev/null").code == 3);
}

TEST_CASE("round trip through the binary") {
  const auto built = shell(bin() + " construct --family butterfly --n 6 2>/dev/null");
  const auto checked = shell(bin() + " construct --family butterfly --n 6 2>/dev/null | " + bin() +
                             " greedy --in - 2>/dev/null");
  CHECK(checked.code == 0);
  CHECK(checked.out == built.out);
}

TEST_CASE("suite output does not depend on the thread count") {
  const auto one = shell(bin() + " --suite paper --threads 1 2>/dev/null");
  const auto two = shell(bin() + " --suite paper --threads 2 2>/dev/null");
  CHECK(one.code == 0);
  CHECK(two.code == 0);
  CHECK(without_criterion_11(one.out) == without_criterion_11(two.out));
  CHECK(one.out.find("[PASS] 11. ") != std::string::npos);
  CHECK(two.out.find("[PASS] 11. ") != std::string::npos);
  CHECK(one.out.find("[FAIL]") == std::string::npos);
}
