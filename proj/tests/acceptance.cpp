// Acceptance run: one PASS/FAIL line per criterion, built on the fixture table.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "hspec/fixtures.hpp"

using namespace hspec;

namespace {

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  status = pclose(p);
  return out;
}

const char* kTitles[] = {
    "",
    "order-4 mixed tensor: extremes and subtensor lower bound",
    "order-3 mixed tensor: extremes and subtensor lower bound",
    "order-3 nonnegative tensor: ratio bound",
    "equal row sums: uniform Perron vector and exact subtensor radius",
    "hypercycle and hyperpath closed forms",
    "least eigenvalue of an order-4 tensor and its subtensor bounds",
    "4-uniform hypergraph: least eigenvector and vertex removal",
    "4-uniform hypergraph: edge removal sandwich",
    "Steiner systems and the gamma equality",
    "randomized property suites",
    "determinism of verify-paper --json --seed 7",
};

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  std::vector<FixtureRow> rows = run_fixtures();
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::map<int, std::vector<const FixtureRow*>> groups;
  for (const auto& r : rows) groups[std::stoi(r.id.substr(0, r.id.find('.')))].push_back(&r);

  int failed = 0;
  for (int c = 1; c <= 10; ++c) {
    std::string bad;
    double worst = 0.0;
    for (const FixtureRow* r : groups[c]) {
      if (r->kind == "value") worst = std::max(worst, r->deviation());
      if (!r->pass) bad += (bad.empty() ? "" : ", ") + r->id;
    }
    bool ok = !groups[c].empty() && bad.empty();
    failed += ok ? 0 : 1;
    std::printf("%s  criterion %2d  %-64s rows=%zu max_dev=%.3g%s%s\n", ok ? "PASS" : "FAIL", c,
                kTitles[c], groups[c].size(), worst, bad.empty() ? "" : "  failing: ",
                bad.c_str());
  }

  std::string cmd = std::string(HSPEC_CLI) + " verify-paper --json --seed 7";
  int s1 = 0, s2 = 0;
  std::string a = run_capture(cmd, s1);
  std::string b = run_capture(cmd, s2);
  bool same = !a.empty() && a == b && s1 == s2;
  failed += same ? 0 : 1;
  std::printf("%s  criterion 11  %-64s bytes=%zu\n", same ? "PASS" : "FAIL", kTitles[11],
              a.size());

  std::printf("fixture table: %zu rows in %.2f s\n", rows.size(), seconds);
  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
