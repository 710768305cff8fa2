// End-to-end acceptance gate: one PASS/FAIL line per criterion, with
// wall-clock budgets on the expensive suites.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "quiverchar/verify.hpp"

using namespace quiverchar;

int main() {
  struct Gate {
    int id;
    std::function<CheckResult()> run;
    double budget_seconds;  // <= 0: no cap
  };
  const std::vector<Gate> gates = {
      {1, [] { return criterion_hall_littlewood(); }, 30.0},
      {2, [] { return criterion_character_identity(); }, 60.0},
      {3, [] { return criterion_ground_states(); }, 0.0},
      {4, [] { return criterion_stabilization(); }, 0.0},
      {5, [] { return criterion_gt_yangian(); }, 60.0},
      {6, [] { return criterion_fock(); }, 0.0},
      {7, [] { return criterion_kz(); }, 120.0},
      {8, [] { return criterion_cs(); }, 0.0},
      {9, [] { return criterion_span(); }, 0.0},
  };

  int failures = 0;
  for (const auto& g : gates) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult res;
    try {
      res = g.run();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    bool in_budget = g.budget_seconds <= 0 || secs <= g.budget_seconds;
    bool ok = res.pass && in_budget;
    failures += ok ? 0 : 1;
    std::printf("%s [%d] %s (%.1fs%s)\n", ok ? "PASS" : "FAIL", g.id,
                res.name.c_str(), secs,
                in_budget ? "" : ", over budget");
    if (!res.pass) std::printf("     %s\n", res.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
