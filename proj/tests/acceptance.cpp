// Acceptance suite: one line per criterion, with its time budget.
//
//   acceptance [--only N] [--jobs J] [--verbose]
//
// Budgets assume one desktop core, so the default is --jobs 1.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "seqlab/verify.hpp"

using namespace seqlab;

namespace {

// Seconds. Criterion 5 is 5 s for widths 3-5 plus 60 s for width 6.
constexpr double kBudget[kCriterionCount + 1] = {0, 1, 60, 1, 120, 65, 5, 1, 1, 5, 1, 30, 60};

constexpr const char* kTitle[kCriterionCount + 1] = {
    "",
    "prime-digital subsequence",
    "odd add-on prime ranks",
    "prime add-on primes and digit counts",
    "even add-on perfect powers",
    "reverse-subtract censuses",
    "subtract-const orbits",
    "digit-multiply profiles",
    "mixed-compose loops",
    "Erdos-Smarandache numbers",
    "n-ary sieve",
    "square-partial-digital squares",
    "property suites",
};

bool run_one(int n, const VerifyOptions& options, bool verbose) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto checks = criterion_checks(n, options);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::size_t failed = 0, errata = 0;
  for (const auto& c : checks) {
    failed += c.status == CheckStatus::fail;
    errata += c.status == CheckStatus::erratum;
  }
  const bool in_time = secs <= kBudget[n];
  const bool ok = failed == 0 && in_time;
  std::printf("criterion %2d  %s  %-38s %zu/%zu checks  %.2fs / %.0fs%s%s\n", n, ok ? "PASS" : "FAIL", kTitle[n],
              checks.size() - failed, checks.size(), secs, kBudget[n], in_time ? "" : "  OVER BUDGET",
              errata ? "  (erratum candidates noted)" : "");
  for (const auto& c : checks) {
    if (c.status == CheckStatus::pass && !verbose) continue;
    std::printf("    %-7s %s\n            expected %s\n            observed %s\n", to_string(c.status), c.id.c_str(),
                c.expected.c_str(), c.observed.c_str());
    if (!c.note.empty()) std::printf("            note: %s\n", c.note.c_str());
  }
  std::fflush(stdout);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool verbose = false;
  VerifyOptions options;
  options.jobs = 1;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) {
      options.jobs = std::atoi(argv[++i]);
    } else if (!std::strcmp(argv[i], "--verbose")) {
      verbose = true;
    } else {
      std::fprintf(stderr, "usage: acceptance [--only N] [--jobs J] [--verbose]\n");
      return 2;
    }
  }
  if (only < 0 || only > kCriterionCount) {
    std::fprintf(stderr, "criterion must be in 1..%d\n", kCriterionCount);
    return 2;
  }

  bool all = true;
  for (int n = 1; n <= kCriterionCount; ++n) {
    if (only == 0 || only == n) all = run_one(n, options, verbose) && all;
  }
  return all ? 0 : 1;
}
