#pragma once

#include <string>
#include <vector>

#include "seqlab/numerics.hpp"
#include "seqlab/report_json.hpp"

namespace seqlab {

enum class CheckKind { paper, oracle };
enum class CheckStatus { pass, fail, erratum };

const char* to_string(CheckKind k);
const char* to_string(CheckStatus s);

struct VerifyCheck {
  int criterion = 0;  // acceptance criterion 1..12
  CheckKind kind = CheckKind::paper;
  std::string id;
  std::string expected;
  std::string observed;
  CheckStatus status = CheckStatus::fail;
  std::string note;
};

struct VerifyOptions {
  unsigned rounds = kDefaultRounds;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 0;
};

inline constexpr int kCriterionCount = 12;

// Every check belonging to one acceptance criterion.
std::vector<VerifyCheck> criterion_checks(int criterion, const VerifyOptions& options = {});

struct VerifySuiteResult {
  std::string suite;
  std::vector<VerifyCheck> checks;

  std::size_t failures() const;
  // 0 iff nothing failed; errata candidates do not count as failures.
  int exit_code() const { return failures() == 0 ? 0 : 1; }
};

const std::vector<std::string>& verify_suites();  // paper, oracles, all

// Throws DomainError for an unknown suite.
VerifySuiteResult run_verify(const std::string& suite, const VerifyOptions& options = {});

Json to_json(const VerifySuiteResult& r);
std::string render_table(const VerifySuiteResult& r);

// Index of the first repeated term when the start is numbered 1:
// closing_step() + 1. Largest over [lo, hi], smallest start on ties.
std::pair<std::size_t, std::uint64_t> max_first_repeat_index(const MapSpec& m, std::uint64_t lo, std::uint64_t hi,
                                                             int jobs = 0);

}  // namespace seqlab
