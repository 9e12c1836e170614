#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsk/permutation.hpp"

namespace rsk {

// Independent reference computations used by the verification suites. These
// deliberately avoid tableaux so that checking row-insertion results against
// them is meaningful.
namespace oracles {

// O(n^2) dynamic programs over the bare word.
int lis_dp(const Permutation& pi);
int lds_dp(const Permutation& pi);

}  // namespace oracles

struct Violation {
  std::string input;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string suite;
  int n_max = 0;
  std::int64_t cases_checked = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

struct SuiteInfo {
  std::string name;
  int ceiling;  // largest accepted n_max
  std::string description;
};

// The exhaustive self-check suites, with their documented ceilings (chosen
// to finish in seconds on commodity hardware).
const std::vector<SuiteInfo>& available_suites();

// Runs a suite exhaustively up to n_max. Throws ContractError for an unknown
// suite name or an n_max beyond the suite's ceiling.
VerificationReport run_suite(const std::string& name, int n_max);

// Runs a per-permutation suite on `count` random elements of S_n (allowed
// above the exhaustive ceiling). Suites that aggregate over a whole S_n or
// over shapes cannot be sampled and are rejected.
VerificationReport run_suite_sampled(const std::string& name, int n, int count,
                                     std::uint64_t seed);

}  // namespace rsk
