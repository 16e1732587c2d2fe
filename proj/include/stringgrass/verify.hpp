#pragma once

#include <string>
#include <vector>

#include "stringgrass/numbers.hpp"

namespace stringgrass {

// Cross-validation harness pairing every closed form with an independent
// enumeration, plus the pure binomial identities. Used by the CLI `verify`
// subcommand and by the acceptance suite.
struct VerifyOptions {
  int pmax = 4;
  int nmax = 3;
  // -1 picks the defaults nmax + 1 (regular family) and max(nmax, 8)
  // (two-vertex families, where enumeration stays cheap).
  int nmax_regular = -1;
  int nmax_kronecker = -1;
  int identity_nmax = 12;
  // 0: honor STRINGGRASS_THREADS, else hardware concurrency.
  int threads = 0;
  // Swap the truncating binomial for a broken one (C(p,0)=1 even for p<0)
  // inside the formula evaluations; the sweep must then fail.
  bool inject_convention_fault = false;
};

struct VerifyCheck {
  std::string name;
  long cases = 0;
  bool passed = false;
  std::string counterexample;  // first failing tuple, empty when passed
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_passed() const;
  long total_cases() const;
};

VerifyReport run_verification(const VerifyOptions& opt);

// min(cap from STRINGGRASS_THREADS or hardware, task count), at least 1.
int resolve_thread_count(int requested, int tasks);

}  // namespace stringgrass
