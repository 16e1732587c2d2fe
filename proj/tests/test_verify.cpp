#include <cstdlib>

#include "doctest.h"
#include "helpers.hpp"
#include "stringgrass/verify.hpp"

using namespace stringgrass;

TEST_CASE("small sweep passes every check") {
  VerifyOptions opt;
  opt.pmax = 2;
  opt.nmax = 2;
  opt.nmax_kronecker = 4;
  opt.identity_nmax = 8;
  VerifyReport report = run_verification(opt);
  CHECK(report.all_passed());
  CHECK(report.checks.size() == 11);
  CHECK(report.total_cases() > 0);
  for (const VerifyCheck& check : report.checks) {
    CAPTURE(check.name);
    CHECK(check.passed);
    CHECK(check.cases > 0);
    CHECK(check.counterexample.empty());
  }
}

TEST_CASE("an injected wrong convention is caught with a counterexample") {
  VerifyOptions opt;
  opt.pmax = 1;
  opt.nmax = 1;
  opt.nmax_kronecker = 2;
  opt.identity_nmax = 4;
  opt.inject_convention_fault = true;
  VerifyReport report = run_verification(opt);
  CHECK(!report.all_passed());
  bool preprojective_failed = false;
  for (const VerifyCheck& check : report.checks) {
    if (check.name == "preprojective-vs-enumeration") {
      preprojective_failed = !check.passed;
      CHECK(!check.counterexample.empty());
    }
  }
  CHECK(preprojective_failed);
}

TEST_CASE("report runs are reproducible regardless of thread count") {
  VerifyOptions opt;
  opt.pmax = 2;
  opt.nmax = 1;
  opt.nmax_kronecker = 3;
  opt.identity_nmax = 4;
  opt.threads = 1;
  VerifyReport one = run_verification(opt);
  opt.threads = 7;
  VerifyReport many = run_verification(opt);
  REQUIRE(one.checks.size() == many.checks.size());
  for (std::size_t i = 0; i < one.checks.size(); ++i) {
    CHECK(one.checks[i].name == many.checks[i].name);
    CHECK(one.checks[i].cases == many.checks[i].cases);
    CHECK(one.checks[i].passed == many.checks[i].passed);
    CHECK(one.checks[i].counterexample == many.checks[i].counterexample);
  }
}

TEST_CASE("rejects nonsense bounds") {
  VerifyOptions opt;
  opt.pmax = 0;
  CHECK(thrown_code([&] { run_verification(opt); }) == Errc::InvalidParameter);
}

TEST_CASE("thread count resolution") {
  // Explicit request wins and is clamped by the task count.
  CHECK(resolve_thread_count(3, 100) == 3);
  CHECK(resolve_thread_count(8, 2) == 2);
  CHECK(resolve_thread_count(5, 0) == 1);

  const char* saved = std::getenv("STRINGGRASS_THREADS");
  std::string saved_value = saved ? saved : "";

  setenv("STRINGGRASS_THREADS", "2", 1);
  CHECK(resolve_thread_count(0, 100) == 2);
  setenv("STRINGGRASS_THREADS", "not-a-number", 1);
  CHECK(resolve_thread_count(0, 100) >= 1);  // falls back to hardware
  unsetenv("STRINGGRASS_THREADS");
  CHECK(resolve_thread_count(0, 100) >= 1);

  if (saved) setenv("STRINGGRASS_THREADS", saved_value.c_str(), 1);
}
