// Acceptance gate: one pass/fail line per release criterion, each with its
// time budget. Exits nonzero if any criterion fails. Run via ctest or
// directly from the build directory.
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stringgrass/chi.hpp"
#include "stringgrass/coeff_quiver.hpp"
#include "stringgrass/degrees.hpp"
#include "stringgrass/families.hpp"
#include "stringgrass/formulas.hpp"
#include "stringgrass/json_io.hpp"
#include "stringgrass/verify.hpp"

using namespace stringgrass;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id = 0;
  std::string name;
  long budget_ms = 0;  // 0 = no time budget
  long cases = 0;
  long elapsed_ms = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 8) failures.push_back(what);
    if (!ok && failures.size() == 8) failures.push_back("(further failures suppressed)");
  }
  bool passed() const {
    return failures.empty() && (budget_ms == 0 || elapsed_ms <= budget_ms);
  }
};

void report(const Criterion& c) {
  std::cout << (c.passed() ? "[PASS]" : "[FAIL]") << " criterion " << c.id << " " << c.name
            << ": " << c.cases << " checks in " << c.elapsed_ms << " ms";
  if (c.budget_ms > 0) std::cout << " (budget " << c.budget_ms << " ms)";
  std::cout << "\n";
  if (c.budget_ms > 0 && c.elapsed_ms > c.budget_ms)
    std::cout << "       over time budget\n";
  for (const std::string& f : c.failures) std::cout << "       " << f << "\n";
}

Criterion timed(int id, const std::string& name, long budget_ms,
                const std::function<void(Criterion&)>& body) {
  Criterion c;
  c.id = id;
  c.name = name;
  c.budget_ms = budget_ms;
  auto start = Clock::now();
  try {
    body(c);
  } catch (const Error& err) {
    c.expect(false, std::string("unexpected error: ") + err.what());
  } catch (const std::exception& err) {
    c.expect(false, std::string("unexpected exception: ") + err.what());
  }
  c.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return c;
}

Representation single_vertex(long dim) {
  Representation rep;
  rep.quiver = Quiver({1}, {});
  rep.dims = DimensionVector({dim});
  return rep;
}

// Two parallel arrows on two one-dimensional chains: identity plus a swap.
// The swap forces d(1.1)-d(2.1) = d(1.2)-d(2.2) = d(a) while the identity
// forces d(1.1)-d(2.1) = d(1.2)-d(2.2) already, but distinctness within the
// two-dimensional spaces collides: no additive assignment separates them.
Representation id_plus_swap() {
  Representation rep;
  rep.quiver = Quiver({1, 2}, {{"a", 2, 1}, {"b", 2, 1}});
  rep.dims = DimensionVector({2, 2});
  rep.matrices["a"] = {{1, 1, Rational(1)}, {2, 2, Rational(1)}};
  rep.matrices["b"] = {{1, 2, Rational(1)}, {2, 1, Rational(1)}};
  return rep;
}

std::vector<Ap1Family> family_sweep(int pmax, int nmax) {
  std::vector<Ap1Family> out;
  for (int p = 1; p <= pmax; ++p)
    for (int n = 0; n <= nmax; ++n) {
      for (int t = 1; t <= p; ++t) {
        out.push_back({p, n, Ap1Kind::Preprojective, t});
        out.push_back({p, n, Ap1Kind::Preinjective, t});
      }
      out.push_back({p, n, Ap1Kind::Regular, 1});
    }
  return out;
}

std::string fam_name(const Ap1Family& f) {
  std::ostringstream out;
  out << ap1_kind_name(f.kind) << " p=" << f.p << " n=" << f.n << " t=" << f.t;
  return out.str();
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + "\"" STRINGGRASS_CLI_PATH
                    "\" " + args + " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// --- criteria ---------------------------------------------------------------

void fixture_chi_values(Criterion& c) {
  auto chi = [](int row, std::vector<long> e) {
    return count_coordinate_subreps(table1_fixture(row), DimensionVector(e));
  };
  c.expect(chi(1, {1, 1}) == 1, "row 1 chi(1,1) != 1");
  c.expect(chi(2, {1, 1}) == 1, "row 2 chi(1,1) != 1");
  c.expect(chi(3, {1, 0, 0}) == 2, "row 3 chi(1,0,0) != 2");
  c.expect(chi(3, {1, 1, 1}) == 0, "row 3 chi(1,1,1) != 0");
  c.expect(chi(5, {1}) == 1, "row 5 chi(1) != 1");
  c.expect(chi(6, {1}) == 1, "row 6 chi(1) != 1");
  for (long n = 0; n <= 10; ++n) {
    Representation rep = single_vertex(n);
    for (long k = 0; k <= n; ++k) {
      BigInt got = count_coordinate_subreps(rep, DimensionVector({k}));
      if (got != binom(n, k)) {
        std::ostringstream msg;
        msg << "single vertex n=" << n << " k=" << k << ": " << got.get_str() << " != C(n,k)";
        c.expect(false, msg.str());
      } else {
        c.expect(true, "");
      }
    }
  }
}

void classification_suite(Criterion& c) {
  struct Expected {
    int row;
    bool string_mod;
    bool orientable;
  };
  for (Expected exp : {Expected{1, true, true}, Expected{2, false, false},
                       Expected{3, true, true}, Expected{4, true, true},
                       Expected{5, true, true}, Expected{6, true, false}}) {
    Representation rep = table1_fixture(exp.row);
    StringClassification cls = classify_string(rep);
    c.expect(cls.is_string == exp.string_mod,
             "row " + std::to_string(exp.row) + " string flag wrong");
    c.expect(cls.is_orientable == exp.orientable,
             "row " + std::to_string(exp.row) + " orientable flag wrong");
  }
  for (const Ap1Family& fam : family_sweep(5, 4)) {
    StringClassification cls = classify_string(build_ap1_module(fam));
    c.expect(cls.is_monomial && cls.is_string && cls.is_orientable,
             fam_name(fam) + " is not an orientable string module");
  }
}

void degree_certification(Criterion& c) {
  for (const Ap1Family& fam : family_sweep(5, 4)) {
    CoefficientQuiver cq = build_coefficient_quiver(build_ap1_module(fam));
    DegreeSolveResult solved = solve_degrees(cq);
    c.expect(solved.feasible(), fam_name(fam) + " not certified");
    if (solved.feasible())
      c.expect(verify_degrees(cq, *solved.assignment), fam_name(fam) + " certificate invalid");
  }
  {
    CoefficientQuiver cq = build_coefficient_quiver(table1_fixture(6));
    DegreeSolveResult solved = solve_degrees(cq);
    c.expect(solved.feasible() && verify_degrees(cq, *solved.assignment),
             "row 6 degree certificate missing or invalid");
  }

  // Published assignments for the catalogue rows.
  struct Published {
    int row;
    std::vector<long> vertex_degrees;  // by basis position
    std::map<std::string, long> arrow_degrees;
  };
  std::vector<Published> published = {
      {3, {1, 4, 2, 5, 3}, {{"a", -1}, {"b", -1}, {"c", 1}}},
      {4, {2, 4, 1, 3}, {{"a", 1}, {"b", -1}}},
      {5, {1, 2, 3, 4}, {{"a", 1}, {"b", 1}}},
      {6, {0, 1, 3, 2}, {{"a", 1}, {"b", 2}}},
  };
  for (const Published& pub : published) {
    CoefficientQuiver cq = build_coefficient_quiver(table1_fixture(pub.row));
    DegreeAssignment deg;
    for (long d : pub.vertex_degrees) deg.vertex_degree.emplace_back(d);
    for (const auto& [label, d] : pub.arrow_degrees) deg.arrow_degree[label] = BigInt(d);
    c.expect(verify_degrees(cq, deg),
             "published degrees rejected for row " + std::to_string(pub.row));
  }

  DegreeSolveResult infeasible = solve_degrees(build_coefficient_quiver(id_plus_swap()));
  c.expect(!infeasible.feasible(), "identity-plus-swap unexpectedly certified");
  if (!infeasible.feasible()) {
    c.expect(infeasible.witness.has_value(), "infeasible result lacks a witness");
    if (infeasible.witness) {
      c.expect(infeasible.witness->b1.q_vertex == infeasible.witness->b2.q_vertex &&
                   infeasible.witness->b1.index != infeasible.witness->b2.index,
               "witness is not a pair of distinct basis vectors at one vertex");
    }
  }
}

void oracle_equivalence(Criterion& c) {
  std::vector<std::pair<std::string, Representation>> fixtures;
  for (int row = 1; row <= 6; ++row)
    fixtures.emplace_back("row " + std::to_string(row), table1_fixture(row));
  fixtures.emplace_back("identity-plus-swap", id_plus_swap());
  fixtures.emplace_back("single vertex dim 6", single_vertex(6));
  for (const Ap1Family& fam : family_sweep(5, 4)) {
    Representation rep = build_ap1_module(fam);
    long total = 0;
    for (int i = 0; i < rep.dims.size(); ++i) total += rep.dims[i];
    if (total <= 16) fixtures.emplace_back(fam_name(fam), rep);
  }

  for (const auto& [name, rep] : fixtures) {
    ChiTable direct = coordinate_table(rep);
    ChiTable tiered = chi_table(rep);
    ChiTable oracle = oracle_table(build_coefficient_quiver(rep));
    c.expect(direct.counts == tiered.counts, name + ": direct route != tiered route");
    c.expect(tiered.counts == oracle.counts, name + ": tiered route != power-set oracle");
  }
}

void report_checks(Criterion& c, const VerifyReport& report, const std::set<std::string>& names) {
  for (const VerifyCheck& check : report.checks) {
    if (!names.count(check.name)) continue;
    c.cases += check.cases;
    if (!check.passed)
      c.expect(false, check.name + " failed: " + check.counterexample);
  }
}

void regular_chain_dp(Criterion& c) {
  Ap1Family fam{4, 20, Ap1Kind::Regular, 1};
  Representation rep = build_ap1_module(fam);
  CoefficientQuiver cq = build_coefficient_quiver(rep);
  ChiTable table = chi_table(rep, CountAlgo::ChainDP);

  c.expect(table.counts.size() == 53130, "support size != C(25,5)");
  DimensionVector zero(std::vector<long>(5, 0));
  c.expect(table.at(zero) == 1, "chi at e=0 != 1");
  c.expect(table.at(rep.dims) == 1, "chi at e=dims != 1");
  c.expect(table.total() == closed_subset_total_chains(cq),
           "sum over e disagrees with transfer-matrix total");

  long formula_mismatches = 0;
  for (const auto& [e, count] : table.counts)
    if (chi_regular(4, 20, e.as_longs()) != count) ++formula_mismatches;
  c.cases += static_cast<long>(table.counts.size());
  c.expect(formula_mismatches == 0,
           std::to_string(formula_mismatches) + " stored entries disagree with closed form");

  // Off-support dimension vectors: table reads 0 and the closed form vanishes.
  for (std::vector<long> e : {std::vector<long>{0, 0, 0, 0, 1}, std::vector<long>{0, 20, 0, 0, 0},
                              std::vector<long>{3, 7, 20, 1, 2}}) {
    DimensionVector ev(e);
    c.expect(table.at(ev) == 0 && chi_regular(4, 20, e) == 0,
             "off-support e should give 0 in table and formula");
  }
}

void determinism(Criterion& c) {
  const std::string fam_args = "table --p 3 --n 2 --kind preprojective --t 2";
  CliResult a = run_cli(fam_args, "STRINGGRASS_THREADS=1");
  CliResult b = run_cli(fam_args, "STRINGGRASS_THREADS=5");
  CliResult d = run_cli(fam_args);
  c.expect(a.exit_code == 0, "family table run failed");
  c.expect(a.out == b.out && a.out == d.out, "family table output varies across runs");

  const std::string json_args = "table --p 2 --n 2 --kind regular --format json";
  CliResult j1 = run_cli(json_args, "STRINGGRASS_THREADS=2");
  CliResult j2 = run_cli(json_args, "STRINGGRASS_THREADS=7");
  c.expect(j1.exit_code == 0 && j1.out == j2.out, "JSON table output varies across runs");

  const std::string path = "acceptance_row3.json";
  save_representation(table1_fixture(3), path);
  CliResult f1 = run_cli("table " + path, "STRINGGRASS_THREADS=1");
  CliResult f2 = run_cli("table " + path, "STRINGGRASS_THREADS=6");
  c.expect(f1.exit_code == 0 && f1.out == f2.out, "file table output varies across runs");
  std::remove(path.c_str());
}

}  // namespace

int main() {
  std::vector<Criterion> results;

  results.push_back(timed(1, "fixture-chi-values", 1000, fixture_chi_values));
  results.push_back(timed(2, "string-classification", 5000, classification_suite));
  results.push_back(timed(3, "degree-certification", 5000, degree_certification));
  results.push_back(timed(4, "counting-route-agreement", 30000, oracle_equivalence));

  // Criteria 5 and 6 share one verification run; each gets the same elapsed
  // time, which must clear the tighter of the two budgets.
  VerifyReport verification;
  Criterion c5 = timed(5, "closed-forms-vs-enumeration", 300000, [&](Criterion&) {
    verification = run_verification(VerifyOptions{});
  });
  report_checks(c5, verification,
                {"preprojective-vs-enumeration", "preinjective-vs-enumeration",
                 "regular-vs-enumeration", "two-vertex-vs-enumeration",
                 "two-vertex-specialization"});
  results.push_back(c5);

  Criterion c6;
  c6.id = 6;
  c6.name = "identity-suite";
  c6.budget_ms = 30000;
  c6.elapsed_ms = c5.elapsed_ms;
  report_checks(c6, verification,
                {"preinjective-duality", "regular-recursion", "subset-components-bruteforce",
                 "binomial-product-identity", "vandermonde", "flag-forms-agree"});
  results.push_back(c6);

  results.push_back(timed(7, "large-regular-chain-dp", 10000, regular_chain_dp));
  results.push_back(timed(8, "byte-identical-output", 0, determinism));

  int failed = 0;
  for (const Criterion& c : results) {
    report(c);
    if (!c.passed()) ++failed;
  }
  std::cout << (failed == 0 ? "acceptance: pass" : "acceptance: FAIL") << " (" << results.size()
            << " criteria)\n";
  return failed == 0 ? 0 : 1;
}
