#include "stringgrass/verify.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "stringgrass/chi.hpp"
#include "stringgrass/coeff_quiver.hpp"
#include "stringgrass/families.hpp"
#include "stringgrass/formulas.hpp"

namespace stringgrass {

namespace {

// Deliberately wrong convention: treats C(p, 0) as 1 even for p < 0. Injected
// by tests to prove the sweeps are not vacuous.
BigInt broken_binom(long p, long q) {
  if (q == 0) return 1;
  return binom(p, q);
}

// Ascending lexicographic walk of the box 0 <= e <= dims.
template <class F>
void for_each_box(const std::vector<long>& dims, F&& f) {
  std::vector<long> e(dims.size(), 0);
  while (true) {
    f(e);
    int i = static_cast<int>(e.size()) - 1;
    while (i >= 0) {
      if (++e[i] <= dims[i]) break;
      e[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
}

std::string format_e(const std::vector<long>& e) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out << ",";
    out << e[i];
  }
  out << ")";
  return out.str();
}

struct SweepResult {
  long cases = 0;
  std::string counterexample;
  bool ok() const { return counterexample.empty(); }
};

template <class Task, class Fn>
std::vector<SweepResult> parallel_map(const std::vector<Task>& tasks, int threads, Fn fn) {
  std::vector<SweepResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      results[i] = fn(tasks[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

VerifyCheck merge(const std::string& name, const std::vector<SweepResult>& results) {
  VerifyCheck check{name, 0, true, ""};
  for (const SweepResult& r : results) {
    check.cases += r.cases;
    if (check.passed && !r.ok()) {
      check.passed = false;
      check.counterexample = r.counterexample;
    }
  }
  return check;
}

// Independent enumeration side: the direct subset scan on the matrices when it
// is affordable, the coefficient-quiver DP beyond that.
ChiTable enumerate_table(const Representation& rep) {
  if (rep.total_dim() <= 24) return coordinate_table(rep);
  return chi_table(rep);
}

BigInt family_formula(Ap1Kind kind, int p, int n, int t, const std::vector<long>& e,
                      BinomialFn B) {
  switch (kind) {
    case Ap1Kind::Preprojective: return chi_preprojective(p, n, t, e, B);
    case Ap1Kind::Preinjective: return chi_preinjective(p, n, t, e, B);
    case Ap1Kind::Regular: return chi_regular(p, n, e, B);
  }
  return 0;
}

BigInt kronecker_formula(Ap1Kind kind, long n, long e1, long e2, BinomialFn B) {
  switch (kind) {
    case Ap1Kind::Preprojective: return chi_kronecker_preprojective(n, e1, e2, B);
    case Ap1Kind::Preinjective: return chi_kronecker_preinjective(n, e1, e2, B);
    case Ap1Kind::Regular: return chi_kronecker_regular(n, e1, e2, B);
  }
  return 0;
}

struct FamilyTask {
  Ap1Kind kind;
  int p, n, t;
};

std::string family_tag(const FamilyTask& task) {
  std::ostringstream out;
  out << ap1_kind_name(task.kind) << " p=" << task.p << " n=" << task.n;
  if (task.kind != Ap1Kind::Regular) out << " t=" << task.t;
  return out.str();
}

// The product forms vanish at two boundary vectors where the count is 1:
// preprojective at e = 0, preinjective at e = dims. Those two points are
// pinned exactly; everywhere else formula and enumeration must agree.
SweepResult run_family_sweep(const FamilyTask& task, BinomialFn B) {
  Representation rep = build_ap1_module({task.p, task.n, task.kind, task.t});
  ChiTable table = enumerate_table(rep);
  SweepResult result;
  const std::vector<long> dims = rep.dims.as_longs();
  for_each_box(dims, [&](const std::vector<long>& e) {
    if (!result.ok()) return;
    ++result.cases;
    BigInt formula = family_formula(task.kind, task.p, task.n, task.t, e, B);
    BigInt count = table.at(DimensionVector(e));
    bool degenerate =
        (task.kind == Ap1Kind::Preprojective && DimensionVector(e).is_zero()) ||
        (task.kind == Ap1Kind::Preinjective && e == dims);
    bool ok = degenerate ? (formula == 0 && count == 1) : (formula == count);
    if (!ok) {
      std::ostringstream out;
      out << family_tag(task) << " e=" << format_e(e) << ": formula=" << formula.get_str()
          << " enumeration=" << count.get_str();
      if (degenerate) out << " (expected formula 0, count 1)";
      result.counterexample = out.str();
    }
  });
  return result;
}

SweepResult run_kronecker_sweep(const FamilyTask& task, BinomialFn B) {
  Representation rep = build_ap1_module({1, task.n, task.kind, 1});
  ChiTable table = enumerate_table(rep);
  SweepResult result;
  // One step beyond the box: the closed forms must vanish out there.
  std::vector<long> bounds{rep.dims[0] + 1, rep.dims[1] + 1};
  for_each_box(bounds, [&](const std::vector<long>& e) {
    if (!result.ok()) return;
    ++result.cases;
    BigInt formula = kronecker_formula(task.kind, task.n, e[0], e[1], B);
    BigInt count = e[0] <= rep.dims[0] && e[1] <= rep.dims[1] ? table.at(DimensionVector(e)) : 0;
    if (formula != count) {
      std::ostringstream out;
      out << ap1_kind_name(task.kind) << " n=" << task.n << " e=" << format_e(e)
          << ": two-vertex formula=" << formula.get_str() << " enumeration=" << count.get_str();
      result.counterexample = out.str();
    }
  });
  return result;
}

// At p = 1 the general product forms and the two-vertex forms differ exactly
// by the delta corrections.
SweepResult run_specialization_sweep(const FamilyTask& task, BinomialFn B) {
  Representation rep = build_ap1_module({1, task.n, task.kind, 1});
  SweepResult result;
  std::vector<long> bounds{rep.dims[0] + 1, rep.dims[1] + 1};
  for_each_box(bounds, [&](const std::vector<long>& e) {
    if (!result.ok()) return;
    ++result.cases;
    BigInt general = family_formula(task.kind, 1, task.n, 1, e, B);
    BigInt special = kronecker_formula(task.kind, task.n, e[0], e[1], B);
    BigInt delta = 0;
    if (task.kind == Ap1Kind::Preprojective && e[0] == 0 && e[1] == 0) delta = 1;
    if (task.kind == Ap1Kind::Preinjective && e[0] == task.n && e[1] == task.n + 1) delta = 1;
    if (special != general + delta) {
      std::ostringstream out;
      out << ap1_kind_name(task.kind) << " n=" << task.n << " e=" << format_e(e)
          << ": two-vertex form " << special.get_str() << " != product form "
          << general.get_str() << " + delta " << delta.get_str();
      result.counterexample = out.str();
    }
  });
  return result;
}

SweepResult run_duality_sweep(const FamilyTask& task, BinomialFn B) {
  const int p = task.p, n = task.n, t = task.t;
  Representation under = build_ap1_module({p, n, Ap1Kind::Preinjective, t});
  Representation over = build_ap1_module({p, n, Ap1Kind::Preprojective, p + 1 - t});
  ChiTable under_table = enumerate_table(under);
  ChiTable over_table = enumerate_table(over);
  const std::vector<long> d = under.dims.as_longs();
  auto reflect = [&](const std::vector<long>& e) {
    std::vector<long> out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      out[i] = d[e.size() - 1 - i] - e[e.size() - 1 - i];
    }
    return out;
  };
  SweepResult result;
  for_each_box(d, [&](const std::vector<long>& e) {
    if (!result.ok()) return;
    result.cases += 2;
    std::vector<long> re = reflect(e);
    BigInt lhs_count = under_table.at(DimensionVector(e));
    BigInt rhs_count = over_table.at(DimensionVector(re));
    BigInt lhs_formula = chi_preinjective(p, n, t, e, B);
    BigInt rhs_formula = chi_preprojective(p, n, p + 1 - t, re, B);
    if (lhs_count != rhs_count || lhs_formula != rhs_formula) {
      std::ostringstream out;
      out << "preinjective p=" << p << " n=" << n << " t=" << t << " e=" << format_e(e)
          << " vs preprojective t=" << p + 1 - t << " e=" << format_e(re) << ": counts "
          << lhs_count.get_str() << "/" << rhs_count.get_str() << ", formulas "
          << lhs_formula.get_str() << "/" << rhs_formula.get_str();
      result.counterexample = out.str();
    }
  });
  return result;
}

SweepResult run_recursion_sweep(int n, int table_nmax, BinomialFn B) {
  SweepResult result;
  std::vector<long> bounds{static_cast<long>(n) + 1, static_cast<long>(n) + 1};
  for_each_box(bounds, [&](const std::vector<long>& e) {
    if (!result.ok()) return;
    ++result.cases;
    BigInt lhs = chi_kronecker_regular(n, e[0], e[1], B);
    BigInt rhs = chi_kronecker_regular(n - 1, e[0] - 1, e[1] - 1, B) +
                 chi_kronecker_preprojective(n - 1, e[0], e[1], B);
    if (lhs != rhs) {
      std::ostringstream out;
      out << "regular recursion n=" << n << " e=" << format_e(e) << ": " << lhs.get_str()
          << " != " << rhs.get_str();
      result.counterexample = out.str();
    }
  });
  if (!result.ok() || n > table_nmax) return result;

  ChiTable cur = enumerate_table(build_ap1_module({1, n, Ap1Kind::Regular, 1}));
  ChiTable prev = enumerate_table(build_ap1_module({1, n - 1, Ap1Kind::Regular, 1}));
  ChiTable pre = enumerate_table(build_ap1_module({1, n - 1, Ap1Kind::Preprojective, 1}));
  for_each_box({static_cast<long>(n), static_cast<long>(n)}, [&](const std::vector<long>& e) {
    if (!result.ok()) return;
    ++result.cases;
    BigInt lhs = cur.at(DimensionVector(e));
    BigInt shifted = 0;
    if (e[0] >= 1 && e[1] >= 1) shifted = prev.at(DimensionVector({e[0] - 1, e[1] - 1}));
    BigInt rhs = shifted + pre.at(DimensionVector(e));
    if (lhs != rhs) {
      std::ostringstream out;
      out << "regular recursion (tables) n=" << n << " e=" << format_e(e) << ": "
          << lhs.get_str() << " != " << rhs.get_str();
      result.counterexample = out.str();
    }
  });
  return result;
}

// Count subsets of {1..n} by (size, number of consecutive blocks, membership
// of n) with a bitmask scan, then compare every closed form against the tally.
VerifyCheck check_subset_components(int nmax) {
  VerifyCheck check{"subset-components-bruteforce", 0, true, ""};
  for (long n = 0; n <= nmax && check.passed; ++n) {
    // tally[r][c][0] avoids n, [1] contains n
    std::vector<std::vector<std::array<long, 2>>> tally(
        n + 1, std::vector<std::array<long, 2>>(n + 2, {0, 0}));
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      long r = static_cast<long>(__builtin_popcountl(mask));
      long c = 0;
      for (long i = 0; i < n; ++i) {
        bool cur = (mask >> i) & 1ul;
        bool prev = i > 0 && ((mask >> (i - 1)) & 1ul);
        if (cur && !prev) ++c;
      }
      bool has_n = n > 0 && ((mask >> (n - 1)) & 1ul);
      ++tally[r][c][has_n ? 1 : 0];
    }
    for (long r = 0; r <= n && check.passed; ++r) {
      for (long c = 0; c <= n + 1 && check.passed; ++c) {
        long with = tally[r][c][1], without = tally[r][c][0];
        BigInt f_all = count_subsets_with_components(n, r, c);
        BigInt f_with = count_subsets_with_components(n, r, c, true);
        BigInt f_without = count_subsets_with_components(n, r, c, false);
        check.cases += 4;
        auto complain = [&](const char* what, const BigInt& got, long expect) {
          check.passed = false;
          std::ostringstream out;
          out << what << " n=" << n << " r=" << r << " c=" << c << ": formula "
              << got.get_str() << " != count " << expect;
          check.counterexample = out.str();
        };
        if (f_all != with + without) complain("subsets", f_all, with + without);
        else if (f_with != with) complain("subsets containing n", f_with, with);
        else if (f_without != without) complain("subsets avoiding n", f_without, without);
        else if (f_all != f_with + f_without) complain("split additivity", f_all, with + without);
      }
    }
  }
  return check;
}

VerifyCheck check_product_identity(int nmax) {
  VerifyCheck check{"binomial-product-identity", 0, true, ""};
  for (long p = 0; p <= nmax && check.passed; ++p) {
    for (long q = 0; q <= p && check.passed; ++q) {
      for (long r = 0; r <= q && check.passed; ++r) {
        ++check.cases;
        if (binom(p, q) * binom(q, r) != binom(p, r) * binom(p - r, q - r)) {
          std::ostringstream out;
          out << "C(p,q)C(q,r) != C(p,r)C(p-r,q-r) at p=" << p << " q=" << q << " r=" << r;
          check.passed = false;
          check.counterexample = out.str();
        }
      }
    }
  }
  return check;
}

VerifyCheck check_vandermonde(int nmax) {
  VerifyCheck check{"vandermonde", 0, true, ""};
  for (long a = 0; a <= nmax && check.passed; ++a) {
    for (long b = 0; b <= nmax && check.passed; ++b) {
      for (long c = 0; c <= nmax && check.passed; ++c) {
        ++check.cases;
        BigInt sum = 0;
        for (long k = 0; k <= c; ++k) sum += binom(a, k) * binom(b, c - k);
        if (sum != binom(a + b, c)) {
          std::ostringstream out;
          out << "vandermonde fails at a=" << a << " b=" << b << " c=" << c;
          check.passed = false;
          check.counterexample = out.str();
        }
      }
    }
  }
  return check;
}

VerifyCheck check_flag_forms() {
  VerifyCheck check{"flag-forms-agree", 0, true, ""};
  // Exhaustive over length-4 integer vectors with entries in -1..3, all (r,s).
  std::vector<long> e(4, 0);
  for (e[0] = -1; e[0] <= 3 && check.passed; ++e[0]) {
    for (e[1] = -1; e[1] <= 3 && check.passed; ++e[1]) {
      for (e[2] = -1; e[2] <= 3 && check.passed; ++e[2]) {
        for (e[3] = -1; e[3] <= 3 && check.passed; ++e[3]) {
          for (int r = 1; r <= 4 && check.passed; ++r) {
            for (int s = 1; s <= 4 && check.passed; ++s) {
              ++check.cases;
              if (chi_flag(e, r, s) != chi_flag_alt(e, r, s)) {
                std::ostringstream out;
                out << "flag forms differ at e=" << format_e(e) << " r=" << r << " s=" << s;
                check.passed = false;
                check.counterexample = out.str();
              }
            }
          }
        }
      }
    }
  }
  return check;
}

}  // namespace

bool VerifyReport::all_passed() const {
  for (const VerifyCheck& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

long VerifyReport::total_cases() const {
  long total = 0;
  for (const VerifyCheck& c : checks) total += c.cases;
  return total;
}

int resolve_thread_count(int requested, int tasks) {
  long n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("STRINGGRASS_THREADS")) {
      char* end = nullptr;
      n = std::strtol(env, &end, 10);
      if (end == env || (end && *end != '\0')) n = 0;
    }
  }
  if (n <= 0) n = static_cast<long>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (tasks < 1) tasks = 1;
  return static_cast<int>(std::min<long>(n, tasks));
}

VerifyReport run_verification(const VerifyOptions& opt) {
  if (opt.pmax < 1 || opt.nmax < 0) {
    fail(Errc::InvalidParameter, "need pmax >= 1 and nmax >= 0");
  }
  const int nmax_regular = opt.nmax_regular >= 0 ? opt.nmax_regular : opt.nmax + 1;
  const int nmax_kronecker = opt.nmax_kronecker >= 0 ? opt.nmax_kronecker : std::max(opt.nmax, 8);
  const BinomialFn B = opt.inject_convention_fault ? broken_binom : binom;

  std::vector<FamilyTask> pre_tasks, pri_tasks, reg_tasks, kron_tasks, dual_tasks;
  for (int p = 1; p <= opt.pmax; ++p) {
    for (int n = 0; n <= opt.nmax; ++n) {
      for (int t = 1; t <= p; ++t) {
        pre_tasks.push_back({Ap1Kind::Preprojective, p, n, t});
        pri_tasks.push_back({Ap1Kind::Preinjective, p, n, t});
        dual_tasks.push_back({Ap1Kind::Preinjective, p, n, t});
      }
    }
    for (int n = 0; n <= nmax_regular; ++n) reg_tasks.push_back({Ap1Kind::Regular, p, n, 1});
  }
  for (int n = 0; n <= nmax_kronecker; ++n) {
    for (Ap1Kind kind :
         {Ap1Kind::Preprojective, Ap1Kind::Preinjective, Ap1Kind::Regular}) {
      kron_tasks.push_back({kind, 1, n, 1});
    }
  }

  const int threads = resolve_thread_count(
      opt.threads, static_cast<int>(pre_tasks.size() + pri_tasks.size() + reg_tasks.size()));

  VerifyReport report;
  auto family = [&](const char* name, const std::vector<FamilyTask>& tasks) {
    report.checks.push_back(
        merge(name, parallel_map(tasks, threads, [&](const FamilyTask& task) {
          return run_family_sweep(task, B);
        })));
  };
  family("preprojective-vs-enumeration", pre_tasks);
  family("preinjective-vs-enumeration", pri_tasks);
  family("regular-vs-enumeration", reg_tasks);

  report.checks.push_back(
      merge("two-vertex-vs-enumeration", parallel_map(kron_tasks, threads, [&](const FamilyTask& t) {
        return run_kronecker_sweep(t, B);
      })));
  report.checks.push_back(
      merge("two-vertex-specialization", parallel_map(kron_tasks, threads, [&](const FamilyTask& t) {
        return run_specialization_sweep(t, B);
      })));
  report.checks.push_back(
      merge("preinjective-duality", parallel_map(dual_tasks, threads, [&](const FamilyTask& t) {
        return run_duality_sweep(t, B);
      })));

  {
    std::vector<int> ns;
    for (int n = 1; n <= nmax_kronecker; ++n) ns.push_back(n);
    report.checks.push_back(
        merge("regular-recursion", parallel_map(ns, threads, [&](int n) {
          return run_recursion_sweep(n, 5, B);
        })));
  }

  report.checks.push_back(check_subset_components(opt.identity_nmax));
  report.checks.push_back(check_product_identity(opt.identity_nmax));
  report.checks.push_back(check_vandermonde(opt.identity_nmax));
  report.checks.push_back(check_flag_forms());
  return report;
}

}  // namespace stringgrass
