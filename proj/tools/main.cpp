// Command-line front end: classify representations, certify the degree
// hypotheses, compute chi tables, and run the formula-vs-enumeration sweep.
// stdout is deterministic for fixed arguments; timing goes to stderr.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "stringgrass/chi.hpp"
#include "stringgrass/coeff_quiver.hpp"
#include "stringgrass/degrees.hpp"
#include "stringgrass/error.hpp"
#include "stringgrass/families.hpp"
#include "stringgrass/formulas.hpp"
#include "stringgrass/json_io.hpp"
#include "stringgrass/verify.hpp"

namespace sg = stringgrass;
using nlohmann::json;

namespace {

int exit_code_for(sg::Errc code) {
  switch (code) {
    case sg::Errc::NotMonomial:
      return 2;
    case sg::Errc::InvalidParameter:
    case sg::Errc::TooLarge:
      return 4;
    default:
      return 3;  // parse and input-validation failures
  }
}

struct InputFlags {
  std::string file;
  int p = 0;
  int n = -1;
  std::string kind;
  int t = 1;

  bool family_requested() const { return p != 0 || n >= 0 || !kind.empty(); }
};

void add_input_flags(CLI::App* cmd, InputFlags& in, bool file_only) {
  cmd->add_option("input", in.file, "representation file (JSON)");
  if (file_only) return;
  cmd->add_option("--p", in.p, "cycle size: p arrows one way, one back");
  cmd->add_option("--n", in.n, "module size parameter");
  cmd->add_option("--kind", in.kind, "preprojective|preinjective|regular");
  cmd->add_option("--t", in.t, "break vertex (1..p, ignored for regular)");
}

struct ResolvedInput {
  sg::Representation rep;
  std::string descriptor;
  std::optional<sg::Ap1Family> family;
};

ResolvedInput resolve_input(const InputFlags& in) {
  if (!in.file.empty() && in.family_requested()) {
    sg::fail(sg::Errc::InvalidParameter, "give either an input file or family flags, not both");
  }
  if (!in.file.empty()) {
    return {sg::load_representation(in.file), in.file, std::nullopt};
  }
  if (!in.family_requested()) {
    sg::fail(sg::Errc::InvalidParameter,
             "no input: pass a representation file or --p/--n/--kind");
  }
  std::optional<sg::Ap1Kind> kind = sg::parse_ap1_kind(in.kind);
  if (!kind) {
    sg::fail(sg::Errc::InvalidParameter, "unknown --kind '" + in.kind +
                                             "' (want preprojective|preinjective|regular)");
  }
  if (in.n < 0) sg::fail(sg::Errc::InvalidParameter, "family input needs --n >= 0");
  sg::Ap1Family fam{in.p, in.n, *kind, *kind == sg::Ap1Kind::Regular ? 1 : in.t};
  std::ostringstream desc;
  desc << sg::ap1_kind_name(fam.kind) << " p=" << fam.p << " n=" << fam.n;
  if (fam.kind != sg::Ap1Kind::Regular) desc << " t=" << fam.t;
  return {sg::build_ap1_module(fam), desc.str(), fam};
}

sg::BigInt family_formula(const sg::Ap1Family& fam, const std::vector<long>& e) {
  switch (fam.kind) {
    case sg::Ap1Kind::Preprojective:
      return sg::chi_preprojective(fam.p, fam.n, fam.t, e);
    case sg::Ap1Kind::Preinjective:
      return sg::chi_preinjective(fam.p, fam.n, fam.t, e);
    case sg::Ap1Kind::Regular:
      return sg::chi_regular(fam.p, fam.n, e);
  }
  return 0;
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

const char* yesno(bool b) { return b ? "yes" : "no"; }

json classification_json(const sg::CoefficientQuiver& cq, const sg::StringClassification& cls) {
  json out{{"monomial", cls.is_monomial},
           {"string", cls.is_string},
           {"orientable", cls.is_orientable}};
  if (cls.is_string) {
    json chains = json::array();
    for (const std::vector<int>& chain : cls.components) {
      json names = json::array();
      for (int pos : chain) names.push_back(cq.basis(pos).name());
      chains.push_back(names);
    }
    out["chains"] = chains;
  }
  return out;
}

json certification_json(const sg::CoefficientQuiver& cq, const sg::DegreeSolveResult& deg) {
  json out{{"feasible", deg.feasible()}};
  if (deg.feasible()) {
    out["degrees"] = json::parse(sg::degree_assignment_to_json(cq, *deg.assignment));
  } else {
    out["witness"] = {deg.witness->b1.name(), deg.witness->b2.name()};
  }
  return out;
}

int run_chi(const InputFlags& in, const std::string& e_text, const std::string& format,
            bool force_oracle) {
  ResolvedInput input = resolve_input(in);
  sg::DimensionVector e = sg::DimensionVector::parse(e_text);
  sg::StringClassification cls = sg::classify_string(input.rep);
  if (!cls.is_monomial) {
    sg::fail(sg::Errc::NotMonomial,
             "an arrow matrix has two nonzeros in one row or column; chi is not a count here");
  }
  sg::CoefficientQuiver cq = sg::build_coefficient_quiver(input.rep);
  sg::BigInt chi = sg::count_successor_closed(
      cq, e, force_oracle ? sg::CountAlgo::Exhaustive : sg::CountAlgo::Auto);
  sg::DegreeSolveResult deg = sg::solve_degrees(cq);

  if (format == "json") {
    json out{{"input", input.descriptor},
             {"classification", classification_json(cq, cls)},
             {"certification", certification_json(cq, deg)},
             {"e", e.as_longs()},
             {"chi", chi.get_str()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "input: " << input.descriptor << "\n"
              << "monomial: " << yesno(cls.is_monomial) << "\n"
              << "string: " << yesno(cls.is_string) << "\n"
              << "orientable: " << yesno(cls.is_orientable) << "\n"
              << "certified: " << yesno(deg.feasible()) << "\n"
              << "e: " << e.to_string() << "\n"
              << "chi: " << chi.get_str() << "\n";
  }
  return 0;
}

int run_table(const InputFlags& in, const std::string& format, bool force_oracle) {
  ResolvedInput input = resolve_input(in);
  sg::StringClassification cls = sg::classify_string(input.rep);
  if (!cls.is_monomial) {
    sg::fail(sg::Errc::NotMonomial,
             "an arrow matrix has two nonzeros in one row or column; chi is not a count here");
  }
  sg::CoefficientQuiver cq = sg::build_coefficient_quiver(input.rep);
  sg::ChiTable table =
      sg::chi_table(cq, force_oracle ? sg::CountAlgo::Exhaustive : sg::CountAlgo::Auto);
  sg::DegreeSolveResult deg = sg::solve_degrees(cq);
  const std::vector<long> dims = input.rep.dims.as_longs();

  if (format == "json") {
    // Rows are streamed: the box can hold millions of cells.
    std::cout << "{\n"
              << "  \"input\": " << json(input.descriptor).dump() << ",\n"
              << "  \"classification\": " << classification_json(cq, cls).dump() << ",\n"
              << "  \"certification\": " << certification_json(cq, deg).dump() << ",\n"
              << "  \"rows\": [";
    bool first = true;
    for_each_box(dims, [&](const std::vector<long>& e) {
      sg::BigInt chi = table.at(sg::DimensionVector(e));
      json row{{"e", e}, {"chi", chi.get_str()}};
      if (input.family) {
        sg::BigInt formula = family_formula(*input.family, e);
        row["formula"] = formula.get_str();
        row["match"] = formula == chi;
      }
      std::cout << (first ? "\n    " : ",\n    ") << row.dump();
      first = false;
    });
    std::cout << "\n  ]\n}\n";
  } else {
    for (std::size_t i = 0; i < dims.size(); ++i) std::cout << "e_" << i + 1 << ",";
    std::cout << "chi";
    if (input.family) std::cout << ",formula,match";
    std::cout << "\n";
    for_each_box(dims, [&](const std::vector<long>& e) {
      sg::BigInt chi = table.at(sg::DimensionVector(e));
      for (long v : e) std::cout << v << ",";
      std::cout << chi.get_str();
      if (input.family) {
        sg::BigInt formula = family_formula(*input.family, e);
        std::cout << "," << formula.get_str() << ","
                  << (formula == chi ? "true" : "false");
      }
      std::cout << "\n";
    });
  }
  return 0;
}

int run_check(const InputFlags& in, const std::string& format, const std::string& dot_path) {
  ResolvedInput input = resolve_input(in);
  sg::StringClassification cls = sg::classify_string(input.rep);
  sg::CoefficientQuiver cq = sg::build_coefficient_quiver(input.rep);
  sg::DegreeSolveResult deg = sg::solve_degrees(cq);

  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) sg::fail(sg::Errc::ParseError, "cannot write " + dot_path);
    out << sg::to_dot(cq);
  }

  if (format == "json") {
    json out{{"input", input.descriptor},
             {"classification", classification_json(cq, cls)},
             {"certification", certification_json(cq, deg)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << "input: " << input.descriptor << "\n"
            << "monomial: " << yesno(cls.is_monomial) << "\n"
            << "string: " << yesno(cls.is_string) << "\n"
            << "orientable: " << yesno(cls.is_orientable) << "\n";
  if (cls.is_string) {
    std::cout << "chains: " << cls.components.size() << "\n";
    for (std::size_t i = 0; i < cls.components.size(); ++i) {
      std::cout << "chain " << i + 1 << ":";
      for (int pos : cls.components[i]) std::cout << " " << cq.basis(pos).name();
      std::cout << "\n";
    }
  }
  std::cout << "degrees: " << (deg.feasible() ? "feasible" : "infeasible") << "\n";
  if (deg.feasible()) {
    for (int pos = 0; pos < cq.total_vertices(); ++pos) {
      std::cout << "d(" << cq.basis(pos).name()
                << ") = " << deg.assignment->vertex_degree[pos].get_str() << "\n";
    }
    for (const auto& [label, value] : deg.assignment->arrow_degree) {
      std::cout << "d(" << label << ") = " << value.get_str() << "\n";
    }
  } else {
    std::cout << "witness: " << deg.witness->b1.name() << " " << deg.witness->b2.name() << "\n";
  }
  return 0;
}

int run_verify(const sg::VerifyOptions& opt) {
  sg::VerifyReport report = sg::run_verification(opt);
  for (const sg::VerifyCheck& check : report.checks) {
    if (check.passed) {
      std::cout << "check " << check.name << ": pass (" << check.cases << " cases)\n";
    } else {
      std::cout << "check " << check.name << ": FAIL\n"
                << "  counterexample: " << check.counterexample << "\n";
    }
  }
  std::cout << "verification: " << (report.all_passed() ? "pass" : "FAIL") << " ("
            << report.checks.size() << " checks, " << report.total_cases() << " cases)\n";
  return report.all_passed() ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"chi tables of quiver Grassmannians via successor-closed subset counting"};
  app.require_subcommand(1);

  InputFlags chi_in, table_in, check_in;
  std::string chi_e, chi_format = "text", table_format = "csv", check_format = "text";
  std::string dot_path;
  bool chi_oracle = false, table_oracle = false;
  sg::VerifyOptions verify_opt;

  CLI::App* chi = app.add_subcommand("chi", "chi_e of one representation");
  add_input_flags(chi, chi_in, false);
  chi->add_option("--e", chi_e, "dimension vector, comma-separated")->required();
  chi->add_option("--format", chi_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  chi->add_flag("--oracle", chi_oracle, "force the exhaustive per-component scan");

  CLI::App* table = app.add_subcommand("table", "chi_e for every e up to the dimension vector");
  add_input_flags(table, table_in, false);
  table->add_option("--format", table_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--oracle", table_oracle, "force the exhaustive per-component scan");

  CLI::App* check = app.add_subcommand("check", "classification and degree certification");
  add_input_flags(check, check_in, false);
  check->add_option("--format", check_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  check->add_option("--dot", dot_path, "write the coefficient quiver as Graphviz DOT");

  CLI::App* verify = app.add_subcommand("verify", "formula-vs-enumeration sweep");
  verify->add_option("--pmax", verify_opt.pmax, "largest cycle size (default 4)");
  verify->add_option("--nmax", verify_opt.nmax, "largest module size (default 3)");
  verify->add_option("--nmax-regular", verify_opt.nmax_regular, "regular-family bound")
      ->group("");
  verify->add_option("--nmax-kronecker", verify_opt.nmax_kronecker, "two-vertex bound")
      ->group("");
  verify->add_option("--identity-nmax", verify_opt.identity_nmax, "identity-suite bound")
      ->group("");
  verify->add_flag("--inject-convention-fault", verify_opt.inject_convention_fault,
                   "use a wrong binomial convention; the sweep must fail")
      ->group("");

  CLI11_PARSE(app, argc, argv);

  auto start = std::chrono::steady_clock::now();
  int rc = 0;
  try {
    if (chi->parsed()) rc = run_chi(chi_in, chi_e, chi_format, chi_oracle);
    if (table->parsed()) rc = run_table(table_in, table_format, table_oracle);
    if (check->parsed()) rc = run_check(check_in, check_format, dot_path);
    if (verify->parsed()) rc = run_verify(verify_opt);
  } catch (const sg::Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    rc = exit_code_for(err.code());
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    rc = 1;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
  return rc;
}
