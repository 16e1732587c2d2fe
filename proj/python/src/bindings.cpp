// Python bindings for the exact quiver-Grassmannian counting core.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "stringgrass/chi.hpp"
#include "stringgrass/coeff_quiver.hpp"
#include "stringgrass/degrees.hpp"
#include "stringgrass/families.hpp"
#include "stringgrass/formulas.hpp"
#include "stringgrass/json_io.hpp"
#include "stringgrass/verify.hpp"

namespace py = pybind11;
using namespace stringgrass;

namespace {

// Arbitrary-precision results cross the boundary as Python ints.
py::int_ to_py(const BigInt& z) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

DimensionVector to_dims(const std::vector<long>& e) { return DimensionVector(e); }

py::dict classification_dict(const CoefficientQuiver& cq, const StringClassification& cls) {
  py::dict out;
  out["monomial"] = cls.is_monomial;
  out["string"] = cls.is_string;
  out["orientable"] = cls.is_orientable;
  py::list chains;
  if (cls.is_string) {
    for (const std::vector<int>& chain : cls.components) {
      py::list names;
      for (int pos : chain) names.append(cq.basis(pos).name());
      chains.append(names);
    }
  }
  out["chains"] = chains;
  return out;
}

py::dict degrees_dict(const CoefficientQuiver& cq, const DegreeSolveResult& deg) {
  py::dict out;
  out["feasible"] = deg.feasible();
  if (deg.feasible()) {
    py::dict vertex_degrees;
    for (int pos = 0; pos < cq.total_vertices(); ++pos)
      vertex_degrees[py::str(cq.basis(pos).name())] = to_py(deg.assignment->vertex_degree[pos]);
    py::dict arrow_degrees;
    for (const auto& [label, value] : deg.assignment->arrow_degree)
      arrow_degrees[py::str(label)] = to_py(value);
    out["vertex_degrees"] = vertex_degrees;
    out["arrow_degrees"] = arrow_degrees;
  } else {
    out["witness"] = py::make_tuple(deg.witness->b1.name(), deg.witness->b2.name());
  }
  return out;
}

py::dict table_dict(const ChiTable& table) {
  py::dict out;
  for (const auto& [e, count] : table.counts) {
    py::tuple key(e.size());
    for (int i = 0; i < e.size(); ++i) key[static_cast<std::size_t>(i)] = e[i];
    out[key] = to_py(count);
  }
  return out;
}

Representation make_family(const std::string& kind, int p, int n, int t) {
  std::optional<Ap1Kind> parsed = parse_ap1_kind(kind);
  if (!parsed) fail(Errc::InvalidParameter, "unknown family kind '" + kind + "'");
  return build_ap1_module({p, n, *parsed, t});
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Euler characteristics of quiver Grassmannians for monomial "
            "representations: coefficient quivers, string classification, degree "
            "certificates, counting, and closed-form verification.";

  py::class_<Representation>(m, "Representation")
      .def("__repr__", [](const Representation& rep) {
        return "<Representation dims=(" + rep.dims.to_string() + ")>";
      })
      .def_property_readonly("dims", [](const Representation& rep) {
        return rep.dims.as_longs();
      })
      .def_property_readonly("vertices", [](const Representation& rep) {
        return rep.quiver.vertices();
      })
      .def("to_json", &representation_to_json);

  m.def("load_representation", &load_representation, py::arg("path"),
        "Read a representation from a JSON file.");
  m.def("save_representation", &save_representation, py::arg("rep"), py::arg("path"),
        "Write a representation to a JSON file in canonical form.");
  m.def("representation_from_json", &representation_from_json, py::arg("text"),
        "Parse a representation from a JSON string.");

  m.def("fixture", &table1_fixture, py::arg("row"),
        "One of the six catalogue examples (rows 1-6).");
  m.def("family", &make_family, py::arg("kind"), py::arg("p"), py::arg("n"), py::arg("t") = 1,
        "Build a preprojective / preinjective / regular module over the cyclic "
        "quiver with p+1 vertices.");

  m.def("classify", [](const Representation& rep) {
    CoefficientQuiver cq = build_coefficient_quiver(rep);
    return classification_dict(cq, classify_string(rep));
  }, py::arg("rep"), "Monomial / string / orientable flags plus the chains.");

  m.def("certify_degrees", [](const Representation& rep) {
    CoefficientQuiver cq = build_coefficient_quiver(rep);
    return degrees_dict(cq, solve_degrees(cq));
  }, py::arg("rep"),
        "Solve for a torus-weight certificate: distinct degrees per vertex, "
        "additive along arrows. Returns the assignment or an infeasibility witness.");

  m.def("to_dot", [](const Representation& rep) {
    return to_dot(build_coefficient_quiver(rep));
  }, py::arg("rep"), "Coefficient quiver in DOT format.");

  m.def("chi", [](const Representation& rep, const std::vector<long>& e) {
    return to_py(count_coordinate_subreps(rep, to_dims(e)));
  }, py::arg("rep"), py::arg("e"),
        "Euler characteristic chi_e: the number of successor-closed subquivers "
        "of the coefficient quiver with e_i vertices over vertex i.");

  m.def("chi_table", [](const Representation& rep) {
    return table_dict(chi_table(rep));
  }, py::arg("rep"), "All nonzero chi_e as a dict keyed by dimension vector.");

  m.def("binom", [](long p, long q) { return to_py(binom(p, q)); }, py::arg("p"), py::arg("q"),
        "Binomial coefficient; zero whenever q < 0, p < 0 or q > p.");
  m.def("chi_flag", [](const std::vector<long>& e, int r, int s) {
    return to_py(chi_flag(e, r, s));
  }, py::arg("e"), py::arg("r"), py::arg("s"));
  m.def("chi_preprojective", [](int p, int n, int t, const std::vector<long>& e) {
    return to_py(chi_preprojective(p, n, t, e));
  }, py::arg("p"), py::arg("n"), py::arg("t"), py::arg("e"));
  m.def("chi_preinjective", [](int p, int n, int t, const std::vector<long>& e) {
    return to_py(chi_preinjective(p, n, t, e));
  }, py::arg("p"), py::arg("n"), py::arg("t"), py::arg("e"));
  m.def("chi_regular", [](int p, int n, const std::vector<long>& e) {
    return to_py(chi_regular(p, n, e));
  }, py::arg("p"), py::arg("n"), py::arg("e"));
  m.def("chi_kronecker_preprojective", [](long n, long e1, long e2) {
    return to_py(chi_kronecker_preprojective(n, e1, e2));
  }, py::arg("n"), py::arg("e1"), py::arg("e2"));
  m.def("chi_kronecker_preinjective", [](long n, long e1, long e2) {
    return to_py(chi_kronecker_preinjective(n, e1, e2));
  }, py::arg("n"), py::arg("e1"), py::arg("e2"));
  m.def("chi_kronecker_regular", [](long n, long e1, long e2) {
    return to_py(chi_kronecker_regular(n, e1, e2));
  }, py::arg("n"), py::arg("e1"), py::arg("e2"));

  m.def("verify", [](int pmax, int nmax, int threads) {
    VerifyOptions opt;
    opt.pmax = pmax;
    opt.nmax = nmax;
    opt.threads = threads;
    VerifyReport report = run_verification(opt);
    py::dict checks;
    for (const VerifyCheck& check : report.checks) {
      py::dict entry;
      entry["passed"] = check.passed;
      entry["cases"] = check.cases;
      if (!check.passed) entry["counterexample"] = check.counterexample;
      checks[py::str(check.name)] = entry;
    }
    py::dict out;
    out["passed"] = report.all_passed();
    out["cases"] = report.total_cases();
    out["checks"] = checks;
    return out;
  }, py::arg("pmax") = 4, py::arg("nmax") = 3, py::arg("threads") = 0,
        "Cross-check every closed form against independent enumeration.");
}
