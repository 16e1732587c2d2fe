#include "stringgrass/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace stringgrass {

namespace {

using nlohmann::json;

long want_integer(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(Errc::ParseError, std::string(what) + " must be an integer");
  return j.get<long>();
}

Rational want_value(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(Errc::ParseError, "matrix value must be a rational string");
}

}  // namespace

std::string representation_to_json(const Representation& rep) {
  json out;
  out["vertices"] = rep.quiver.vertices();
  out["arrows"] = json::array();
  for (const Arrow& a : rep.quiver.arrows()) {
    out["arrows"].push_back({{"label", a.label}, {"source", a.source}, {"target", a.target}});
  }
  out["dims"] = json::object();
  for (int i = 0; i < rep.quiver.vertex_count(); ++i) {
    out["dims"][std::to_string(rep.quiver.vertices()[i])] = rep.dims[i];
  }
  out["matrices"] = json::object();
  for (const Arrow& a : rep.quiver.arrows()) {
    json entries = json::array();
    auto it = rep.matrices.find(a.label);
    if (it != rep.matrices.end()) {
      std::vector<MatrixEntry> sorted = it->second;
      std::sort(sorted.begin(), sorted.end(), [](const MatrixEntry& x, const MatrixEntry& y) {
        return std::pair(x.row, x.col) < std::pair(y.row, y.col);
      });
      for (const MatrixEntry& entry : sorted) {
        entries.push_back({{"row", entry.row}, {"col", entry.col},
                           {"value", format_rational(entry.value)}});
      }
    }
    out["matrices"][a.label] = std::move(entries);
  }
  return out.dump(2) + "\n";
}

Representation representation_from_json(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!in.is_object()) fail(Errc::ParseError, "top level must be an object");
  for (const char* k : {"vertices", "arrows", "dims", "matrices"}) {
    if (!in.contains(k)) fail(Errc::ParseError, std::string("missing key '") + k + "'");
  }
  if (!in["vertices"].is_array() || !in["arrows"].is_array() || !in["dims"].is_object() ||
      !in["matrices"].is_object()) {
    fail(Errc::ParseError, "wrong shape for vertices/arrows/dims/matrices");
  }

  std::vector<int> vertices;
  for (const json& v : in["vertices"]) vertices.push_back(static_cast<int>(want_integer(v, "vertex id")));
  std::vector<Arrow> arrows;
  for (const json& a : in["arrows"]) {
    if (!a.is_object() || !a.contains("label") || !a.contains("source") || !a.contains("target")) {
      fail(Errc::ParseError, "arrow needs label/source/target");
    }
    if (!a["label"].is_string()) fail(Errc::ParseError, "arrow label must be a string");
    arrows.push_back({a["label"].get<std::string>(),
                      static_cast<int>(want_integer(a["source"], "arrow source")),
                      static_cast<int>(want_integer(a["target"], "arrow target"))});
  }

  Representation rep;
  rep.quiver = Quiver(std::move(vertices), std::move(arrows));

  std::vector<long> dims(rep.quiver.vertex_count(), -1);
  for (const auto& [key, value] : in["dims"].items()) {
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail(Errc::ParseError, "dims key '" + key + "' is not a vertex id");
    }
    if (!rep.quiver.has_vertex(id)) fail(Errc::ParseError, "dims key '" + key + "' is not a declared vertex");
    long d = want_integer(value, "dimension");
    if (d < 0) fail(Errc::ParseError, "dimension of vertex " + key + " is negative");
    dims[rep.quiver.vertex_index(id)] = d;
  }
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] < 0) {
      fail(Errc::ParseError,
           "missing dimension for vertex " + std::to_string(rep.quiver.vertices()[i]));
    }
  }
  rep.dims = DimensionVector(std::move(dims));

  for (const auto& [label, entries] : in["matrices"].items()) {
    if (!entries.is_array()) fail(Errc::ParseError, "matrix of '" + label + "' must be an array");
    std::vector<MatrixEntry> list;
    for (const json& entry : entries) {
      if (!entry.is_object() || !entry.contains("row") || !entry.contains("col") ||
          !entry.contains("value")) {
        fail(Errc::ParseError, "matrix entry needs row/col/value");
      }
      list.push_back({static_cast<int>(want_integer(entry["row"], "row")),
                      static_cast<int>(want_integer(entry["col"], "col")),
                      want_value(entry["value"])});
    }
    rep.matrices[label] = std::move(list);
  }

  require_valid(rep);
  return rep;
}

Representation load_representation(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return representation_from_json(buffer.str());
}

void save_representation(const Representation& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::ParseError, "cannot write '" + path + "'");
  out << representation_to_json(rep);
}

std::string degree_assignment_to_json(const CoefficientQuiver& cq, const DegreeAssignment& deg) {
  json out;
  out["vertex_degrees"] = json::object();
  for (int v = 0; v < cq.total_vertices(); ++v) {
    out["vertex_degrees"][cq.basis(v).name()] = deg.vertex_degree.at(v).get_str();
  }
  out["arrow_degrees"] = json::object();
  for (const auto& [label, d] : deg.arrow_degree) {
    out["arrow_degrees"][label] = d.get_str();
  }
  return out.dump(2) + "\n";
}

std::string chi_table_to_json(const ChiTable& table) {
  json rows = json::array();
  for (const auto& [e, chi] : table.counts) {
    rows.push_back({{"e", e.entries()}, {"chi", chi.get_str()}});
  }
  return rows.dump(2) + "\n";
}

}  // namespace stringgrass
