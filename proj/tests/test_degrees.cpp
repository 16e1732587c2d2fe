#include <algorithm>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "stringgrass/coeff_quiver.hpp"
#include "stringgrass/degrees.hpp"
#include "stringgrass/families.hpp"

using namespace stringgrass;

namespace {

Representation id_plus_swap() {
  Representation rep;
  rep.quiver = Quiver({1, 2}, {{"a", 2, 1}, {"b", 2, 1}});
  rep.dims = DimensionVector({2, 2});
  rep.matrices["a"] = {{1, 1, Rational(1)}, {2, 2, Rational(1)}};
  rep.matrices["b"] = {{1, 2, Rational(1)}, {2, 1, Rational(1)}};
  return rep;
}

// Additivity alone, no distinctness: d(head) = d(tail) + d(label) everywhere.
bool additive(const CoefficientQuiver& cq, const DegreeAssignment& deg) {
  for (const CoeffArrow& a : cq.arrows()) {
    if (deg.vertex_degree[a.head] != deg.vertex_degree[a.tail] + deg.arrow_degree.at(a.label)) {
      return false;
    }
  }
  return true;
}

// Exhaustive search over assignments with every degree in [-radius, radius].
// Feasible-in-range implies the solver must report feasible; the converse
// holds only when the radius is generous enough for the instance.
bool oracle_feasible(const CoefficientQuiver& cq, int radius) {
  const std::vector<std::string> labels = cq.labels();
  const int slots = cq.total_vertices() + static_cast<int>(labels.size());
  std::vector<int> value(slots, -radius);
  while (true) {
    DegreeAssignment deg;
    for (int v = 0; v < cq.total_vertices(); ++v) deg.vertex_degree.push_back(value[v]);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      deg.arrow_degree[labels[i]] = value[cq.total_vertices() + i];
    }
    if (verify_degrees(cq, deg)) return true;
    int i = 0;
    while (i < slots && ++value[i] > radius) value[i++] = -radius;
    if (i == slots) return false;
  }
}

}  // namespace

TEST_CASE("verify_degrees checks coverage, additivity and distinctness") {
  CoefficientQuiver cq = build_coefficient_quiver(table1_fixture(4));

  DegreeAssignment good;
  good.vertex_degree = {2, 4, 1, 3};  // 1.1 1.2 2.1 2.2
  good.arrow_degree = {{"a", 1}, {"b", -1}};
  CHECK(verify_degrees(cq, good));

  DegreeAssignment short_vec = good;
  short_vec.vertex_degree.pop_back();
  CHECK(thrown_code([&] { verify_degrees(cq, short_vec); }) == Errc::MissingDegree);

  DegreeAssignment no_label = good;
  no_label.arrow_degree.erase("b");
  CHECK(thrown_code([&] { verify_degrees(cq, no_label); }) == Errc::MissingDegree);

  DegreeAssignment broken = good;
  broken.arrow_degree["a"] = 5;
  CHECK(!verify_degrees(cq, broken));

  DegreeAssignment clash = good;
  clash.vertex_degree = {2, 2, 1, 1};  // additive, but B(1) degrees collide
  clash.arrow_degree = {{"a", 1}, {"b", 1}};
  CHECK(!verify_degrees(cq, clash));
}

TEST_CASE("published degree choices pass verification") {
  // Three-vertex fixture: 1..5 along the chain 1.1 2.1 3.1 1.2 2.2.
  {
    CoefficientQuiver cq = build_coefficient_quiver(table1_fixture(3));
    DegreeAssignment deg;
    deg.vertex_degree = {1, 4, 2, 5, 3};  // positions 1.1 1.2 2.1 2.2 3.1
    deg.arrow_degree = {{"a", -1}, {"b", -1}, {"c", 1}};
    CHECK(verify_degrees(cq, deg));
  }
  // Chain fixture on one vertex: 1..4 straight through.
  {
    CoefficientQuiver cq = build_coefficient_quiver(table1_fixture(5));
    DegreeAssignment deg;
    deg.vertex_degree = {1, 2, 3, 4};
    deg.arrow_degree = {{"a", 1}, {"b", 1}};
    CHECK(verify_degrees(cq, deg));
  }
  // Non-orientable fixture still carries degrees: d(a)=1, d(b)=2.
  {
    CoefficientQuiver cq = build_coefficient_quiver(table1_fixture(6));
    DegreeAssignment deg;
    deg.vertex_degree = {0, 1, 3, 2};
    deg.arrow_degree = {{"a", 1}, {"b", 2}};
    CHECK(verify_degrees(cq, deg));
  }
}

TEST_CASE("degree solver is exact on the curated set") {
  // (fixture, generous search radius for the bounded oracle)
  struct Item {
    Representation rep;
    int radius;
  };
  std::vector<Item> items;
  items.push_back({table1_fixture(1), 2});
  items.push_back({table1_fixture(2), 2});
  items.push_back({table1_fixture(4), 2});
  items.push_back({table1_fixture(6), 2});
  items.push_back({id_plus_swap(), 2});

  for (std::size_t i = 0; i < items.size(); ++i) {
    CAPTURE(i);
    CoefficientQuiver cq = build_coefficient_quiver(items[i].rep);
    DegreeSolveResult got = solve_degrees(cq);
    CHECK(got.feasible() == oracle_feasible(cq, items[i].radius));
    if (got.feasible()) {
      CHECK(verify_degrees(cq, *got.assignment));
    } else {
      REQUIRE(got.witness.has_value());
      CHECK(got.witness->b1.q_vertex == got.witness->b2.q_vertex);
      CHECK(got.witness->b1.index != got.witness->b2.index);
    }
  }
}

TEST_CASE("solver output is deterministic") {
  CoefficientQuiver cq = build_coefficient_quiver(table1_fixture(3));
  DegreeSolveResult a = solve_degrees(cq);
  DegreeSolveResult b = solve_degrees(cq);
  REQUIRE(a.feasible());
  REQUIRE(b.feasible());
  CHECK(a.assignment->vertex_degree == b.assignment->vertex_degree);
  CHECK(a.assignment->arrow_degree == b.assignment->arrow_degree);
}

TEST_CASE("forced-equal witness is genuinely forced") {
  CoefficientQuiver cq = build_coefficient_quiver(id_plus_swap());
  DegreeSolveResult got = solve_degrees(cq);
  REQUIRE(!got.feasible());
  REQUIRE(got.witness.has_value());
  const int p1 = cq.position(got.witness->b1);
  const int p2 = cq.position(got.witness->b2);

  // Every additive assignment in a small box must tie the witness pair.
  const std::vector<std::string> labels = cq.labels();
  const int slots = cq.total_vertices() + static_cast<int>(labels.size());
  std::vector<int> value(slots, -2);
  long additive_count = 0;
  while (true) {
    DegreeAssignment deg;
    for (int v = 0; v < cq.total_vertices(); ++v) deg.vertex_degree.push_back(value[v]);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      deg.arrow_degree[labels[i]] = value[cq.total_vertices() + i];
    }
    if (additive(cq, deg)) {
      ++additive_count;
      CHECK(deg.vertex_degree[p1] == deg.vertex_degree[p2]);
    }
    int i = 0;
    while (i < slots && ++value[i] > 2) value[i++] = -2;
    if (i == slots) break;
  }
  CHECK(additive_count > 0);  // the box is not vacuous
}

TEST_CASE("string certificates number chains with unit arrow degrees") {
  for (int row : {1, 3, 4, 5}) {
    CAPTURE(row);
    Representation rep = table1_fixture(row);
    StringClassification cls = classify_string(rep);
    REQUIRE(cls.is_orientable);
    CoefficientQuiver cq = build_coefficient_quiver(rep);
    DegreeAssignment deg = string_degrees(cq, cls);
    CHECK(verify_degrees(cq, deg));
    for (const auto& [label, d] : deg.arrow_degree) {
      CAPTURE(label);
      CHECK((d == 1 || d == -1));
    }
    // Global distinctness, stronger than the per-vertex requirement.
    std::vector<BigInt> sorted = deg.vertex_degree;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }

  StringClassification row6 = classify_string(table1_fixture(6));
  CoefficientQuiver cq6 = build_coefficient_quiver(table1_fixture(6));
  CHECK(thrown_code([&] { string_degrees(cq6, row6); }) == Errc::NotOrientableString);

  StringClassification row2 = classify_string(table1_fixture(2));
  CoefficientQuiver cq2 = build_coefficient_quiver(table1_fixture(2));
  CHECK(thrown_code([&] { string_degrees(cq2, row2); }) == Errc::NotOrientableString);
}

TEST_CASE("family certificates across the small sweep") {
  for (int p = 1; p <= 3; ++p) {
    for (int n = 0; n <= 2; ++n) {
      for (Ap1Kind kind : {Ap1Kind::Preprojective, Ap1Kind::Preinjective, Ap1Kind::Regular}) {
        CAPTURE(p);
        CAPTURE(n);
        Representation rep = build_ap1_module({p, n, kind, 1});
        CoefficientQuiver cq = build_coefficient_quiver(rep);
        DegreeSolveResult got = solve_degrees(cq);
        REQUIRE(got.feasible());
        CHECK(verify_degrees(cq, *got.assignment));
        DegreeAssignment sd = string_degrees(cq, classify_string(rep));
        CHECK(verify_degrees(cq, sd));
      }
    }
  }
}
