#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "stringgrass/quiver.hpp"

namespace stringgrass {

// Basis vector `index` (1-based) of the space at quiver vertex `q_vertex`.
struct BasisVertex {
  int q_vertex = 0;
  int index = 0;

  friend bool operator==(const BasisVertex&, const BasisVertex&) = default;
  std::string name() const;  // "i.b", the DOT / report spelling
};

struct CoeffArrow {
  std::string label;  // quiver arrow it came from
  int tail = 0;       // vertex positions, see CoefficientQuiver
  int head = 0;

  friend bool operator==(const CoeffArrow&, const CoeffArrow&) = default;
};

// Coefficient quiver of a representation in its coordinate basis: one vertex
// per basis vector, and an arrow b -> b' labelled a whenever M(a) b has a
// nonzero coefficient on b'. Vertices are addressed by position, grouped by
// quiver vertex in declaration order, basis index ascending inside a group.
class CoefficientQuiver {
 public:
  CoefficientQuiver() = default;
  CoefficientQuiver(std::vector<int> q_vertex_ids, std::vector<long> q_dims,
                    std::vector<CoeffArrow> arrows);

  int total_vertices() const { return total_; }
  int q_vertex_count() const { return static_cast<int>(q_dims_.size()); }
  const std::vector<int>& q_vertex_ids() const { return q_vertex_ids_; }
  const std::vector<long>& q_dims() const { return q_dims_; }

  BasisVertex basis(int pos) const;
  int position(const BasisVertex& b) const;  // throws Error{IndexOutOfRange}
  int q_index_of(int pos) const;             // quiver-vertex position of a cq vertex

  const std::vector<CoeffArrow>& arrows() const { return arrows_; }
  const std::vector<int>& out(int pos) const { return out_.at(pos); }  // arrow indices
  const std::vector<int>& in(int pos) const { return in_.at(pos); }
  // Distinct labels with at least one arrow, sorted.
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<int> q_vertex_ids_;
  std::vector<long> q_dims_;
  std::vector<int> offset_;  // position of (q-vertex i, basis 1)
  int total_ = 0;
  std::vector<CoeffArrow> arrows_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<std::string> labels_;
};

// pre: validate_representation(rep) passes. Works for any representation; the
// monomial property is not required to build the quiver.
CoefficientQuiver build_coefficient_quiver(const Representation& rep);

// True when every arrow matrix has at most one nonzero entry in each row and
// each column.
bool check_monomial(const Representation& rep);

struct StringClassification {
  bool is_monomial = false;
  // Monomial and the underlying undirected multigraph of the coefficient
  // quiver is a disjoint union of simple paths (degree <= 2, no cycles;
  // parallel arrows and loops count as cycles).
  bool is_string = false;
  // is_string and the arrows of each label can be pointed the same way along
  // every chain, after choosing a direction per chain.
  bool is_orientable = false;
  // Filled when is_string: vertex positions of each chain in path order,
  // starting at the smaller endpoint; chains sorted by their first vertex.
  std::vector<std::vector<int>> components;
};

StringClassification classify_string(const Representation& rep);

// Helpers shared with the counting and degree modules (and handy in tests).
std::vector<std::vector<int>> undirected_components(const CoefficientQuiver& cq);
// Path order of one component, or nullopt when it is not a simple path.
std::optional<std::vector<int>> chain_order(const CoefficientQuiver& cq,
                                            const std::vector<int>& component);
// Per-label consistent orientations exist for the given chains (direction of
// each chain may be flipped independently).
bool orientation_feasible(const CoefficientQuiver& cq,
                          const std::vector<std::vector<int>>& chains,
                          std::vector<int>* chain_flip = nullptr);

// Graphviz digraph; vertices named "i.b", one edge per arrow with its label.
std::string to_dot(const CoefficientQuiver& cq);

}  // namespace stringgrass
