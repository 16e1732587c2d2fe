#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stringgrass/error.hpp"
#include "stringgrass/numbers.hpp"

namespace stringgrass {

struct Arrow {
  std::string label;
  int source = 0;
  int target = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Finite quiver: integer vertex ids kept in declaration order, labelled arrows.
// Loops and parallel arrows are allowed; labels are unique.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<int> vertices, std::vector<Arrow> arrows);

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }

  bool has_vertex(int id) const { return index_.count(id) != 0; }
  // Position of a vertex id in declaration order; throws Error{IndexOutOfRange}.
  int vertex_index(int id) const;

  bool has_arrow(const std::string& label) const { return by_label_.count(label) != 0; }
  const Arrow& arrow(const std::string& label) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<int> vertices_;
  std::vector<Arrow> arrows_;
  std::map<int, int> index_;
  std::map<std::string, int> by_label_;
};

// Nonnegative integer vector indexed by vertex position (declaration order).
class DimensionVector {
 public:
  DimensionVector() = default;
  explicit DimensionVector(std::vector<long> entries);
  static DimensionVector zeros(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  long operator[](int i) const { return entries_.at(i); }
  long& operator[](int i) { return entries_.at(i); }
  const std::vector<long>& entries() const { return entries_; }
  std::vector<long> as_longs() const { return entries_; }

  long sum() const;
  bool is_zero() const;
  // Componentwise <=.
  bool leq(const DimensionVector& other) const;

  friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
  friend auto operator<=>(const DimensionVector& a, const DimensionVector& b) {
    return a.entries_ <=> b.entries_;
  }

  // "1,0,2"
  std::string to_string() const;
  // Inverse of to_string; throws Error{ParseError} on malformed or negative input.
  static DimensionVector parse(const std::string& text);

 private:
  std::vector<long> entries_;
};

// Sparse matrix entry, 1-based. An arrow a: j -> i stores M(a) as a
// dim(i) x dim(j) matrix: row indexes the target basis, col the source basis.
struct MatrixEntry {
  int row = 0;
  int col = 0;
  Rational value;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

// Quiver representation with exact rational matrices. Arrows absent from
// `matrices` act as zero maps; entries not stored are zero.
struct Representation {
  Quiver quiver;
  DimensionVector dims;  // by vertex position
  std::map<std::string, std::vector<MatrixEntry>> matrices;

  long dim_of_id(int vertex_id) const { return dims[quiver.vertex_index(vertex_id)]; }
  long total_dim() const { return dims.sum(); }

  friend bool operator==(const Representation&, const Representation&) = default;
};

struct ValidationIssue {
  Errc code = Errc::InvalidParameter;
  std::string detail;
};

// Structural checks: dims cover exactly the declared vertices, every matrix key
// is a declared arrow, indices fall inside the target/source dimensions, no
// duplicated (row, col) per arrow, and stored values are nonzero. Returns the
// first issue in deterministic (label, entry) order, or nullopt when valid.
std::optional<ValidationIssue> validate_representation(const Representation& rep);

// Throws Error with the issue's code when validate_representation finds one.
void require_valid(const Representation& rep);

}  // namespace stringgrass
