#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stringgrass/coeff_quiver.hpp"
#include "stringgrass/numbers.hpp"

namespace stringgrass {

// Degree certificate for torus-fixed-point counting: integer degrees on basis
// vectors, and one degree per arrow label, additive along every coefficient
// arrow (d(head) = d(tail) + d(label)) with pairwise distinct degrees inside
// each vertex's basis.
struct DegreeAssignment {
  std::vector<BigInt> vertex_degree;           // by coefficient-quiver position
  std::map<std::string, BigInt> arrow_degree;  // labels present in the quiver
};

// Throws Error{MissingDegree} when a vertex or a present label has no degree;
// otherwise true iff additivity holds along every arrow and degrees are
// distinct inside every basis group.
bool verify_degrees(const CoefficientQuiver& cq, const DegreeAssignment& deg);

// Two basis vectors over the same quiver vertex whose degrees every admissible
// assignment forces equal.
struct DegreeWitness {
  BasisVertex b1, b2;
};

struct DegreeSolveResult {
  std::optional<DegreeAssignment> assignment;
  std::optional<DegreeWitness> witness;
  bool feasible() const { return assignment.has_value(); }
};

// Decides feasibility exactly. The additivity constraints are homogeneous and
// linear in (vertex degrees, label degrees); a kernel basis over Q is computed
// by Gauss-Jordan elimination. Distinctness of a pair is expressible as a
// linear functional: the pair is forced equal iff its functional vanishes on
// the whole kernel, which yields the witness. Otherwise a generic integer
// combination of the kernel basis (powers-of-N mixing with N exceeding every
// functional value on the basis) separates all pairs simultaneously.
DegreeSolveResult solve_degrees(const CoefficientQuiver& cq);

// Certificate for orientable strings: number each chain 1..m along a
// label-consistent direction, shifting chains so all degrees are globally
// distinct; every label then has arrow degree +1 or -1.
// pre: cls from classify_string(rep) with is_string && is_orientable,
// otherwise throws Error{NotOrientableString}.
DegreeAssignment string_degrees(const CoefficientQuiver& cq, const StringClassification& cls);

}  // namespace stringgrass
