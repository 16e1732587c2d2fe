#pragma once

#include <map>

#include "stringgrass/coeff_quiver.hpp"
#include "stringgrass/quiver.hpp"

namespace stringgrass {

// Euler characteristics of all subrepresentation Grassmannians of one module:
// counts[e] = number of successor-closed vertex subsets of the coefficient
// quiver picking e_i basis vectors at vertex i. Zero entries are not stored.
struct ChiTable {
  DimensionVector total_dims;
  std::map<DimensionVector, BigInt> counts;

  BigInt at(const DimensionVector& e) const;
  BigInt total() const;  // number of successor-closed subsets of any size
};

enum class CountAlgo {
  Auto,       // chains -> linear DP; else exhaustive <= 24 vertices, else frontier DP
  ChainDP,    // requires every component to be a simple path
  Exhaustive, // power-set scan per component
  Frontier,   // DP over the strongly-connected condensation
};

// Count route 1, directly on the matrices: subsets S_i of the coordinate basis
// with |S_i| = e_i such that every arrow maps chosen basis vectors into chosen
// ones. Exponential scan with pruning; meant for desk-scale inputs and as an
// independent check of the coefficient-quiver route. Throws Error{NotMonomial}
// unless check_monomial(rep), Error{DimensionMismatch} on a wrong-length e.
BigInt count_coordinate_subreps(const Representation& rep, const DimensionVector& e);
// Same route, all dimension vectors in one scan.
ChiTable coordinate_table(const Representation& rep);

// Count route 2, on the coefficient quiver: subsets closed under out-arrows.
// e entries exceeding the available basis (or any negative query) count 0;
// only a wrong-length e is an error.
BigInt count_successor_closed(const CoefficientQuiver& cq, const DimensionVector& e,
                              CountAlgo algo = CountAlgo::Auto);
ChiTable chi_table(const CoefficientQuiver& cq, CountAlgo algo = CountAlgo::Auto);
// Convenience: build the coefficient quiver first. Throws Error{NotMonomial}
// when the representation is not monomial (the count is only chi then).
ChiTable chi_table(const Representation& rep, CountAlgo algo = CountAlgo::Auto);

// Count route 3, the trusted oracle: literally test closure of every subset of
// the power set. Throws Error{TooLarge} beyond 24 vertices.
BigInt count_oracle(const CoefficientQuiver& cq, const DimensionVector& e);
ChiTable oracle_table(const CoefficientQuiver& cq);

// Independent sum-rule check: number of successor-closed subsets of all sizes,
// via a two-state scalar scan along each chain (no per-size bookkeeping).
// pre: every component is a simple path; throws Error{InvalidParameter} else.
BigInt closed_subset_total_chains(const CoefficientQuiver& cq);

}  // namespace stringgrass
