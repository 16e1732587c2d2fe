#pragma once

#include <optional>
#include <string_view>

#include "stringgrass/quiver.hpp"

namespace stringgrass {

enum class Ap1Kind { Preprojective, Preinjective, Regular };

const char* ap1_kind_name(Ap1Kind kind);
std::optional<Ap1Kind> parse_ap1_kind(std::string_view text);

// Indecomposable modules over the cycle quiver with p arrows one way and one
// arrow back: kind + size n + break vertex t (ignored for Regular).
struct Ap1Family {
  int p = 1;
  int n = 0;
  Ap1Kind kind = Ap1Kind::Regular;
  int t = 1;
};

// Vertices 1..p+1; arrows eps_k: k+1 -> k for k = 1..p and eps_0: p+1 -> 1.
// Throws Error{InvalidParameter} for p < 1.
Quiver build_q_p1(int p);

// Preprojective(t): dims n+1 on 1..t and n on t+1..p+1; eps_t carries the
// k^n -> k^{n+1} embedding m -> m, eps_0 the shift m -> m+1, all other arrows
// identities. Preinjective(t): dims n on 1..t and n+1 elsewhere; eps_t carries
// the transposed shift, eps_0 the transposed embedding. Regular: dims n
// everywhere; eps_0 is the nilpotent single Jordan block (m -> m-1), the rest
// identities. Throws Error{InvalidParameter} on p < 1, n < 0 or t outside 1..p.
Representation build_ap1_module(const Ap1Family& fam);

// Six hand-sized fixtures probing the classification boundaries:
//   1: single arrow 1 -> 2, dims (1,2), matrix (1 0)^t
//   2: parallel arrows a,b: 2 -> 1, dims (1,1), both matrices (1)
//   3: arrows a: 2 -> 1, b: 3 -> 2, c: 3 -> 1, dims (2,2,1),
//      M(a) = Id, M(b) = (1 0)^t, M(c) = (0 1)^t
//   4: parallel arrows a,b: 2 -> 1, dims (2,2), M(a) = Id, M(b) nilpotent
//   5: one vertex, loops a,b, dim 4, M(a) = E21 + E43, M(b) = E32
//   6: one vertex, loops a,b, dim 4, M(a) = E21 + E34, M(b) = E32
// (E_ij sends the j-th basis vector to the i-th.) Rows 1-5 are orientable
// strings except row 2 (not a string); row 6 is a string but not orientable.
// Throws Error{InvalidParameter} unless 1 <= row <= 6.
Representation table1_fixture(int row);

}  // namespace stringgrass
