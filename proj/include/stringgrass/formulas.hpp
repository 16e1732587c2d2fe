#pragma once

#include <optional>
#include <vector>

#include "stringgrass/numbers.hpp"

namespace stringgrass {

// Binomial coefficient with the truncating convention used by every closed
// form in this library: C(p, q) = 0 whenever q < 0, p < 0 or q > p, the
// standard value otherwise. In particular C(-1, 0) = 0.
BigInt binom(long p, long q);

// Policy hook so the verification harness can swap in a deliberately wrong
// convention and prove that the formula-vs-enumeration sweep catches it.
using BinomialFn = BigInt (*)(long, long);

// Euler characteristic of the flag segment e_r >= e_{r+1} >= ... >= e_s inside
// successive coordinate subspaces: prod_{k=r}^{s-2} C(e_k - e_s, e_{k+1} - e_s),
// an empty product (= 1) when r > s - 2. Indices r, s are 1-based into e;
// throws Error{IndexOutOfRange} outside 1..len(e).
BigInt chi_flag(const std::vector<long>& e, int r, int s, BinomialFn B = binom);
// Equivalent expansion prod_{k=r+1}^{s-1} C(e_r - e_{k+1}, e_k - e_{k+1}); the
// two agree for every integer vector (property-tested), kept as a cross-check.
BigInt chi_flag_alt(const std::vector<long>& e, int r, int s, BinomialFn B = binom);

// Closed forms for the cycle-quiver families (e has length p+1; entries may be
// arbitrary integers, the convention truncates everything out of range).
// Throws Error{InvalidParameter} on p < 1, n < 0 or t outside 1..p, and
// Error{DimensionMismatch} on a wrong e length. Verified against enumeration
// by the verify harness; the only documented disagreements are preprojective
// at e = 0 and preinjective at e = dims, where the product forms give 0 while
// the count is 1.
BigInt chi_preprojective(int p, int n, int t, const std::vector<long>& e, BinomialFn B = binom);
BigInt chi_preinjective(int p, int n, int t, const std::vector<long>& e, BinomialFn B = binom);
BigInt chi_regular(int p, int n, const std::vector<long>& e, BinomialFn B = binom);

// p = 1 closed forms including the delta corrections; exact for every e.
BigInt chi_kronecker_preprojective(long n, long e1, long e2, BinomialFn B = binom);
BigInt chi_kronecker_preinjective(long n, long e1, long e2, BinomialFn B = binom);
BigInt chi_kronecker_regular(long n, long e1, long e2, BinomialFn B = binom);

// Subsets of {1..n} of cardinality r with exactly c maximal blocks of
// consecutive integers, optionally split by whether n is a member:
//   unrestricted:   C(r-1, c-1) * C(n+1-r, c)
//   containing n:   C(r-1, c-1) * C(n-r, c-1)
//   avoiding n:     C(r-1, c-1) * C(n-r, c)
// r = 0 is the empty set: 1 when c = 0 and n is not required, else 0.
// pre: n >= 0, 0 <= r <= n (Error{InvalidParameter} otherwise); any c is fine.
BigInt count_subsets_with_components(long n, long r, long c,
                                     std::optional<bool> contains_n = std::nullopt);

}  // namespace stringgrass
