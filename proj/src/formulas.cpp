#include "stringgrass/formulas.hpp"

#include <string>

#include "stringgrass/error.hpp"

namespace stringgrass {

namespace {

void check_family_args(int p, int n, int t, bool uses_t, std::size_t e_len) {
  if (p < 1) fail(Errc::InvalidParameter, "p must be >= 1, got " + std::to_string(p));
  if (n < 0) fail(Errc::InvalidParameter, "n must be >= 0, got " + std::to_string(n));
  if (uses_t && (t < 1 || t > p)) {
    fail(Errc::InvalidParameter,
         "t must lie in 1.." + std::to_string(p) + ", got " + std::to_string(t));
  }
  if (e_len != static_cast<std::size_t>(p + 1)) {
    fail(Errc::DimensionMismatch,
         "e must have length " + std::to_string(p + 1) + ", got " + std::to_string(e_len));
  }
}

void check_flag_range(const std::vector<long>& e, int r, int s) {
  const int len = static_cast<int>(e.size());
  if (r < 1 || r > len || s < 1 || s > len) {
    fail(Errc::IndexOutOfRange, "flag indices must lie in 1.." + std::to_string(len));
  }
}

}  // namespace

BigInt binom(long p, long q) {
  if (q < 0 || p < 0 || q > p) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(q));
  return out;
}

BigInt chi_flag(const std::vector<long>& e, int r, int s, BinomialFn B) {
  check_flag_range(e, r, s);
  BigInt out = 1;
  for (int k = r; k <= s - 2; ++k) {
    out *= B(e[k - 1] - e[s - 1], e[k] - e[s - 1]);
    if (out == 0) break;
  }
  return out;
}

BigInt chi_flag_alt(const std::vector<long>& e, int r, int s, BinomialFn B) {
  check_flag_range(e, r, s);
  BigInt out = 1;
  for (int k = r + 1; k <= s - 1; ++k) {
    out *= B(e[r - 1] - e[k], e[k - 1] - e[k]);
    if (out == 0) break;
  }
  return out;
}

BigInt chi_preprojective(int p, int n, int t, const std::vector<long>& e, BinomialFn B) {
  check_family_args(p, n, t, true, e.size());
  const long e1 = e[0], et = e[t - 1], et1 = e[t], ep1 = e[p];
  BigInt out = B(e1 - 1, ep1);
  out *= B(n + 1 - et, e1 - et);
  out *= B(n + 1 - et1, et - et1);
  out *= B(n - ep1, et1 - ep1);
  out *= chi_flag(e, 1, t, B);
  out *= chi_flag(e, t + 1, p + 1, B);
  return out;
}

BigInt chi_preinjective(int p, int n, int t, const std::vector<long>& e, BinomialFn B) {
  check_family_args(p, n, t, true, e.size());
  const long e1 = e[0], et = e[t - 1], et1 = e[t], ep1 = e[p];
  BigInt out = B(n - ep1, e1 - ep1);
  out *= B(et1, ep1);
  out *= B(et + 1, et1);
  out *= B(e1, et);
  out *= chi_flag(e, 1, t, B);
  out *= chi_flag(e, t + 1, p + 1, B);
  return out;
}

BigInt chi_regular(int p, int n, const std::vector<long>& e, BinomialFn B) {
  check_family_args(p, n, 1, false, e.size());
  const long e1 = e[0], ep1 = e[p];
  BigInt out = B(e1, ep1);
  out *= B(n - ep1, e1 - ep1);
  out *= chi_flag(e, 1, p + 1, B);
  return out;
}

BigInt chi_kronecker_preprojective(long n, long e1, long e2, BinomialFn B) {
  if (n < 0) fail(Errc::InvalidParameter, "n must be >= 0");
  BigInt out = B(n + 1 - e2, n + 1 - e1) * B(e1 - 1, e2);
  if (e1 == 0 && e2 == 0) out += 1;
  return out;
}

BigInt chi_kronecker_preinjective(long n, long e1, long e2, BinomialFn B) {
  if (n < 0) fail(Errc::InvalidParameter, "n must be >= 0");
  BigInt out = B(e1 + 1, e2) * B(n - e2, n - e1);
  if (e1 == n && e2 == n + 1) out += 1;
  return out;
}

BigInt chi_kronecker_regular(long n, long e1, long e2, BinomialFn B) {
  if (n < 0) fail(Errc::InvalidParameter, "n must be >= 0");
  return B(n - e2, n - e1) * B(e1, e2);
}

BigInt count_subsets_with_components(long n, long r, long c, std::optional<bool> contains_n) {
  if (n < 0 || r < 0 || r > n) {
    fail(Errc::InvalidParameter, "need 0 <= r <= n");
  }
  if (r == 0) {
    bool empty_ok = c == 0 && !(contains_n.has_value() && *contains_n);
    return empty_ok ? 1 : 0;
  }
  if (!contains_n.has_value()) return binom(r - 1, c - 1) * binom(n + 1 - r, c);
  if (*contains_n) return binom(r - 1, c - 1) * binom(n - r, c - 1);
  return binom(r - 1, c - 1) * binom(n - r, c);
}

}  // namespace stringgrass
