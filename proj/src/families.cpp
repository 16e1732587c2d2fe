#include "stringgrass/families.hpp"

#include <string>

namespace stringgrass {

namespace {

std::vector<MatrixEntry> identity(long n) {
  std::vector<MatrixEntry> m;
  for (long k = 1; k <= n; ++k) m.push_back({static_cast<int>(k), static_cast<int>(k), 1});
  return m;
}

// k^n -> k^{n+1}, basis m -> m.
std::vector<MatrixEntry> embed(long n) { return identity(n); }

// k^n -> k^{n+1}, basis m -> m+1.
std::vector<MatrixEntry> shift_up(long n) {
  std::vector<MatrixEntry> m;
  for (long k = 1; k <= n; ++k) m.push_back({static_cast<int>(k + 1), static_cast<int>(k), 1});
  return m;
}

// k^{n+1} -> k^n, basis m -> m for m <= n, basis n+1 -> 0. (Transposed embed.)
std::vector<MatrixEntry> project(long n) { return identity(n); }

// k^{n+1} -> k^n, basis m+1 -> m, basis 1 -> 0. (Transposed shift.)
std::vector<MatrixEntry> shift_down(long n) {
  std::vector<MatrixEntry> m;
  for (long k = 1; k <= n; ++k) m.push_back({static_cast<int>(k), static_cast<int>(k + 1), 1});
  return m;
}

// Single nilpotent Jordan block on k^n: basis m -> m-1, basis 1 -> 0.
std::vector<MatrixEntry> jordan_zero(long n) {
  std::vector<MatrixEntry> m;
  for (long k = 2; k <= n; ++k) m.push_back({static_cast<int>(k - 1), static_cast<int>(k), 1});
  return m;
}

std::string eps(int k) { return "eps_" + std::to_string(k); }

}  // namespace

const char* ap1_kind_name(Ap1Kind kind) {
  switch (kind) {
    case Ap1Kind::Preprojective: return "preprojective";
    case Ap1Kind::Preinjective: return "preinjective";
    case Ap1Kind::Regular: return "regular";
  }
  return "?";
}

std::optional<Ap1Kind> parse_ap1_kind(std::string_view text) {
  if (text == "preprojective") return Ap1Kind::Preprojective;
  if (text == "preinjective") return Ap1Kind::Preinjective;
  if (text == "regular") return Ap1Kind::Regular;
  return std::nullopt;
}

Quiver build_q_p1(int p) {
  if (p < 1) fail(Errc::InvalidParameter, "p must be >= 1, got " + std::to_string(p));
  std::vector<int> vertices;
  for (int v = 1; v <= p + 1; ++v) vertices.push_back(v);
  std::vector<Arrow> arrows;
  for (int k = 1; k <= p; ++k) arrows.push_back({eps(k), k + 1, k});
  arrows.push_back({eps(0), p + 1, 1});
  return Quiver(std::move(vertices), std::move(arrows));
}

Representation build_ap1_module(const Ap1Family& fam) {
  if (fam.p < 1) fail(Errc::InvalidParameter, "p must be >= 1, got " + std::to_string(fam.p));
  if (fam.n < 0) fail(Errc::InvalidParameter, "n must be >= 0, got " + std::to_string(fam.n));
  const bool uses_t = fam.kind != Ap1Kind::Regular;
  if (uses_t && (fam.t < 1 || fam.t > fam.p)) {
    fail(Errc::InvalidParameter,
         "t must lie in 1.." + std::to_string(fam.p) + ", got " + std::to_string(fam.t));
  }

  Representation rep;
  rep.quiver = build_q_p1(fam.p);
  const long n = fam.n;
  std::vector<long> dims(static_cast<std::size_t>(fam.p + 1), n);

  switch (fam.kind) {
    case Ap1Kind::Preprojective:
      for (int v = 1; v <= fam.t; ++v) dims[v - 1] = n + 1;
      for (int k = 1; k <= fam.p; ++k) {
        if (k < fam.t) rep.matrices[eps(k)] = identity(n + 1);
        else if (k == fam.t) rep.matrices[eps(k)] = embed(n);
        else rep.matrices[eps(k)] = identity(n);
      }
      rep.matrices[eps(0)] = shift_up(n);
      break;
    case Ap1Kind::Preinjective:
      for (int v = fam.t + 1; v <= fam.p + 1; ++v) dims[v - 1] = n + 1;
      for (int k = 1; k <= fam.p; ++k) {
        if (k < fam.t) rep.matrices[eps(k)] = identity(n);
        else if (k == fam.t) rep.matrices[eps(k)] = shift_down(n);
        else rep.matrices[eps(k)] = identity(n + 1);
      }
      rep.matrices[eps(0)] = project(n);
      break;
    case Ap1Kind::Regular:
      for (int k = 1; k <= fam.p; ++k) rep.matrices[eps(k)] = identity(n);
      rep.matrices[eps(0)] = jordan_zero(n);
      break;
  }

  rep.dims = DimensionVector(std::move(dims));
  return rep;
}

Representation table1_fixture(int row) {
  Representation rep;
  switch (row) {
    case 1:
      rep.quiver = Quiver({1, 2}, {{"a", 1, 2}});
      rep.dims = DimensionVector({1, 2});
      rep.matrices["a"] = {{1, 1, 1}};
      break;
    case 2:
      rep.quiver = Quiver({1, 2}, {{"a", 2, 1}, {"b", 2, 1}});
      rep.dims = DimensionVector({1, 1});
      rep.matrices["a"] = {{1, 1, 1}};
      rep.matrices["b"] = {{1, 1, 1}};
      break;
    case 3:
      rep.quiver = Quiver({1, 2, 3}, {{"a", 2, 1}, {"b", 3, 2}, {"c", 3, 1}});
      rep.dims = DimensionVector({2, 2, 1});
      rep.matrices["a"] = identity(2);
      rep.matrices["b"] = {{1, 1, 1}};
      rep.matrices["c"] = {{2, 1, 1}};
      break;
    case 4:
      rep.quiver = Quiver({1, 2}, {{"a", 2, 1}, {"b", 2, 1}});
      rep.dims = DimensionVector({2, 2});
      rep.matrices["a"] = identity(2);
      rep.matrices["b"] = jordan_zero(2);
      break;
    case 5:
      rep.quiver = Quiver({1}, {{"a", 1, 1}, {"b", 1, 1}});
      rep.dims = DimensionVector({4});
      rep.matrices["a"] = {{2, 1, 1}, {4, 3, 1}};
      rep.matrices["b"] = {{3, 2, 1}};
      break;
    case 6:
      rep.quiver = Quiver({1}, {{"a", 1, 1}, {"b", 1, 1}});
      rep.dims = DimensionVector({4});
      rep.matrices["a"] = {{2, 1, 1}, {3, 4, 1}};
      rep.matrices["b"] = {{3, 2, 1}};
      break;
    default:
      fail(Errc::InvalidParameter, "fixture row must lie in 1..6, got " + std::to_string(row));
  }
  return rep;
}

}  // namespace stringgrass
