#include "stringgrass/degrees.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace stringgrass {

namespace {

// Kernel basis of the homogeneous system A x = 0 over Q, via Gauss-Jordan.
// Rows of A are the arrow constraints; columns are the unknowns.
std::vector<std::vector<Rational>> kernel_basis(std::vector<std::vector<Rational>> a, int cols) {
  const int rows = static_cast<int>(a.size());
  std::vector<int> pivot_of_row;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == -1) continue;
    std::swap(a[r], a[pivot]);
    Rational lead = a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_of_row.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_of_row) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, 0);
    v[f] = 1;
    for (int i = 0; i < static_cast<int>(pivot_of_row.size()); ++i) {
      v[pivot_of_row[i]] = -a[i][f];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BigInt> clear_denominators(const std::vector<Rational>& v) {
  BigInt lcm = 1;
  for (const Rational& q : v) {
    BigInt den = q.get_den();
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt gcd = 0;
  for (const Rational& q : v) {
    BigInt num = q.get_num() * (lcm / q.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
    out.push_back(std::move(num));
  }
  if (gcd > 1) {
    for (BigInt& x : out) x /= gcd;
  }
  return out;
}

}  // namespace

bool verify_degrees(const CoefficientQuiver& cq, const DegreeAssignment& deg) {
  if (static_cast<int>(deg.vertex_degree.size()) != cq.total_vertices()) {
    fail(Errc::MissingDegree, "vertex degrees cover " + std::to_string(deg.vertex_degree.size()) +
                                  " of " + std::to_string(cq.total_vertices()) + " basis vectors");
  }
  for (const std::string& label : cq.labels()) {
    if (!deg.arrow_degree.count(label)) {
      fail(Errc::MissingDegree, "no degree for arrow label '" + label + "'");
    }
  }
  for (const CoeffArrow& a : cq.arrows()) {
    if (deg.vertex_degree[a.head] != deg.vertex_degree[a.tail] + deg.arrow_degree.at(a.label)) {
      return false;
    }
  }
  // Distinctness inside every basis group.
  int pos = 0;
  for (int qi = 0; qi < cq.q_vertex_count(); ++qi) {
    for (long b1 = 0; b1 < cq.q_dims()[qi]; ++b1) {
      for (long b2 = b1 + 1; b2 < cq.q_dims()[qi]; ++b2) {
        if (deg.vertex_degree[pos + b1] == deg.vertex_degree[pos + b2]) return false;
      }
    }
    pos += static_cast<int>(cq.q_dims()[qi]);
  }
  return true;
}

DegreeSolveResult solve_degrees(const CoefficientQuiver& cq) {
  const int nverts = cq.total_vertices();
  const auto& labels = cq.labels();
  const int nlabels = static_cast<int>(labels.size());
  const int cols = nverts + nlabels;

  auto label_index = [&](const std::string& l) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };

  std::vector<std::vector<Rational>> a;
  a.reserve(cq.arrows().size());
  for (const CoeffArrow& arrow : cq.arrows()) {
    std::vector<Rational> row(cols, 0);
    row[arrow.head] += 1;
    row[arrow.tail] -= 1;
    row[nverts + label_index(arrow.label)] -= 1;
    a.push_back(std::move(row));
  }

  std::vector<std::vector<BigInt>> basis;
  for (const auto& v : kernel_basis(std::move(a), cols)) basis.push_back(clear_denominators(v));
  const int k = static_cast<int>(basis.size());

  // A pair of basis vectors over one quiver vertex is forced equal iff the
  // functional x -> x[p1] - x[p2] vanishes on the entire kernel.
  DegreeSolveResult result;
  BigInt max_abs = 0;
  int pos = 0;
  for (int qi = 0; qi < cq.q_vertex_count(); ++qi) {
    for (long b1 = 0; b1 < cq.q_dims()[qi]; ++b1) {
      for (long b2 = b1 + 1; b2 < cq.q_dims()[qi]; ++b2) {
        bool all_zero = true;
        for (int j = 0; j < k; ++j) {
          BigInt w = basis[j][pos + b1] - basis[j][pos + b2];
          if (w != 0) all_zero = false;
          BigInt aw = abs(w);
          if (aw > max_abs) max_abs = aw;
        }
        if (all_zero) {
          result.witness = DegreeWitness{cq.basis(pos + static_cast<int>(b1)),
                                         cq.basis(pos + static_cast<int>(b2))};
          return result;
        }
      }
    }
    pos += static_cast<int>(cq.q_dims()[qi]);
  }

  // Generic combination sum_j N^j basis_j: with N above every functional value
  // on the basis, a nonzero digit vector cannot telescope to zero, so all
  // pairwise differences are nonzero at once. The retry loop is a safety net.
  BigInt n0 = max_abs + 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<BigInt> x(cols, 0);
    BigInt scale = 1;
    for (int j = 0; j < k; ++j) {
      for (int c = 0; c < cols; ++c) x[c] += scale * basis[j][c];
      scale *= n0;
    }
    DegreeAssignment deg;
    deg.vertex_degree.assign(x.begin(), x.begin() + nverts);
    for (int li = 0; li < nlabels; ++li) deg.arrow_degree[labels[li]] = x[nverts + li];
    if (verify_degrees(cq, deg)) {
      result.assignment = std::move(deg);
      return result;
    }
    n0 *= 2;
  }
  assert(false && "generic combination failed to separate degrees");
  fail(Errc::InvalidParameter, "degree search did not converge");
}

DegreeAssignment string_degrees(const CoefficientQuiver& cq, const StringClassification& cls) {
  if (!cls.is_string || !cls.is_orientable) {
    fail(Errc::NotOrientableString, "degree numbering needs an orientable string");
  }
  std::vector<int> flip;
  if (!orientation_feasible(cq, cls.components, &flip)) {
    fail(Errc::NotOrientableString, "classification disagrees with the arrows");
  }

  DegreeAssignment deg;
  deg.vertex_degree.assign(cq.total_vertices(), 0);
  long offset = 0;
  for (std::size_t c = 0; c < cls.components.size(); ++c) {
    const auto& chain = cls.components[c];
    const long m = static_cast<long>(chain.size());
    for (long i = 0; i < m; ++i) {
      int v = chain[flip[c] ? m - 1 - i : i];
      deg.vertex_degree[v] = offset + i + 1;
    }
    offset += m;
  }
  for (const CoeffArrow& a : cq.arrows()) {
    deg.arrow_degree[a.label] = deg.vertex_degree[a.head] - deg.vertex_degree[a.tail];
  }
  return deg;
}

}  // namespace stringgrass
