#include "recurquot/lattice.hpp"

#include <algorithm>
#include <utility>

namespace recurquot {

namespace {

// Extended gcd: g = s*a + t*b with g >= 0.
void xgcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// rows (i, j) <- (s*ri + t*rj, -(b/g)*ri + (a/g)*rj)
void combine(IntVector& ri, IntVector& rj, const Integer& s, const Integer& t, const Integer& u,
             const Integer& v) {
  for (std::size_t k = 0; k < ri.size(); ++k) {
    Integer x = s * ri[k] + t * rj[k];
    Integer y = u * ri[k] + v * rj[k];
    ri[k] = std::move(x);
    rj[k] = std::move(y);
  }
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteDecomposition hermite_form(const IntMatrix& input, std::size_t columns) {
  HermiteDecomposition out;
  out.form = input;
  const std::size_t rows = input.size();
  out.transform.assign(rows, IntVector(rows, Integer(0)));
  for (std::size_t i = 0; i < rows; ++i) out.transform[i][i] = 1;

  auto& A = out.form;
  auto& U = out.transform;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < rows; ++col) {
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (A[i][col] == 0) continue;
      if (A[row][col] == 0) {
        std::swap(A[row], A[i]);
        std::swap(U[row], U[i]);
        continue;
      }
      Integer g, s, t;
      xgcd(A[row][col], A[i][col], g, s, t);
      Integer u = -A[i][col] / g;
      Integer v = A[row][col] / g;
      combine(A[row], A[i], s, t, u, v);
      combine(U[row], U[i], s, t, u, v);
    }
    if (A[row][col] == 0) continue;
    if (A[row][col] < 0) {
      for (auto& x : A[row]) x = -x;
      for (auto& x : U[row]) x = -x;
    }
    for (std::size_t k = 0; k < row; ++k) {
      Integer q = floor_div(A[k][col], A[row][col]);
      if (q == 0) continue;
      for (std::size_t c = 0; c < columns; ++c) A[k][c] -= q * A[row][c];
      for (std::size_t c = 0; c < rows; ++c) U[k][c] -= q * U[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

std::vector<Integer> smith_invariants(const IntMatrix& input, std::size_t columns) {
  IntMatrix A = input;
  const std::size_t rows = A.size();
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < columns) {
    // Pick the smallest non-zero entry of the remaining block as pivot.
    std::size_t pr = rows, pc = columns;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < columns; ++j)
        if (A[i][j] != 0 && (pr == rows || abs(A[i][j]) < abs(A[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(A[t], A[pr]);
    for (auto& r : A) std::swap(r[t], r[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (A[i][t] == 0) continue;
        Integer q = floor_div(A[i][t], A[t][t]);
        for (std::size_t j = t; j < columns; ++j) A[i][j] -= q * A[t][j];
        if (A[i][t] != 0) {
          std::swap(A[t], A[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < columns; ++j) {
        if (A[t][j] == 0) continue;
        Integer q = floor_div(A[t][j], A[t][t]);
        for (std::size_t i = t; i < rows; ++i) A[i][j] -= q * A[i][t];
        if (A[t][j] != 0) {
          for (auto& r : A) std::swap(r[t], r[j]);
          clean = false;
        }
      }
      if (clean) {
        // Enforce divisibility of the remaining block by the pivot.
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < columns; ++j)
            if (A[i][j] % A[t][t] != 0) {
              for (std::size_t k = t; k < columns; ++k) A[t][k] += A[i][k];
              clean = false;
              break;
            }
      }
    }
    diag.push_back(abs(A[t][t]));
    ++t;
  }
  return diag;
}

bool solve_in_lattice(const HermiteDecomposition& hnf, const IntVector& target, IntVector& coeffs) {
  IntVector rest = target;
  coeffs.assign(hnf.rank, Integer(0));
  for (std::size_t k = 0; k < hnf.rank; ++k) {
    const std::size_t col = hnf.pivots[k];
    const Integer& piv = hnf.form[k][col];
    if (rest[col] % piv != 0) return false;
    coeffs[k] = rest[col] / piv;
    if (coeffs[k] == 0) continue;
    for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= coeffs[k] * hnf.form[k][c];
  }
  return std::all_of(rest.begin(), rest.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace recurquot
