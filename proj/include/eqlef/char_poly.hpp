#pragma once

#include <vector>

#include "eqlef/int_matrix.hpp"
#include "eqlef/polynomial.hpp"

namespace eqlef {

/// det(xI - m), computed division-free with Berkowitz's algorithm.
///
/// For each leading principal submatrix A_r = [[A_{r-1}, C], [R, a]] the
/// coefficient vector (highest degree first) is updated by a lower-triangular
/// Toeplitz matrix whose first column is (1, -a, -RC, -RA_{r-1}C, ...).
inline IntPolynomial char_poly(const IntMatrix &m) {
  if (!m.is_square()) throw DimensionError("char_poly: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<Integer> p{1};  // highest degree first
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t k = r - 1;  // size of the previous block
    std::vector<Integer> col(r + 1);
    col[0] = 1;
    col[1] = -m(k, k);
    // v runs through C, A C, A^2 C, ... with A the k x k leading block.
    std::vector<Integer> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = m(i, k);
    for (std::size_t t = 2; t <= r; ++t) {
      Integer s = 0;
      for (std::size_t j = 0; j < k; ++j) s += m(k, j) * v[j];
      col[t] = -s;
      if (t == r) break;
      std::vector<Integer> w(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) w[i] += m(i, j) * v[j];
      v = std::move(w);
    }
    std::vector<Integer> next(r + 1);
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < p.size() && j <= i; ++j) next[i] += col[i - j] * p[j];
    p = std::move(next);
  }
  return IntPolynomial(IntVector(p.rbegin(), p.rend()));
}

/// Companion matrix of a monic polynomial: ones on the subdiagonal, last
/// column -c_0, ..., -c_{n-1}.
inline IntMatrix companion_matrix(const IntPolynomial &p) {
  if (!p.is_monic()) throw DomainError("companion_matrix: polynomial is not monic");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  IntMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
  return c;
}

}  // namespace eqlef
