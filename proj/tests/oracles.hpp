#pragma once
// Independent reference computations used by the test suites. Nothing here
// calls into the algorithms it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "eqlef/int_matrix.hpp"
#include "eqlef/polynomial.hpp"

namespace oracle {

using eqlef::Integer;
using eqlef::IntMatrix;
using eqlef::IntPolynomial;
using eqlef::IntVector;

/// det(xI - a) by cofactor expansion over Z[x]; exponential, fine for n <= 6.
inline IntPolynomial char_poly_laplace(const IntMatrix &a) {
  const std::size_t n = a.rows();
  if (n == 0) return IntPolynomial::constant(1);
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = (i == j ? IntPolynomial{0, 1} : IntPolynomial{}) - IntPolynomial::constant(a(i, j));
  struct Rec {
    static IntPolynomial det(const std::vector<std::vector<IntPolynomial>> &m) {
      const std::size_t n = m.size();
      if (n == 1) return m[0][0];
      IntPolynomial total;
      for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<IntPolynomial>> minor;
        for (std::size_t i = 1; i < n; ++i) {
          std::vector<IntPolynomial> row;
          for (std::size_t k = 0; k < n; ++k)
            if (k != j) row.push_back(m[i][k]);
          minor.push_back(row);
        }
        IntPolynomial term = m[0][j] * det(minor);
        total = (j % 2 == 0) ? total + term : total - term;
      }
      return total;
    }
  };
  return Rec::det(m);
}

/// Long division by a monic divisor, written out independently.
inline bool divides_monic(const IntVector &g, IntVector f) {
  const std::size_t dg = g.size() - 1;
  if (f.size() < g.size()) return false;
  for (std::size_t k = f.size() - 1; k >= dg; --k) {
    Integer t = f[k];
    for (std::size_t j = 0; j <= dg; ++j) f[k - dg + j] -= t * g[j];
    if (k == dg) break;
  }
  for (const auto &c : f)
    if (c != 0) return false;
  return true;
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Brute-force irreducibility of a monic integer polynomial: no monic integer
/// divisor of degree 1..deg/2 exists inside the Mignotte coefficient box.
/// The constant term of a divisor must divide the constant term of f.
inline bool is_irreducible_monic(const IntPolynomial &f) {
  if (!f.is_monic() || f.degree() < 1) return false;
  const IntVector &c = f.coeffs();
  const int n = f.degree();
  if (n == 1) return true;
  if (c[0] == 0) return false;
  Integer norm2 = 0;
  for (const auto &a : c) norm2 += a * a;
  Integer norm = boost::multiprecision::sqrt(norm2) + 1;
  std::vector<Integer> const_divisors;
  const Integer c0 = c[0] < 0 ? Integer(-c[0]) : c[0];
  for (Integer d = 1; d <= c0; ++d)
    if (c0 % d == 0) {
      const_divisors.push_back(d);
      const_divisors.push_back(-d);
    }
  for (int m = 1; 2 * m <= n; ++m) {
    std::vector<Integer> bound(static_cast<std::size_t>(m));
    for (int i = 1; i < m; ++i) bound[static_cast<std::size_t>(i)] = binomial(static_cast<unsigned>(m), static_cast<unsigned>(i)) * norm;
    IntVector g(static_cast<std::size_t>(m) + 1);
    g[static_cast<std::size_t>(m)] = 1;
    // odometer over g_1..g_{m-1}, g_0 ranges over divisors of c_0
    std::vector<Integer> cur(static_cast<std::size_t>(m));
    for (int i = 1; i < m; ++i) cur[static_cast<std::size_t>(i)] = -bound[static_cast<std::size_t>(i)];
    for (;;) {
      for (const auto &d0 : const_divisors) {
        g[0] = d0;
        for (int i = 1; i < m; ++i) g[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i)];
        if (divides_monic(g, c)) return false;
      }
      int i = 1;
      while (i < m && cur[static_cast<std::size_t>(i)] == bound[static_cast<std::size_t>(i)]) {
        cur[static_cast<std::size_t>(i)] = -bound[static_cast<std::size_t>(i)];
        ++i;
      }
      if (i >= m) break;
      ++cur[static_cast<std::size_t>(i)];
    }
  }
  return true;
}

inline IntMatrix random_matrix(std::mt19937_64 &rng, std::size_t n, int max_abs) {
  std::uniform_int_distribution<int> d(-max_abs, max_abs);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

/// Random unimodular matrix as a product of elementary matrices, with its
/// inverse built from the inverse factors in reverse order.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937_64 &rng, std::size_t n, int steps = 6) {
  IntMatrix u = IntMatrix::identity(n), inv = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && (rng() & 1U)) {
      u(0, 0) = -1;
      inv(0, 0) = -1;
    }
    return {u, inv};
  }
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) j = (i + 1) % n;
    int c = mult(rng);
    if (c == 0) c = 1;
    IntMatrix e = IntMatrix::identity(n), einv = IntMatrix::identity(n);
    e(i, j) = c;
    einv(i, j) = -c;
    u = e * u;
    inv = inv * einv;
  }
  return {u, inv};
}

}  // namespace oracle
