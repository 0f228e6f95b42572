#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "eqlef/int_matrix.hpp"

namespace eqlef {

/// left * input * right == diag(diagonal) padded with zeros to the input shape.
/// `diagonal` holds only the nonzero invariant factors d_1 | d_2 | ... | d_r.
struct SmithNormalForm {
  IntVector diagonal;
  IntMatrix left;
  IntMatrix right;
  IntMatrix left_inverse;

  std::size_t rank() const noexcept { return diagonal.size(); }

  IntMatrix diagonal_matrix() const {
    IntMatrix d(left.rows(), right.cols());
    for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
    return d;
  }
};

namespace detail {

// Elementary operations that keep a unimodular transform and its inverse in sync.
struct RowTransform {
  IntMatrix &a, &t, &inv;
  void add(std::size_t dst, std::size_t src, const Integer &c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < a.cols(); ++j) a(dst, j) += c * a(src, j);
    for (std::size_t j = 0; j < t.cols(); ++j) t(dst, j) += c * t(src, j);
    for (std::size_t i = 0; i < inv.rows(); ++i) inv(i, src) -= c * inv(i, dst);
  }
  void swap(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(x, j), a(y, j));
    for (std::size_t j = 0; j < t.cols(); ++j) std::swap(t(x, j), t(y, j));
    for (std::size_t i = 0; i < inv.rows(); ++i) std::swap(inv(i, x), inv(i, y));
  }
  void negate(std::size_t x) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(x, j) = -a(x, j);
    for (std::size_t j = 0; j < t.cols(); ++j) t(x, j) = -t(x, j);
    for (std::size_t i = 0; i < inv.rows(); ++i) inv(i, x) = -inv(i, x);
  }
};

struct ColTransform {
  IntMatrix &a, &t;
  void add(std::size_t dst, std::size_t src, const Integer &c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) += c * a(i, src);
    for (std::size_t i = 0; i < t.rows(); ++i) t(i, dst) += c * t(i, src);
  }
  void swap(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, x), a(i, y));
    for (std::size_t i = 0; i < t.rows(); ++i) std::swap(t(i, x), t(i, y));
  }
};

}  // namespace detail

inline SmithNormalForm smith_normal_form(const IntMatrix &m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  SmithNormalForm snf{{}, IntMatrix::identity(rows), IntMatrix::identity(cols), IntMatrix::identity(rows)};
  detail::RowTransform row{a, snf.left, snf.left_inverse};
  detail::ColTransform col{a, snf.right};

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (!best || iabs(a(i, j)) < iabs(a(best->first, best->second)))) best = {i, j};
    if (!best) break;
    row.swap(t, best->first);
    col.swap(t, best->second);

    for (bool done = false; !done;) {
      done = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row.add(i, t, -(a(i, t) / a(t, t)));
        if (a(i, t) != 0) {
          row.swap(i, t);
          done = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col.add(j, t, -(a(t, j) / a(t, t)));
        if (a(t, j) != 0) {
          col.swap(j, t);
          done = false;
        }
      }
      if (!done) continue;
      // Enforce divisibility of the trailing block by the pivot.
      for (std::size_t i = t + 1; i < rows && done; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row.add(t, i, 1);
            done = false;
            break;
          }
    }
    if (a(t, t) < 0) row.negate(t);
    snf.diagonal.push_back(a(t, t));
  }
  return snf;
}

/// Row-style Hermite normal form of the lattice spanned by `vectors`:
/// echelon rows with positive pivots, entries above each pivot reduced into
/// [0, pivot). Zero rows are dropped, so the result is a canonical basis.
inline std::vector<IntVector> hermite_basis(std::vector<IntVector> vectors) {
  if (vectors.empty()) return {};
  const std::size_t n = vectors.front().size();
  for (const auto &v : vectors)
    if (v.size() != n) throw DimensionError("hermite_basis: vectors of different length");
  std::size_t p = 0;
  for (std::size_t c = 0; c < n && p < vectors.size(); ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = p; i < vectors.size(); ++i)
        if (vectors[i][c] != 0 && (!best || iabs(vectors[i][c]) < iabs(vectors[*best][c]))) best = i;
      if (!best) break;
      std::swap(vectors[p], vectors[*best]);
      bool clean = true;
      for (std::size_t i = p + 1; i < vectors.size(); ++i) {
        if (vectors[i][c] == 0) continue;
        Integer q = vectors[i][c] / vectors[p][c];
        for (std::size_t j = 0; j < n; ++j) vectors[i][j] -= q * vectors[p][j];
        if (vectors[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (vectors[p][c] == 0) continue;
    if (vectors[p][c] < 0)
      for (auto &x : vectors[p]) x = -x;
    for (std::size_t i = 0; i < p; ++i) {
      Integer q = floor_div(vectors[i][c], vectors[p][c]);
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j) vectors[i][j] -= q * vectors[p][j];
    }
    ++p;
  }
  vectors.resize(p);
  return vectors;
}

/// Basis of the integer kernel {v : m v = 0}, in Hermite normal form.
inline std::vector<IntVector> kernel_basis(const IntMatrix &m) {
  SmithNormalForm snf = smith_normal_form(m);
  std::vector<IntVector> basis;
  for (std::size_t j = snf.rank(); j < m.cols(); ++j) basis.push_back(snf.right.col(j));
  return hermite_basis(std::move(basis));
}

}  // namespace eqlef
