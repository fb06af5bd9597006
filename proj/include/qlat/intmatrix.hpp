#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qlat/dyadic.hpp"

namespace qlat {

/// Dense matrix over arbitrary-precision integers. Used for Hermite normal
/// form and lattice membership solving.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("IntMatrix: empty dimensions");
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

  std::vector<Int> row(std::size_t r) const {
    return std::vector<Int>(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

/// Row-style Hermite normal form. Row span over Z is preserved; pivots are
/// positive, entries above each pivot reduced into [0, pivot). Zero rows are
/// dropped, so the result has rank-many rows.
inline IntMatrix hnf(const IntMatrix& m) {
  std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::vector<Int>> w(nr);
  for (std::size_t r = 0; r < nr; ++r) w[r] = m.row(r);

  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    // Euclidean elimination in column c over rows r..nr-1.
    for (;;) {
      std::size_t best = nr;
      for (std::size_t k = r; k < nr; ++k) {
        if (w[k][c] == 0) continue;
        if (best == nr || boost::multiprecision::abs(w[k][c]) <
                              boost::multiprecision::abs(w[best][c]))
          best = k;
      }
      if (best == nr) break;
      std::swap(w[r], w[best]);
      bool othersZero = true;
      for (std::size_t k = r + 1; k < nr; ++k) {
        if (w[k][c] != 0) {
          othersZero = false;
          Int q = w[k][c] / w[r][c];  // truncated division is fine, loop re-picks the minimum
          for (std::size_t t = c; t < nc; ++t) w[k][t] -= q * w[r][t];
        }
      }
      if (othersZero) break;
    }
    if (w[r][c] != 0) {
      if (w[r][c] < 0)
        for (std::size_t t = c; t < nc; ++t) w[r][t] = -w[r][t];
      for (std::size_t k = 0; k < r; ++k) {
        // floor division puts the entry above the pivot into [0, pivot)
        Int q = w[k][c] / w[r][c];
        if (w[k][c] - q * w[r][c] < 0) q -= 1;
        if (q != 0)
          for (std::size_t t = c; t < nc; ++t) w[k][t] -= q * w[r][t];
      }
      ++r;
    }
  }

  if (r == 0) throw std::invalid_argument("hnf: zero matrix has no nonzero rows");
  IntMatrix out(r, nc);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < nc; ++c) out.at(i, c) = w[i][c];
  return out;
}

/// Reduces w against the rows of an HNF matrix in place. Returns true iff w
/// lies in the integer row span (i.e. reduces to zero).
inline bool reduceAgainstHnf(std::vector<Int>& w, const IntMatrix& h) {
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h.at(r, c) == 0) ++c;
    if (c == h.cols()) continue;
    if (w[c] % h.at(r, c) != 0) return false;
    Int q = w[c] / h.at(r, c);
    if (q != 0)
      for (std::size_t t = c; t < h.cols(); ++t) w[t] -= q * h.at(r, t);
  }
  for (const Int& x : w)
    if (x != 0) return false;
  return true;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int intDet(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("intDet: square matrix required");
  std::size_t n = m.rows();
  std::vector<std::vector<Int>> a(n);
  for (std::size_t r = 0; r < n; ++r) a[r] = m.row(r);
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace qlat
