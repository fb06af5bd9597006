#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlat/dyadic.hpp"
#include "qlat/intmatrix.hpp"

namespace qlat {

using DyadicVector = std::vector<Dyadic>;

/// Dense matrix over Z[1/2] with exact arithmetic. Entries are kept in
/// canonical form, so equality and hashing are entrywise.
///
/// Convention used throughout the toolkit: matrices act on column vectors,
/// lattice bases are stored as rows. A row vector v transforms to v * g^T.
class DyadicMatrix {
 public:
  DyadicMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("DyadicMatrix: empty dimensions");
  }

  static DyadicMatrix identity(std::size_t n) {
    DyadicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Dyadic(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Dyadic& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Dyadic& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  DyadicVector row(std::size_t r) const {
    return DyadicVector(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
  }

  friend bool operator==(const DyadicMatrix& a, const DyadicMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const DyadicMatrix& a, const DyadicMatrix& b) { return !(a == b); }

  friend DyadicMatrix operator*(const DyadicMatrix& a, const DyadicMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("DyadicMatrix: dimension mismatch in product");
    DyadicMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Dyadic& aik = a.at(i, k);
        if (aik.isZero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Dyadic& bkj = b.at(k, j);
          if (!bkj.isZero()) out.at(i, j) += aik * bkj;
        }
      }
    return out;
  }

  friend DyadicMatrix operator+(const DyadicMatrix& a, const DyadicMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("DyadicMatrix: dimension mismatch in sum");
    DyadicMatrix out = a;
    for (std::size_t i = 0; i < out.e_.size(); ++i) out.e_[i] += b.e_[i];
    return out;
  }

  DyadicMatrix operator-() const {
    DyadicMatrix out = *this;
    for (auto& x : out.e_) x = -x;
    return out;
  }

  friend DyadicMatrix operator*(const Dyadic& s, const DyadicMatrix& m) {
    DyadicMatrix out = m;
    for (auto& x : out.e_) x *= s;
    return out;
  }

  DyadicMatrix transpose() const {
    DyadicMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
  }

  Dyadic trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: square matrix required");
    Dyadic t;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  bool isIdentity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (at(r, c) != (r == c ? Dyadic(1) : Dyadic(0))) return false;
    return true;
  }

  bool isOrthogonal() const {
    return rows_ == cols_ && (*this * transpose()).isIdentity();
  }

  /// Clears the common power-of-two denominator: returns (N, s) with
  /// *this == N / 2^s and s minimal.
  std::pair<IntMatrix, unsigned> clearDenominators() const {
    unsigned s = 0;
    for (const auto& x : e_) s = std::max(s, x.exponent());
    IntMatrix n(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        n.at(r, c) = at(r, c).numerator() << (s - at(r, c).exponent());
    return {std::move(n), s};
  }

  /// Exact determinant (Bareiss on the denominator-cleared matrix).
  Dyadic det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: square matrix required");
    auto [n, s] = clearDenominators();
    return Dyadic(intDet(n), s * static_cast<unsigned>(rows_));
  }

  /// Canonical byte encoding of dimensions and entries.
  void serialize(std::string& out) const {
    out.push_back(static_cast<char>(rows_ & 0xff));
    out.push_back(static_cast<char>(cols_ & 0xff));
    for (const auto& x : e_) x.serialize(out);
  }

  std::string serialized() const {
    std::string s;
    s.reserve(e_.size() * 5);
    serialize(s);
    return s;
  }

  std::size_t hash() const { return hashBytes(serialized()); }

  /// Text format: "rows cols" on the first line, then one line per row of
  /// whitespace-separated entries "n" or "n/d" with d a power of two.
  std::string toText() const {
    std::ostringstream os;
    os << rows_ << ' ' << cols_ << '\n';
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c) os << ' ';
        os << at(r, c).str();
      }
      os << '\n';
    }
    return os.str();
  }

  static DyadicMatrix fromText(std::string_view text) {
    std::istringstream is{std::string(text)};
    long long rows = 0, cols = 0;
    if (!(is >> rows >> cols) || rows <= 0 || cols <= 0)
      throw std::invalid_argument("matrix text: bad header");
    DyadicMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::string tok;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!(is >> tok)) throw std::invalid_argument("matrix text: too few entries");
        m.at(r, c) = Dyadic::parse(tok);
      }
    if (is >> tok) throw std::invalid_argument("matrix text: trailing data");
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Dyadic> e_;
};

/// Kronecker product: block (p,q) of the result is a[p][q] * b.
inline DyadicMatrix kron(const DyadicMatrix& a, const DyadicMatrix& b) {
  DyadicMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = 0; q < a.cols(); ++q) {
      const Dyadic& s = a.at(p, q);
      if (s.isZero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          out.at(p * b.rows() + r, q * b.cols() + c) = s * b.at(r, c);
    }
  return out;
}

/// Inverse of an orthogonal matrix, i.e. its transpose. The orthogonality
/// precondition is checked exactly.
inline DyadicMatrix inverseOrthogonal(const DyadicMatrix& m) {
  if (!m.isOrthogonal())
    throw std::invalid_argument("inverseOrthogonal: matrix is not orthogonal");
  return m.transpose();
}

/// m * v with v as a column vector.
inline DyadicVector matVec(const DyadicMatrix& m, const DyadicVector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("matVec: dimension mismatch");
  DyadicVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).isZero() && !v[c].isZero()) out[r] += m.at(r, c) * v[c];
  return out;
}

/// v * m with v as a row vector.
inline DyadicVector vecMat(const DyadicVector& v, const DyadicMatrix& m) {
  if (m.rows() != v.size()) throw std::invalid_argument("vecMat: dimension mismatch");
  DyadicVector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!v[r].isZero())
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m.at(r, c).isZero()) out[c] += v[r] * m.at(r, c);
  return out;
}

inline Dyadic dot(const DyadicVector& a, const DyadicVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Dyadic s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].isZero() && !b[i].isZero()) s += a[i] * b[i];
  return s;
}

inline void serializeVector(const DyadicVector& v, std::string& out) {
  for (const auto& x : v) x.serialize(out);
}

/// Exact lexicographic comparison of equal-length vectors.
inline int compareVectors(const DyadicVector& a, const DyadicVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = a[i].compare(b[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace qlat
