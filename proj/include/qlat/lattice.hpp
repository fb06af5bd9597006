#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qlat/detail/rep_constants.hpp"
#include "qlat/intmatrix.hpp"
#include "qlat/matrix.hpp"

namespace qlat {

/// The complete set of nonzero lattice vectors of minimal squared norm.
/// Vectors are canonically sorted and closed under negation; count is the
/// kissing number.
struct ShortVectorSet {
  Dyadic norm;
  std::vector<DyadicVector> vectors;
  std::size_t count = 0;
};

/// Full-rank lattice over Z[1/2], stored as a row basis with cached Gram
/// matrix and a canonical HNF form used for membership and equality.
class Lattice {
 public:
  explicit Lattice(DyadicMatrix basis) : basis_(std::move(basis)), gram_(1, 1) {
    if (basis_.rows() != basis_.cols())
      throw std::invalid_argument("Lattice: square basis required");
    dim_ = basis_.rows();
    if (basis_.det().isZero()) throw std::invalid_argument("Lattice: basis is rank-deficient");
    gram_ = basis_ * basis_.transpose();
    auto [n, s] = basis_.clearDenominators();
    hnf_ = hnf(n);
    hnfShift_ = s;
    canonicalizeHnf();
  }

  std::size_t dim() const { return dim_; }
  const DyadicMatrix& basis() const { return basis_; }
  const DyadicMatrix& gram() const { return gram_; }

  /// True iff v is an integer combination of the basis rows.
  bool member(const DyadicVector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("member: dimension mismatch");
    std::vector<Int> w(dim_);
    for (std::size_t t = 0; t < dim_; ++t) {
      if (v[t].exponent() > hnfShift_) return false;  // denominator too fine
      w[t] = v[t].numerator() << (hnfShift_ - v[t].exponent());
    }
    return reduceAgainstHnf(w, hnf_);
  }

  /// Same Z-span: canonical forms coincide.
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.hnfShift_ == b.hnfShift_ && a.hnf_ == b.hnf_;
  }
  friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

  Lattice scaled(const Dyadic& c) const { return Lattice(c * basis_); }

  /// True iff the orthogonal matrix g maps the lattice onto itself (checked
  /// in both directions). Non-orthogonal input is rejected.
  bool isAutomorphism(const DyadicMatrix& g) const {
    if (g.rows() != dim_ || g.cols() != dim_)
      throw std::invalid_argument("isAutomorphism: dimension mismatch");
    if (!g.isOrthogonal())
      throw std::invalid_argument("isAutomorphism: matrix is not orthogonal");
    DyadicMatrix fwd = basis_ * g.transpose();  // images of basis rows under g
    DyadicMatrix bwd = basis_ * g;              // ... and under g^-1 = g^T
    for (std::size_t r = 0; r < dim_; ++r)
      if (!member(fwd.row(r)) || !member(bwd.row(r))) return false;
    return true;
  }

  /// Complete shortest-vector enumeration (Fincke-Pohst). The search uses a
  /// floating-point LDL decomposition only for pruning bounds; every
  /// candidate is re-verified in exact arithmetic, and the minimal norm is
  /// discovered, not assumed.
  ShortVectorSet shortestVectors() const {
    const std::size_t n = dim_;
    auto [gn, gs] = gram_.clearDenominators();

    // initial radius: norm of the shortest basis row (always achieved)
    Dyadic bound = gram_.at(0, 0);
    for (std::size_t i = 1; i < n; ++i)
      if (gram_.at(i, i) < bound) bound = gram_.at(i, i);

    // LDL of the Gram matrix in doubles, for pruning only
    std::vector<double> d(n);
    std::vector<std::vector<double>> mu(n, std::vector<double>(n, 0.0));
    {
      std::vector<std::vector<double>> a(n, std::vector<double>(n));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = gram_.at(r, c).toDouble();
      for (std::size_t i = 0; i < n; ++i) {
        d[i] = a[i][i];
        if (!(d[i] > 0))
          throw std::runtime_error("shortestVectors: Gram matrix not positive definite");
        for (std::size_t j = i + 1; j < n; ++j) mu[i][j] = a[i][j] / a[i][i];
        for (std::size_t j = i + 1; j < n; ++j)
          for (std::size_t k = j; k < n; ++k) {
            a[j][k] -= a[j][i] * a[i][k] / a[i][i];
            a[k][j] = a[j][k];
          }
      }
    }

    // pruning is padded so float round-off can only widen the search; the
    // exact filter below trims the excess
    const double radius = bound.toDouble() * (1.0 + 1e-9) + 1e-12;
    const double slack = radius * 1e-9 + 1e-12;
    std::vector<long long> x(n, 0);
    std::vector<std::vector<long long>> candidates;

    // depth-first over coefficient vectors, level i chooses x[i]
    auto rec = [&](auto&& self, std::size_t i, double rem) -> void {
      double center = 0.0;
      for (std::size_t j = i + 1; j < n; ++j) center -= mu[i][j] * static_cast<double>(x[j]);
      double halfWidth = std::sqrt(std::max(rem + slack, 0.0) / d[i]) * (1.0 + 1e-12) + 1e-9;
      long long lo = static_cast<long long>(std::ceil(center - halfWidth));
      long long hi = static_cast<long long>(std::floor(center + halfWidth));
      for (long long xi = lo; xi <= hi; ++xi) {
        x[i] = xi;
        double diff = static_cast<double>(xi) - center;
        double contrib = d[i] * diff * diff;
        if (contrib > rem + slack) continue;
        if (i == 0) {
          bool allZero = true;
          for (long long t : x)
            if (t != 0) {
              allZero = false;
              break;
            }
          if (!allZero) candidates.push_back(x);
        } else {
          self(self, i - 1, rem - contrib);
        }
      }
      x[i] = 0;
    };
    rec(rec, n - 1, radius);

    // exact filtering: keep the candidates of smallest exact norm
    ShortVectorSet out;
    std::vector<std::vector<long long>> best;
    bool haveMin = false;
    for (const auto& cand : candidates) {
      Int q = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (cand[r] == 0) continue;
        Int wr = 0;
        for (std::size_t c = 0; c < n; ++c)
          if (cand[c] != 0) wr += gn.at(r, c) * cand[c];
        q += wr * cand[r];
      }
      Dyadic norm(q, gs);
      if (norm > bound) continue;  // float slack let it through; exact says no
      if (!haveMin || norm < out.norm) {
        out.norm = norm;
        best.clear();
        best.push_back(cand);
        haveMin = true;
      } else if (norm == out.norm) {
        best.push_back(cand);
      }
    }

    out.vectors.reserve(best.size());
    for (const auto& cand : best) {
      DyadicVector v(n);
      for (std::size_t r = 0; r < n; ++r) {
        if (cand[r] == 0) continue;
        Dyadic coeff(Int(cand[r]));
        for (std::size_t c = 0; c < n; ++c)
          if (!basis_.at(r, c).isZero()) v[c] += coeff * basis_.at(r, c);
      }
      out.vectors.push_back(std::move(v));
    }
    std::sort(out.vectors.begin(), out.vectors.end(),
              [](const DyadicVector& a, const DyadicVector& b) {
                return compareVectors(a, b) < 0;
              });
    out.count = out.vectors.size();
    return out;
  }

 private:
  void canonicalizeHnf() {
    for (;;) {
      if (hnfShift_ == 0) return;
      for (std::size_t r = 0; r < hnf_.rows(); ++r)
        for (std::size_t c = 0; c < hnf_.cols(); ++c)
          if (boost::multiprecision::bit_test(hnf_.at(r, c), 0)) return;
      for (std::size_t r = 0; r < hnf_.rows(); ++r)
        for (std::size_t c = 0; c < hnf_.cols(); ++c) hnf_.at(r, c) >>= 1;
      --hnfShift_;
    }
  }

  std::size_t dim_ = 0;
  DyadicMatrix basis_;
  DyadicMatrix gram_;
  IntMatrix hnf_{1, 1};
  unsigned hnfShift_ = 0;
};

/// HNF basis of the Z-span of the given vectors. The vectors must span full
/// rank; rank-deficient input is rejected.
inline Lattice spanFromVectors(const std::vector<DyadicVector>& vectors) {
  if (vectors.empty()) throw std::invalid_argument("spanFromVectors: no vectors");
  std::size_t n = vectors.front().size();
  unsigned shift = 0;
  for (const auto& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("spanFromVectors: ragged input");
    for (const auto& x : v) shift = std::max(shift, x.exponent());
  }
  IntMatrix stacked(vectors.size(), n);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      stacked.at(r, c) = vectors[r][c].numerator() << (shift - vectors[r][c].exponent());
  IntMatrix h = hnf(stacked);
  if (h.rows() != n)
    throw std::invalid_argument("spanFromVectors: vectors do not span full rank");
  DyadicMatrix basis(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) basis.at(r, c) = Dyadic(h.at(r, c), shift);
  return Lattice(std::move(basis));
}

/// The F4 root lattice, with the basis rows exactly as printed.
inline Lattice f4Lattice() {
  return Lattice(DyadicMatrix::fromText(detail::kF4BasisText));
}

/// The 16-dimensional Barnes-Wall lattice, with the basis rows exactly as
/// printed (quarter-integer scaling).
inline Lattice bw16Lattice() {
  return Lattice(DyadicMatrix::fromText(detail::kBw16BasisText));
}

}  // namespace qlat
