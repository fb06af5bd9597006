#pragma once

// Shared helpers for the test suites: deterministic random generators and
// the independent brute-force oracles the property tests check against.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "qlat/bsgs.hpp"
#include "qlat/intmatrix.hpp"
#include "qlat/lattice.hpp"
#include "qlat/matrix.hpp"
#include "qlat/permutation.hpp"
#include "qlat/quaternion.hpp"
#include "qlat/tensor.hpp"

namespace qtest {

using namespace qlat;

using Rng = std::mt19937_64;

inline long long randInt(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline Dyadic randDyadic(Rng& rng, long long maxAbs = 20, unsigned maxExp = 4) {
  return Dyadic(Int(randInt(rng, -maxAbs, maxAbs)),
                static_cast<unsigned>(randInt(rng, 0, maxExp)));
}

inline DyadicMatrix randDyadicMatrix(Rng& rng, std::size_t r, std::size_t c) {
  DyadicMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = randDyadic(rng, 6, 2);
  return m;
}

inline IntMatrix randIntMatrix(Rng& rng, std::size_t r, std::size_t c, long long maxAbs = 6) {
  for (;;) {
    IntMatrix m(r, c);
    bool nonzero = false;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        long long v = randInt(rng, -maxAbs, maxAbs);
        m.at(i, j) = v;
        nonzero |= v != 0;
      }
    if (nonzero) return m;
  }
}

inline HurwitzQuaternion randHurwitz(Rng& rng, long long maxAbs = 9) {
  long long parity = randInt(rng, 0, 1);
  auto coord = [&] {
    long long v = randInt(rng, -maxAbs, maxAbs);
    return Int(2 * v + parity);
  };
  return HurwitzQuaternion(coord(), coord(), coord(), coord());
}

/// Sparse random algebra element: a few signed dyadic multiples of words.
inline AlgebraElement randAlgebraElement(Rng& rng, std::size_t rank, int terms = 4) {
  AlgebraElement e(rank);
  for (int t = 0; t < terms; ++t) {
    std::size_t idx = static_cast<std::size_t>(randInt(rng, 0, static_cast<long long>(pow4(rank)) - 1));
    e.coord(idx) += randDyadic(rng, 3, 2);
  }
  return e;
}

inline Permutation randPermutation(Rng& rng, std::size_t degree) {
  std::vector<std::uint32_t> v(degree);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

/// Brute-force closure order of a permutation group (independent of Bsgs).
inline std::size_t permClosureOrder(const std::vector<Permutation>& gens, std::size_t cap) {
  if (gens.empty()) return 1;
  std::set<std::vector<std::uint32_t>> seen;
  auto key = [](const Permutation& p) {
    std::vector<std::uint32_t> v(p.degree());
    for (std::size_t t = 0; t < p.degree(); ++t) v[t] = p[t];
    return v;
  };
  std::vector<Permutation> frontier{Permutation::identity(gens.front().degree())};
  seen.insert(key(frontier.front()));
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Permutation q = p.then(g);
        if (seen.insert(key(q)).second) {
          next.push_back(std::move(q));
          if (seen.size() > cap) throw std::runtime_error("permClosureOrder: cap exceeded");
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

/// Per-coordinate coefficient radii covering all vectors of norm up to the
/// smallest Gram diagonal: x_i^2 <= C * (G^-1)_ii, with the dual diagonal
/// computed exactly by cofactors and rounded conservatively upward.
inline std::vector<long long> boxRadii(const Lattice& lat) {
  const std::size_t n = lat.dim();
  auto [gn, gs] = lat.gram().clearDenominators();

  Dyadic bound = lat.gram().at(0, 0);
  for (std::size_t i = 1; i < n; ++i)
    if (lat.gram().at(i, i) < bound) bound = lat.gram().at(i, i);

  auto minorDet = [&](auto&& self, std::vector<std::size_t> rows,
                      std::vector<std::size_t> cols) -> Int {
    if (rows.size() == 1) return gn.at(rows[0], cols[0]);
    Int acc = 0;
    for (std::size_t t = 0; t < cols.size(); ++t) {
      std::vector<std::size_t> subRows(rows.begin() + 1, rows.end());
      std::vector<std::size_t> subCols;
      for (std::size_t u = 0; u < cols.size(); ++u)
        if (u != t) subCols.push_back(cols[u]);
      Int term = gn.at(rows[0], cols[t]) * self(self, subRows, subCols);
      acc += (t % 2 == 0) ? term : -term;
    }
    return acc;
  };
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  Int det = minorDet(minorDet, all, all);

  std::vector<long long> radius(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> sub;
    for (std::size_t t = 0; t < n; ++t)
      if (t != i) sub.push_back(t);
    Int adj = n == 1 ? Int(1) : minorDet(minorDet, sub, sub);
    double r = std::sqrt(std::max(0.0, bound.toDouble() * std::ldexp(1.0, gs) *
                                           adj.convert_to<double>() / det.convert_to<double>()));
    radius[i] = static_cast<long long>(r) + 1;
  }
  return radius;
}

/// Independent shortest-vector oracle: a full scan of the coefficient box
/// bounded by the enumeration radius (no tree pruning, exact norms only).
inline ShortVectorSet boxShortestVectors(const Lattice& lat) {
  const std::size_t n = lat.dim();
  auto [gn, gs] = lat.gram().clearDenominators();
  Dyadic bound = lat.gram().at(0, 0);
  for (std::size_t i = 1; i < n; ++i)
    if (lat.gram().at(i, i) < bound) bound = lat.gram().at(i, i);
  std::vector<long long> radius = boxRadii(lat);

  ShortVectorSet out;
  std::vector<long long> x(n, -1);
  for (std::size_t i = 0; i < n; ++i) x[i] = -radius[i];
  bool haveMin = false;
  std::vector<std::vector<long long>> best;
  for (;;) {
    bool allZero = true;
    for (long long v : x)
      if (v) allZero = false;
    if (!allZero) {
      Int q = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (!x[r]) continue;
        Int wr = 0;
        for (std::size_t c = 0; c < n; ++c)
          if (x[c]) wr += gn.at(r, c) * x[c];
        q += wr * x[r];
      }
      Dyadic norm(q, gs);
      if (norm <= bound) {
        if (!haveMin || norm < out.norm) {
          out.norm = norm;
          best.clear();
          haveMin = true;
        }
        if (norm == out.norm) best.push_back(x);
      }
    }
    std::size_t i = 0;
    while (i < n && x[i] == radius[i]) {
      x[i] = -radius[i];
      ++i;
    }
    if (i == n) break;
    ++x[i];
  }

  for (const auto& cand : best) {
    DyadicVector v(n);
    for (std::size_t r = 0; r < n; ++r) {
      if (!cand[r]) continue;
      Dyadic coeff(Int(cand[r]));
      for (std::size_t c = 0; c < n; ++c)
        if (!lat.basis().at(r, c).isZero()) v[c] += coeff * lat.basis().at(r, c);
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

/// Random full-rank lattice in dimension 2..4 whose oracle box is small
/// enough for a full scan.
inline Lattice randLattice(Rng& rng, std::size_t dim) {
  for (;;) {
    DyadicMatrix b(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        b.at(r, c) = Dyadic(Int(randInt(rng, -3, 3)), static_cast<unsigned>(randInt(rng, 0, 1)));
    if (b.det().isZero()) continue;
    Lattice lat{b};
    double boxPoints = 1.0;
    for (long long r : boxRadii(lat)) boxPoints *= static_cast<double>(2 * r + 1);
    if (boxPoints <= 2e5) return lat;
  }
}

}  // namespace qtest
