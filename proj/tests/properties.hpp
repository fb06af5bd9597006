#pragma once

// The randomized property suites. Each returns the number of failed cases
// so both the unit tests and the acceptance runner can drive them; every
// assertion is exact.

#include "testutil.hpp"

namespace qtest {

/// kron(a,b) * kron(c,d) == kron(a*c, b*d) for conformable random matrices.
inline int kronMixedProductSuite(int cases = 100) {
  Rng rng(8001);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    std::size_t m = 1 + t % 3, n = 1 + (t / 3) % 3, p = 1 + (t / 9) % 3;
    std::size_t br = 1 + t % 2 + 1, bc = 2, bp = 1 + (t / 2) % 2 + 1;
    DyadicMatrix a = randDyadicMatrix(rng, m, n), c = randDyadicMatrix(rng, n, p);
    DyadicMatrix b = randDyadicMatrix(rng, br, bc), d = randDyadicMatrix(rng, bc, bp);
    if (kron(a, b) * kron(c, d) != kron(a * c, b * d)) ++failures;
  }
  return failures;
}

/// hnf(hnf(m)) == hnf(m), and the row spans of m and hnf(m) coincide.
inline int hnfSuite(int cases = 100) {
  Rng rng(8002);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
    IntMatrix m = randIntMatrix(rng, r, c);
    IntMatrix h = hnf(m);
    if (hnf(h) != h) ++failures;
    bool spanOk = true;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      std::vector<Int> w = m.row(i);
      if (!reduceAgainstHnf(w, h)) spanOk = false;
    }
    // reverse inclusion: appending h's rows to m must not grow the span
    IntMatrix stacked(m.rows() + h.rows(), c);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < c; ++j) stacked.at(i, j) = m.at(i, j);
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (std::size_t j = 0; j < c; ++j) stacked.at(m.rows() + i, j) = h.at(i, j);
    if (hnf(stacked) != h) spanOk = false;
    if (!spanOk) ++failures;
  }
  return failures;
}

/// Quaternion multiplication is associative and norm-multiplicative.
inline int quaternionSuite(int cases = 100) {
  Rng rng(8003);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    HurwitzQuaternion a = randHurwitz(rng), b = randHurwitz(rng), c = randHurwitz(rng);
    if ((a * b) * c != a * (b * c)) ++failures;
    if ((a * b).norm() != a.norm() * b.norm()) ++failures;
  }
  return failures;
}

/// Fincke-Pohst output equals the independent box-scan oracle in dims <= 4.
inline int shortestVectorOracleSuite(int cases = 100) {
  Rng rng(8004);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    Lattice lat = randLattice(rng, 2 + t % 3);
    ShortVectorSet fast = lat.shortestVectors();
    ShortVectorSet slow = boxShortestVectors(lat);
    if (fast.norm != slow.norm || fast.count != slow.count || fast.vectors != slow.vectors)
      ++failures;
  }
  return failures;
}

/// Bsgs order is invariant under generator shuffles and base-point choice,
/// and always equals the brute-force closure order.
inline int bsgsInvarianceSuite(int cases = 100) {
  Rng rng(8005);
  int failures = 0;
  for (int t = 0; t < cases; ++t) {
    std::size_t degree = 4 + t % 5;
    std::vector<Permutation> gens;
    for (int g = 0; g < 2 + t % 2; ++g) gens.push_back(randPermutation(rng, degree));
    std::size_t expected = permClosureOrder(gens, 1u << 20);
    Int viaBsgs = Bsgs::build(gens).order();
    if (viaBsgs != Int(static_cast<std::uint64_t>(expected))) ++failures;
    // shuffled generators and a random preferred base must agree
    std::vector<Permutation> shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<std::uint32_t> hint(degree);
    std::iota(hint.begin(), hint.end(), 0);
    std::shuffle(hint.begin(), hint.end(), rng);
    if (Bsgs::build(shuffled, hint).order() != viaBsgs) ++failures;
  }
  return failures;
}

}  // namespace qtest
