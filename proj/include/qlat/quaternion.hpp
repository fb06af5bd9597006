#pragma once

#include <array>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qlat/matrix.hpp"

namespace qlat {

/// Hurwitz quaternion. Coordinates are stored doubled, so the value is
/// (c0 + c1*i + c2*j + c3*k) / 2 and the Hurwitz condition — all four
/// coordinates integral or all half-integral — is a single parity check.
class HurwitzQuaternion {
 public:
  /// Doubled coordinates; all four must share the same parity.
  HurwitzQuaternion(Int c0, Int c1, Int c2, Int c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
    bool odd = boost::multiprecision::bit_test(c_[0], 0);
    for (int t = 1; t < 4; ++t)
      if (boost::multiprecision::bit_test(c_[t], 0) != odd)
        throw std::invalid_argument("HurwitzQuaternion: mixed coordinate parity");
  }

  static HurwitzQuaternion fromIntegers(Int a, Int b, Int c, Int d) {
    return HurwitzQuaternion(a * 2, b * 2, c * 2, d * 2);
  }

  static HurwitzQuaternion one() { return fromIntegers(1, 0, 0, 0); }
  static HurwitzQuaternion i() { return fromIntegers(0, 1, 0, 0); }
  static HurwitzQuaternion j() { return fromIntegers(0, 0, 1, 0); }
  static HurwitzQuaternion k() { return fromIntegers(0, 0, 0, 1); }
  /// omega = (1 + i + j + k)/2
  static HurwitzQuaternion omega() { return HurwitzQuaternion(1, 1, 1, 1); }

  const Int& doubled(int t) const { return c_[t]; }

  friend HurwitzQuaternion operator*(const HurwitzQuaternion& a, const HurwitzQuaternion& b) {
    const Int &a0 = a.c_[0], &a1 = a.c_[1], &a2 = a.c_[2], &a3 = a.c_[3];
    const Int &b0 = b.c_[0], &b1 = b.c_[1], &b2 = b.c_[2], &b3 = b.c_[3];
    // Hamilton product of the doubled coordinates is 2x too large; the
    // halving is exact because Hurwitz integers are closed under products.
    Int d0 = a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3;
    Int d1 = a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2;
    Int d2 = a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1;
    Int d3 = a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0;
    return HurwitzQuaternion(d0 >> 1, d1 >> 1, d2 >> 1, d3 >> 1);
  }

  HurwitzQuaternion operator-() const {
    return HurwitzQuaternion(-c_[0], -c_[1], -c_[2], -c_[3]);
  }

  HurwitzQuaternion conjugate() const {
    return HurwitzQuaternion(c_[0], -c_[1], -c_[2], -c_[3]);
  }

  /// Quaternion norm; a non-negative integer for Hurwitz integers.
  Int norm() const {
    Int s = c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
    return s >> 2;
  }

  friend bool operator==(const HurwitzQuaternion& a, const HurwitzQuaternion& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const HurwitzQuaternion& a, const HurwitzQuaternion& b) {
    return !(a == b);
  }

  /// Coordinate vector in the basis (e, i, j, k); the inverse of the map
  /// sending (c0,c1,c2,c3) to c0 + c1*i + c2*j + c3*k.
  std::array<Dyadic, 4> coordinates() const {
    return {Dyadic(c_[0], 1), Dyadic(c_[1], 1), Dyadic(c_[2], 1), Dyadic(c_[3], 1)};
  }

  std::string key() const {
    std::string s;
    for (const auto& c : c_) Dyadic(c).serialize(s);
    return s;
  }

 private:
  std::array<Int, 4> c_;
};

inline std::array<Dyadic, 4> phiInverse(const HurwitzQuaternion& q) {
  return q.coordinates();
}

namespace detail {
inline const DyadicMatrix& tauBasis(int t) {
  static const std::array<DyadicMatrix, 4> m = {
      DyadicMatrix::identity(4),
      DyadicMatrix::fromText("4 4\n"
                             "0 1 0 0\n-1 0 0 0\n0 0 0 1\n0 0 -1 0\n"),
      DyadicMatrix::fromText("4 4\n"
                             "0 0 1 0\n0 0 0 -1\n-1 0 0 0\n0 1 0 0\n"),
      DyadicMatrix::fromText("4 4\n"
                             "0 0 0 -1\n0 0 -1 0\n0 1 0 0\n1 0 0 0\n"),
  };
  return m[t];
}
}  // namespace detail

/// The 4-dimensional orthogonal representation of the quaternions, extended
/// linearly from tau(i), tau(j), tau(k); multiplicative on all of H.
inline DyadicMatrix tau(const HurwitzQuaternion& q) {
  DyadicMatrix out(4, 4);
  for (int t = 0; t < 4; ++t) {
    if (q.doubled(t) == 0) continue;
    out = out + Dyadic(q.doubled(t), 1) * detail::tauBasis(t);
  }
  return out;
}

struct QuatUnitGroup {
  std::vector<HurwitzQuaternion> generators;
  std::vector<HurwitzQuaternion> elements;  // breadth-first closure order
};

/// Closure of {i, j, k, omega} under multiplication: the binary tetrahedral
/// group of 24 norm-1 units. The cap guards against broken arithmetic.
inline QuatUnitGroup unitGroup() {
  constexpr std::size_t kCap = 1000;
  QuatUnitGroup g;
  g.generators = {HurwitzQuaternion::i(), HurwitzQuaternion::j(), HurwitzQuaternion::k(),
                  HurwitzQuaternion::omega()};
  std::unordered_map<std::string, std::size_t> seen;
  std::deque<std::size_t> queue;
  auto add = [&](const HurwitzQuaternion& q) {
    auto [it, inserted] = seen.emplace(q.key(), g.elements.size());
    if (inserted) {
      g.elements.push_back(q);
      queue.push_back(it->second);
    }
  };
  for (const auto& s : g.generators) add(s);
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators) {
      add(g.elements[idx] * s);
      if (g.elements.size() > kCap)
        throw std::runtime_error("unitGroup: closure exceeded safety cap");
    }
  }
  return g;
}

}  // namespace qlat
