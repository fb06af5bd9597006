#include <catch2/catch_amalgamated.hpp>

#include "properties.hpp"
#include "qlat/lattice.hpp"
#include "qlat/quaternion.hpp"
#include "testutil.hpp"

using namespace qlat;

namespace {
using H = HurwitzQuaternion;
}

TEST_CASE("multiplication table", "[quaternion]") {
  CHECK(H::i() * H::j() == H::k());
  CHECK(H::j() * H::i() == -H::k());
  CHECK(H::j() * H::k() == H::i());
  CHECK(H::k() * H::i() == H::j());
  CHECK(H::i() * H::i() == -H::one());
  CHECK(H::i() * H::j() * H::k() == -H::one());
  H w = H::omega();
  CHECK(H::one() * w == w);
  CHECK(w * w * w == -H::one());  // omega^3 = -1
}

TEST_CASE("conjugate and norm", "[quaternion]") {
  CHECK(H::i().conjugate() == -H::i());
  CHECK(H::omega().norm() == 1);
  CHECK(H::fromIntegers(1, 1, 0, 0).norm() == 2);  // norm(1+i) = 2
  H q = H::fromIntegers(2, -1, 3, 0);
  CHECK(q * q.conjugate() == H::fromIntegers(q.norm(), 0, 0, 0));
}

TEST_CASE("parity invariant", "[quaternion]") {
  CHECK_THROWS_AS(H(1, 0, 0, 0), std::invalid_argument);
  CHECK_NOTHROW(H(1, 1, -1, 3));
  CHECK_NOTHROW(H(2, 0, -4, 6));
}

TEST_CASE("coordinate map", "[quaternion]") {
  auto ci = phiInverse(H::i());
  CHECK(ci == std::array<Dyadic, 4>{Dyadic(0), Dyadic(1), Dyadic(0), Dyadic(0)});
  auto cw = phiInverse(H::omega());
  Dyadic half(Int(1), 1);
  CHECK(cw == std::array<Dyadic, 4>{half, half, half, half});
  CHECK(phiInverse(H::one()) == std::array<Dyadic, 4>{Dyadic(1), Dyadic(0), Dyadic(0), Dyadic(0)});
}

TEST_CASE("unit group", "[quaternion]") {
  QuatUnitGroup g = unitGroup();
  REQUIRE(g.elements.size() == 24);
  std::size_t involutions = 0, integral = 0;
  for (const auto& u : g.elements) {
    CHECK(u.norm() == 1);
    if (u != H::one() && u * u == H::one()) ++involutions;
    bool isIntegral = !boost::multiprecision::bit_test(u.doubled(0), 0);
    if (isIntegral) ++integral;
  }
  CHECK(involutions == 1);  // only -1: the binary tetrahedral signature
  // element set: 8 signed unit vectors plus 16 all-half vectors
  CHECK(integral == 8);
  for (const auto& u : g.elements) {
    bool isIntegral = !boost::multiprecision::bit_test(u.doubled(0), 0);
    if (isIntegral) {
      int nonzero = 0;
      for (int t = 0; t < 4; ++t)
        if (u.doubled(t) != 0) ++nonzero;
      CHECK(nonzero == 1);
    } else {
      for (int t = 0; t < 4; ++t)
        CHECK(boost::multiprecision::abs(u.doubled(t)) == 1);
    }
  }
}

TEST_CASE("tau on generators", "[quaternion]") {
  // the (1,4) entry of tau(k) is -1
  CHECK(tau(H::k()).at(0, 3) == Dyadic(-1));
  CHECK(tau(H::i()) * tau(H::j()) == tau(H::k()));
  CHECK(tau(H::one()) == DyadicMatrix::identity(4));

  // tau(omega) = (I + tau(i) + tau(j) + tau(k)) / 2: all entries +-1/2
  DyadicMatrix tw = tau(H::omega());
  Dyadic half(Int(1), 1);
  CHECK(tw == half * (DyadicMatrix::identity(4) + tau(H::i()) + tau(H::j()) + tau(H::k())));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      CHECK((tw.at(r, c) == half || tw.at(r, c) == -half));

  // the +-1/2 matrix used alongside tau(i), tau(j) to generate the group
  // equals tau(omega^2), and generates the same 24-element group
  DyadicMatrix printed = DyadicMatrix::fromText(
      "4 4\n-1/2 1/2 1/2 -1/2\n-1/2 -1/2 -1/2 -1/2\n-1/2 1/2 -1/2 1/2\n1/2 1/2 -1/2 -1/2\n");
  CHECK(printed == tau(H::omega() * H::omega()));
}

TEST_CASE("tau is a homomorphism on the unit group", "[quaternion]") {
  auto elements = unitGroup().elements;
  for (const auto& a : elements)
    for (const auto& b : elements)
      REQUIRE(tau(a * b) == tau(a) * tau(b));
  for (const auto& u : elements) {
    DyadicMatrix m = tau(u);
    REQUIRE(m.isOrthogonal());
    REQUIRE(m.det() == Dyadic(1));
  }
}

TEST_CASE("unit coordinates span the F4 lattice", "[quaternion]") {
  std::vector<DyadicVector> coords;
  for (const auto& u : unitGroup().elements) {
    auto c = u.coordinates();
    coords.emplace_back(c.begin(), c.end());
  }
  CHECK(spanFromVectors(coords) == f4Lattice());
}

TEST_CASE("associativity and norm multiplicativity", "[quaternion][properties]") {
  CHECK(qtest::quaternionSuite() == 0);
}
