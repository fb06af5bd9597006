#include <catch2/catch_amalgamated.hpp>

#include "properties.hpp"
#include "qlat/lattice.hpp"
#include "qlat/quaternion.hpp"
#include "qlat/tensor.hpp"
#include "testutil.hpp"

using namespace qlat;

namespace {
const Lattice& f4() {
  static const Lattice l = f4Lattice();
  return l;
}
const Lattice& bw16() {
  static const Lattice l = bw16Lattice();
  return l;
}
}  // namespace

TEST_CASE("stored bases", "[lattice]") {
  Dyadic half(Int(1), 1), quarter(Int(1), 2);
  DyadicVector r0 = f4().basis().row(0);
  CHECK(r0 == DyadicVector{half, half, half, half});
  CHECK(f4().basis().det() == half);
  CHECK(f4().gram().det() == quarter);

  // row 8 of the Barnes-Wall basis is a standard unit vector
  DyadicVector r7 = bw16().basis().row(7);
  for (std::size_t c = 0; c < 16; ++c) CHECK(r7[c] == (c == 7 ? Dyadic(1) : Dyadic(0)));
  // the first row is all quarters
  for (const Dyadic& x : bw16().basis().row(0)) CHECK(x == quarter);
  CHECK(bw16().basis().det() == Dyadic(Int(1), 12));
}

TEST_CASE("construction guards", "[lattice]") {
  DyadicMatrix rect(2, 3);
  CHECK_THROWS_AS(Lattice(rect), std::invalid_argument);
  DyadicMatrix singular(2, 2);
  singular.at(0, 0) = Dyadic(1);
  singular.at(1, 0) = Dyadic(1);
  CHECK_THROWS_AS(Lattice(singular), std::invalid_argument);
}

TEST_CASE("membership", "[lattice]") {
  for (std::size_t r = 0; r < 16; ++r) CHECK(bw16().member(bw16().basis().row(r)));

  // (1,0,0,0) = 2*r1 - r2 - r3 - r4 in the F4 basis
  DyadicVector e0{Dyadic(1), Dyadic(0), Dyadic(0), Dyadic(0)};
  CHECK(f4().member(e0));

  DyadicVector quarterE0(16, Dyadic(0));
  quarterE0[0] = Dyadic(Int(1), 2);
  CHECK_FALSE(bw16().member(quarterE0));

  DyadicVector unitE0(16, Dyadic(0));
  unitE0[0] = Dyadic(1);
  CHECK(bw16().member(unitE0));

  CHECK_THROWS_AS(f4().member(unitE0), std::invalid_argument);  // wrong length
}

TEST_CASE("membership is additive and automorphism-stable", "[lattice]") {
  qtest::Rng rng(7);
  const auto& gens = autGenerators();
  for (int t = 0; t < 25; ++t) {
    // random lattice members: random integer combinations of basis rows
    DyadicVector v(16), w(16);
    for (std::size_t r = 0; r < 16; ++r) {
      Dyadic cv{Int(qtest::randInt(rng, -3, 3))}, cw{Int(qtest::randInt(rng, -3, 3))};
      for (std::size_t c = 0; c < 16; ++c) {
        v[c] += cv * bw16().basis().at(r, c);
        w[c] += cw * bw16().basis().at(r, c);
      }
    }
    REQUIRE(bw16().member(v));
    REQUIRE(bw16().member(w));
    DyadicVector sum(16);
    for (std::size_t c = 0; c < 16; ++c) sum[c] = v[c] + w[c];
    REQUIRE(bw16().member(sum));
    const DyadicMatrix& g = gens[static_cast<std::size_t>(t) % 7];
    REQUIRE(bw16().member(vecMat(v, g.transpose())));
  }
}

TEST_CASE("shortest vectors of simple lattices", "[lattice]") {
  Lattice z2{DyadicMatrix::identity(2)};
  ShortVectorSet s = z2.shortestVectors();
  CHECK(s.norm == Dyadic(1));
  CHECK(s.count == 4);

  ShortVectorSet f = f4().shortestVectors();
  CHECK(f.norm == Dyadic(1));
  CHECK(f.count == 24);

  // the 24 minimal vectors are exactly the unit-quaternion coordinates
  std::vector<DyadicVector> unitCoords;
  for (const auto& u : unitGroup().elements) {
    auto c = u.coordinates();
    unitCoords.emplace_back(c.begin(), c.end());
  }
  std::sort(unitCoords.begin(), unitCoords.end(),
            [](const DyadicVector& a, const DyadicVector& b) {
              return compareVectors(a, b) < 0;
            });
  CHECK(f.vectors == unitCoords);
}

TEST_CASE("negation closure of shells", "[lattice]") {
  ShortVectorSet f = f4().shortestVectors();
  for (const auto& v : f.vectors) {
    DyadicVector neg(v.size());
    for (std::size_t c = 0; c < v.size(); ++c) neg[c] = -v[c];
    CHECK(std::binary_search(f.vectors.begin(), f.vectors.end(), neg,
                             [](const DyadicVector& a, const DyadicVector& b) {
                               return compareVectors(a, b) < 0;
                             }));
  }
  CHECK(f.count % 2 == 0);
}

TEST_CASE("automorphism tests", "[lattice]") {
  CHECK(bw16().isAutomorphism(DyadicMatrix::identity(16)));
  for (const auto& g : autGenerators()) CHECK(bw16().isAutomorphism(g));

  // a single coordinate sign flip does not preserve this frame
  DyadicMatrix flip = DyadicMatrix::identity(16);
  flip.at(0, 0) = Dyadic(-1);
  CHECK_FALSE(bw16().isAutomorphism(flip));

  DyadicMatrix shear = DyadicMatrix::identity(16);
  shear.at(0, 1) = Dyadic(1);
  CHECK_THROWS_AS(bw16().isAutomorphism(shear), std::invalid_argument);
}

TEST_CASE("automorphisms compose", "[lattice]") {
  const auto& g = autGenerators();
  CHECK(bw16().isAutomorphism(g[0] * g[1]));
  CHECK(bw16().isAutomorphism(g[2].transpose()));
  CHECK(bw16().isAutomorphism(g[4] * g[6] * g[0]));
}

TEST_CASE("span from vectors", "[lattice]") {
  std::vector<DyadicVector> unitVecs;
  for (std::size_t t = 0; t < 4; ++t) {
    DyadicVector v(4);
    v[t] = Dyadic(1);
    unitVecs.push_back(v);
  }
  Lattice z4 = spanFromVectors(unitVecs);
  CHECK(z4 == Lattice(DyadicMatrix::identity(4)));

  std::vector<DyadicVector> coords;
  for (const auto& u : unitGroup().elements) {
    auto c = u.coordinates();
    coords.emplace_back(c.begin(), c.end());
  }
  CHECK(spanFromVectors(coords) == f4());

  std::vector<DyadicVector> deficient{unitVecs[0], unitVecs[1]};
  CHECK_THROWS_AS(spanFromVectors(deficient), std::invalid_argument);
}

TEST_CASE("scaled lattice comparison", "[lattice]") {
  Lattice doubled = f4().scaled(Dyadic(2));
  CHECK(doubled != f4());
  CHECK(doubled == Lattice(Dyadic(2) * f4().basis()));
}

TEST_CASE("enumeration agrees with the box oracle", "[lattice][properties]") {
  CHECK(qtest::shortestVectorOracleSuite() == 0);
}
