#include <gtest/gtest.h>

#include <random>

#include "oddpres/lattice.hpp"

namespace {

using oddpres::lattice::chamber_vertices;
using oddpres::lattice::inner;
using oddpres::lattice::LatticeVector;
using oddpres::lattice::norm;
using oddpres::lattice::reflect;
using oddpres::lattice::Root;
using oddpres::lattice::simple_roots;

LatticeVector random_vector(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-20, 20);
  std::vector<std::int64_t> c(n + 1);
  for (auto& x : c) x = d(rng);
  return LatticeVector(c);
}

TEST(Lattice, InnerProductSignature) {
  EXPECT_EQ(inner(LatticeVector::basis(3, 0), LatticeVector::basis(3, 0)), -1);
  EXPECT_EQ(inner(LatticeVector::basis(3, 2), LatticeVector::basis(3, 2)), 1);
  EXPECT_EQ(inner(LatticeVector::basis(3, 1), LatticeVector::basis(3, 2)), 0);
  EXPECT_EQ(norm(LatticeVector{1, -1, -1, -1, 0}), 2);
  EXPECT_EQ(norm(LatticeVector{3, -1, -1, -1, -1, -1, -1}), -3);
}

TEST(Lattice, DimensionMismatchThrows) {
  EXPECT_THROW(inner(LatticeVector::basis(3, 0), LatticeVector::basis(4, 0)), std::invalid_argument);
  EXPECT_THROW(LatticeVector({1, 2}), std::invalid_argument);
  EXPECT_THROW(simple_roots(9), std::invalid_argument);
  EXPECT_THROW(chamber_vertices(1), std::invalid_argument);
}

TEST(Lattice, RootNormValidated) {
  EXPECT_THROW(Root(LatticeVector{1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(Root(LatticeVector{0, 1, 1, 1}), std::invalid_argument);
  EXPECT_EQ(Root(LatticeVector{0, 1, -1}).norm(), 2);
  EXPECT_EQ(Root(LatticeVector{1, -1, -1}).norm(), 1);
}

TEST(Lattice, WorkedReflections) {
  EXPECT_EQ(reflect(Root(LatticeVector{0, 1, -1, 0, 0}), LatticeVector::basis(4, 1)), LatticeVector::basis(4, 2));
  const auto image = reflect(Root(LatticeVector{1, -1, -1}), LatticeVector::basis(2, 0));
  EXPECT_EQ(image, (LatticeVector{3, -2, -2}));
  EXPECT_EQ(image.to_string(), "3e0-2e1-2e2");
  EXPECT_EQ(LatticeVector::zero(3).to_string(), "0");
}

TEST(Lattice, ReflectionIsInvolutiveIsometry) {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 8; ++n) {
    for (const Root& r : simple_roots(n)) {
      EXPECT_EQ(reflect(r, r.vector()), -r.vector());
      for (int t = 0; t < 50; ++t) {
        const auto u = random_vector(rng, n);
        const auto v = random_vector(rng, n);
        EXPECT_EQ(reflect(r, reflect(r, u)), u);
        EXPECT_EQ(inner(reflect(r, u), reflect(r, v)), inner(u, v));
      }
    }
  }
}

TEST(Lattice, SimpleRootsMatchFormulas) {
  EXPECT_EQ(simple_roots(2)[0].vector(), (LatticeVector{1, -1, -1}));
  for (int n = 3; n <= 8; ++n) {
    const auto roots = simple_roots(n);
    ASSERT_EQ(roots.size(), static_cast<std::size_t>(n + 1));
    std::vector<std::int64_t> a0(n + 1, 0);
    a0[0] = 1;
    a0[1] = a0[2] = a0[3] = -1;
    EXPECT_EQ(roots[0].vector(), LatticeVector(a0));
    for (int i = 1; i < n; ++i) EXPECT_EQ(roots[i].vector(), LatticeVector::basis(n, i) - LatticeVector::basis(n, i + 1));
    EXPECT_EQ(roots[n].vector(), LatticeVector::basis(n, n));
  }
}

// Independent of the library: v_i is orthogonal to every simple root except
// alpha_i and pairs negatively with it, and v_1 alone is isotropic.
TEST(Lattice, ChamberVerticesAreDualToSimpleRoots) {
  for (int n = 2; n <= 8; ++n) {
    const auto roots = simple_roots(n);
    const auto verts = chamber_vertices(n);
    ASSERT_EQ(verts.size(), roots.size());
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        const auto ip = inner(verts[i], roots[j].vector());
        if (i == j) {
          EXPECT_LT(ip, 0) << "n=" << n << " i=" << i;
        } else {
          EXPECT_EQ(ip, 0) << "n=" << n << " i=" << i << " j=" << j;
        }
      }
      EXPECT_EQ(norm(verts[i]) == 0, i == 1);
      EXPECT_LE(norm(verts[i]), 0);
    }
  }
}

}  // namespace
