#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oddpres/gosset.hpp"
#include "oddpres/isometry.hpp"

namespace {

using namespace oddpres;
using gosset::gosset_walls;
using lattice::inner;
using lattice::LatticeVector;

TEST(Gosset, WallRootsAreNormOneAndLabeled) {
  const std::vector<std::size_t> counts{3, 6, 10};
  for (int n = 2; n <= 4; ++n) {
    const auto sys = gosset_walls(n);
    ASSERT_EQ(sys.walls.size(), counts[n - 2]);
    ASSERT_EQ(sys.labels.size(), sys.walls.size());
    for (const auto& w : sys.walls) EXPECT_EQ(w.norm(), 1);
  }
  const auto four = gosset_walls(4);
  EXPECT_EQ(four.walls[four.index_of("13")].vector(), (LatticeVector{1, -1, 0, -1, 0}));
  EXPECT_EQ(four.walls[four.index_of("4")].vector(), LatticeVector::basis(4, 4));
  EXPECT_THROW(four.index_of("15"), std::invalid_argument);
  EXPECT_THROW(gosset_walls(5), std::invalid_argument);
}

TEST(Gosset, WallPairsAreRightAngledOrParallel) {
  for (int n = 2; n <= 4; ++n) {
    const auto sys = gosset_walls(n);
    const auto c = gosset::wall_pair_classification(n);
    int orth = 0, par = 0;
    for (std::size_t i = 0; i < sys.walls.size(); ++i) {
      for (std::size_t j = i + 1; j < sys.walls.size(); ++j) {
        const auto ip = inner(sys.walls[i].vector(), sys.walls[j].vector());
        ASSERT_TRUE(ip == 0 || ip == -1);
        (ip == 0 ? orth : par)++;
        EXPECT_EQ(c.relation[i][j], ip == 0 ? gosset::WallRelation::orthogonal : gosset::WallRelation::parallel);
      }
    }
    EXPECT_EQ(c.orthogonal_pairs, orth);
    EXPECT_EQ(c.parallel_pairs, par);
  }
  EXPECT_EQ(gosset::wall_pair_classification(2).orthogonal_pairs, 1);
  EXPECT_EQ(gosset::wall_pair_classification(2).parallel_pairs, 2);
}

TEST(Gosset, TriangleWordByHand) {
  // s1 s2 s1 is the reflection in s1(e2) = e1.
  const auto s = isometry::simple_reflections(2);
  EXPECT_EQ(s[1] * s[2] * s[1], isometry::reflection_matrix(lattice::Root(LatticeVector::basis(2, 1))));
  EXPECT_EQ(s[0], isometry::reflection_matrix(gosset_walls(2).walls[2]));
}

TEST(Gosset, GeneratorWordsVerify) {
  for (int n = 2; n <= 4; ++n) {
    const auto r = gosset::verify_generator_words(n);
    EXPECT_TRUE(r.passed()) << r.failures();
    EXPECT_EQ(r.words.size(), gosset_walls(n).walls.size());
  }
  const auto four = gosset::verify_generator_words(4);
  EXPECT_EQ(four.distinct_conjugates, 10u);
  EXPECT_TRUE(four.conjugates_match_walls);
}

TEST(Gosset, VertexOrbitsAgainstDirectOrbit) {
  const auto r = gosset::vertex_orbits(4);
  EXPECT_EQ(r.group_order, 120u);
  EXPECT_EQ(r.actual_vertices.size(), 5u);
  EXPECT_EQ(r.ideal_vertices.size(), 5u);
  EXPECT_TRUE(r.central_vertex_fixed);

  const auto group = isometry::finite_group_elements(isometry::long_simple_reflections(4));
  std::set<LatticeVector> orbit;
  for (std::uint32_t i = 0; i < group.order(); ++i) orbit.insert(group.element(i).apply(LatticeVector::basis(4, 0)));
  EXPECT_EQ(orbit, std::set<LatticeVector>(r.actual_vertices.begin(), r.actual_vertices.end()));
  for (const auto& v : r.ideal_vertices) EXPECT_EQ(lattice::norm(v), 0);

  const auto three = gosset::vertex_orbits(3);
  EXPECT_EQ(three.actual_vertices.size(), 2u);
  EXPECT_EQ(three.ideal_vertices.size(), 3u);
  EXPECT_THROW(gosset::vertex_orbits(2), std::invalid_argument);
}

// Oracle: |projective closure of all simple reflections| / |projective image
// of the long ones|, with both closures computed by a plain set.
std::uint64_t projective_size(const std::vector<isometry::LatticeIsometry>& gens) {
  std::vector<isometry::ModularMatrix> mods;
  for (const auto& g : gens) mods.push_back(isometry::reduce_mod(g, 3));
  auto key = [](const isometry::ModularMatrix& m) {
    std::vector<std::uint8_t> a(m.bytes().begin(), m.bytes().end());
    const auto neg = m.negated();
    std::vector<std::uint8_t> b(neg.bytes().begin(), neg.bytes().end());
    return std::min(a, b);
  };
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<isometry::ModularMatrix> frontier{isometry::ModularMatrix::identity(mods[0].size(), 3)};
  seen.insert(key(frontier[0]));
  while (!frontier.empty()) {
    std::vector<isometry::ModularMatrix> next;
    for (const auto& m : frontier) {
      for (const auto& g : mods) {
        auto p = m * g;
        if (seen.insert(key(p)).second) next.push_back(p);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

TEST(Gosset, TileCountsAgainstIndexOracle) {
  const std::vector<std::uint32_t> tiles{12, 60, 432};
  for (int n = 2; n <= 4; ++n) {
    const auto t = gosset::build_tessellation(n);
    EXPECT_EQ(t.graph.tile_count, tiles[n - 2]);
    const auto oracle = projective_size(isometry::simple_reflections(n)) /
                        projective_size(isometry::long_simple_reflections(n));
    EXPECT_EQ(t.graph.tile_count, oracle);
    EXPECT_TRUE(t.representative_independent);
  }
}

TEST(Gosset, TileGraphShape) {
  for (int n = 2; n <= 4; ++n) {
    const auto g = gosset::build_tessellation(n).graph;
    EXPECT_TRUE(g.is_connected());
    EXPECT_TRUE(g.is_symmetric());
    EXPECT_EQ(g.wall_labels, gosset_walls(n).labels);
    ASSERT_EQ(g.edges.size(), static_cast<std::size_t>(g.tile_count) * g.wall_labels.size());
    EXPECT_TRUE(std::is_sorted(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
      return std::tie(a.from, a.wall) < std::tie(b.from, b.wall);
    }));
    for (const auto& e : g.edges) EXPECT_LT(e.to, g.tile_count);
  }
}

TEST(Gosset, DotExportIsDeterministic) {
  const auto a = gosset::to_dot(gosset::build_tessellation(2).graph);
  const auto b = gosset::to_dot(gosset::build_tessellation(2).graph);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("graph tessellation_n2 {", 0), 0u);
  EXPECT_NE(a.find("t11"), std::string::npos);
  EXPECT_EQ(a.find("t12"), std::string::npos);
}

}  // namespace
