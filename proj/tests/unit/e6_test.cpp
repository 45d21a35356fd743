#include <gtest/gtest.h>

#include <algorithm>

#include "oddpres/e6.hpp"

namespace {

using namespace oddpres::e6;

TEST(E6, RootCountAgainstBoxSearch) {
  const auto sys = build_e6();
  // Every E6 root has coefficients in [-3, 3]; count norm-2 vectors directly.
  int count = 0;
  RootCoords r{};
  for (int i = 0; i < 7 * 7 * 7 * 7 * 7 * 7; ++i) {
    int x = i;
    for (auto& c : r) {
      c = x % 7 - 3;
      x /= 7;
    }
    if (sys.form(r, r) == 2) {
      ++count;
      EXPECT_TRUE(sys.contains(r)) << to_string(r);
    }
  }
  EXPECT_EQ(count, 72);
  EXPECT_EQ(sys.roots.size(), 72u);
}

TEST(E6, CartanAndHighestRoot) {
  const auto sys = build_e6();
  EXPECT_EQ(sys.cartan[2][5], -1);
  EXPECT_EQ(sys.cartan[4][5], 0);
  EXPECT_TRUE(sys.contains({1, 2, 3, 2, 1, 2}));
  EXPECT_FALSE(sys.contains({1, 2, 3, 2, 1, 3}));
  for (const auto& r : sys.roots) {
    for (int i = 0; i < 6; ++i) EXPECT_LE(r[i], (RootCoords{1, 2, 3, 2, 1, 2})[i]);
  }
  const RootCoords a1{1, 0, 0, 0, 0, 0};
  EXPECT_EQ(sys.reflect(a1, a1), (RootCoords{-1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(sys.index_of({9, 9, 9, 9, 9, 9}), -1);
}

TEST(E6, BetaConfiguration) {
  const auto sys = build_e6();
  const auto c = beta_configuration(sys);
  ASSERT_EQ(c.roots.size(), 10u);
  EXPECT_EQ(c.at("2"), (RootCoords{1, 2, 3, 2, 1, 2}));
  EXPECT_EQ(c.at("13"), (RootCoords{-1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(c.at("3"), (RootCoords{-1, -1, -1, -1, -1, 0}));
  for (const auto& b : c.roots) EXPECT_TRUE(sys.contains(b));
  EXPECT_EQ(c.labels, oddpres::presentation::diagram_graph(oddpres::presentation::DiagramKind::petersen).labels());
}

TEST(E6, GramIsPetersenIncidence) {
  const auto sys = build_e6();
  const auto c = beta_configuration(sys);
  const auto g = verify_petersen_gram(sys, c);
  EXPECT_TRUE(g.ok) << g.detail;
  EXPECT_EQ(g.edge_entries, 15);
  EXPECT_EQ(g.non_edge_entries, 30);
  const auto p = oddpres::presentation::diagram_graph(oddpres::presentation::DiagramKind::petersen);
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      EXPECT_EQ(sys.form(c.roots[i], c.roots[j]), i == j ? 2 : p.adjacent(i, j) ? 1 : 0);
    }
  }
  auto broken = c;
  broken.roots[3] = broken.roots[4];
  EXPECT_FALSE(verify_petersen_gram(sys, broken).ok);
}

TEST(E6, HexagonSumsVanishFromEveryStart) {
  const auto sys = build_e6();
  const auto c = beta_configuration(sys);
  EXPECT_TRUE(verify_hexagon_sums(c).ok);
  EXPECT_EQ(verify_hexagon_sums(c).hexagons, 10);
  const auto hexes = oddpres::presentation::free_hexagons(
      oddpres::presentation::diagram_graph(oddpres::presentation::DiagramKind::petersen));
  auto h = hexes.front();
  for (int flip = 0; flip < 2; ++flip) {
    for (int rot = 0; rot < 6; ++rot) {
      EXPECT_EQ(alternating_sum(c, h), (RootCoords{}));
      std::rotate(h.begin(), h.begin() + 1, h.end());
    }
    std::reverse(h.begin(), h.end());
  }
}

TEST(E6, ReflectionsGenerateWeylGroup) {
  const auto sys = build_e6();
  const auto c = beta_configuration(sys);
  EXPECT_EQ(verify_generation(sys, c), 51840u);
  // The five singleton reflections commute pairwise.
  for (const char* a : {"1", "2", "3", "4"}) {
    for (const char* b : {"1", "2", "3", "4"}) {
      if (std::string(a) != b) EXPECT_EQ(sys.form(c.at(a), c.at(b)), 0);
    }
  }
  // Each reflection fixes exactly the roots orthogonal to its beta.
  for (const auto& beta : c.roots) {
    for (const auto& r : sys.roots) EXPECT_EQ(sys.reflect(beta, r) == r, sys.form(beta, r) == 0);
  }
}

}  // namespace
