#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <queue>

#include "oddpres/gosset.hpp"
#include "oddpres/presentation.hpp"

namespace {

using namespace oddpres::presentation;
namespace gosset = oddpres::gosset;
namespace isometry = oddpres::isometry;
using oddpres::lattice::LatticeVector;
using oddpres::lattice::Root;

std::uint64_t brute_force_automorphisms(const DiagramGraph& g) {
  std::vector<int> p(g.node_count());
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < g.node_count() && ok; ++i) {
      for (int j = i + 1; j < g.node_count() && ok; ++j) ok = g.adjacent(i, j) == g.adjacent(p[i], p[j]);
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

int brute_force_induced_hexagons(const DiagramGraph& g) {
  const int n = g.node_count();
  int count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != 6) continue;
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) nodes.push_back(i);
    }
    bool two_regular = true;
    for (int a : nodes) {
      int d = 0;
      for (int b : nodes) d += a != b && g.adjacent(a, b);
      two_regular &= d == 2;
    }
    if (!two_regular) continue;
    // 2-regular on 6 nodes is a hexagon or two triangles.
    std::vector<int> seen{nodes[0]};
    for (std::size_t k = 0; k < seen.size(); ++k) {
      for (int b : nodes) {
        if (g.adjacent(seen[k], b) && std::find(seen.begin(), seen.end(), b) == seen.end()) seen.push_back(b);
      }
    }
    count += seen.size() == 6;
  }
  return count;
}

TEST(Presentation, DiagramsMatchHandDrawnGraphs) {
  const auto a3 = diagram_graph(DiagramKind::a3);
  EXPECT_EQ(a3.labels(), (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_TRUE(a3.adjacent(a3.index_of("1"), a3.index_of("3")));
  EXPECT_TRUE(a3.adjacent(a3.index_of("3"), a3.index_of("2")));
  EXPECT_FALSE(a3.adjacent(a3.index_of("1"), a3.index_of("2")));

  const auto hex = diagram_graph(DiagramKind::affine_a5);
  const std::vector<std::string> cycle{"1", "4", "2", "5", "3", "6"};
  for (int i = 0; i < 6; ++i) EXPECT_TRUE(hex.adjacent(hex.index_of(cycle[i]), hex.index_of(cycle[(i + 1) % 6])));
  EXPECT_EQ(hex.edge_count(), 6);

  const auto p = diagram_graph(DiagramKind::petersen);
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const std::string& a = p.label(i);
      const std::string& b = p.label(j);
      bool want = false;
      if (a.size() == 1 && b.size() == 2) want = b.find(a) != std::string::npos;
      if (a.size() == 2 && b.size() == 1) want = a.find(b) != std::string::npos;
      if (a.size() == 2 && b.size() == 2) want = a.find_first_of(b) == std::string::npos;
      EXPECT_EQ(p.adjacent(i, j), want) << a << " " << b;
    }
  }
}

TEST(Presentation, GramDiagramsEqualNamedDiagrams) {
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(diagram_from_gram(gosset::gosset_walls(n)), diagram_graph(kind_for_dimension(n)));
}

TEST(Presentation, AutomorphismOrdersAgainstBruteForce) {
  for (auto kind : {DiagramKind::a3, DiagramKind::affine_a5, DiagramKind::petersen}) {
    const auto g = diagram_graph(kind);
    EXPECT_EQ(diagram_automorphism_order(g), brute_force_automorphisms(g)) << to_string(kind);
  }
  EXPECT_EQ(diagram_automorphism_order(diagram_graph(DiagramKind::petersen)), 120u);
}

TEST(Presentation, PetersenInvariants) {
  const auto p = diagram_graph(DiagramKind::petersen);
  EXPECT_EQ(p.edge_count(), 15);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(p.degree(i), 3);
  EXPECT_EQ(girth(p), 5);
  EXPECT_EQ(girth(diagram_graph(DiagramKind::affine_a5)), 6);
  EXPECT_EQ(girth(diagram_graph(DiagramKind::a3)), std::nullopt);
  const auto hexes = free_hexagons(p);
  EXPECT_EQ(static_cast<int>(hexes.size()), brute_force_induced_hexagons(p));
  EXPECT_EQ(hexes.size(), 10u);
  EXPECT_TRUE(std::is_sorted(hexes.begin(), hexes.end()));
}

TEST(Presentation, CanonicalHexagonIsLeastOfTwelve) {
  const Hexagon h{3, 0, 4, 1, 5, 2};
  const auto c = canonical_hexagon(h);
  EXPECT_EQ(c, (Hexagon{0, 3, 2, 5, 1, 4}));
  Hexagon r = h;
  std::rotate(r.begin(), r.begin() + 2, r.end());
  EXPECT_EQ(canonical_hexagon(r), c);
  std::reverse(r.begin(), r.end());
  EXPECT_EQ(canonical_hexagon(r), c);
}

TEST(Presentation, RelatorCounts) {
  const auto a3 = build_presentation(DiagramKind::a3);
  EXPECT_EQ(std::tie(a3.involution_relators, a3.commuting_relators, a3.braid_relators, a3.deflation_relators),
            std::make_tuple(3, 1, 2, 0));
  const auto hex = build_presentation(DiagramKind::affine_a5);
  EXPECT_EQ(std::tie(hex.involution_relators, hex.commuting_relators, hex.braid_relators, hex.deflation_relators),
            std::make_tuple(6, 9, 6, 1));
  const auto p = build_presentation(DiagramKind::petersen);
  EXPECT_EQ(std::tie(p.involution_relators, p.commuting_relators, p.braid_relators, p.deflation_relators),
            std::make_tuple(10, 30, 15, 10));
  EXPECT_EQ(p.relators.size(), 65u);
  EXPECT_EQ(build_presentation(DiagramKind::petersen, false).relators.size(), 55u);
}

TEST(Presentation, DeflationWord) {
  const auto hex = build_presentation(DiagramKind::affine_a5);
  EXPECT_EQ(format_word(hex.diagram, hex.relators.back()), "1.4.2.5.3.6.3.5.2.4");
  EXPECT_EQ(hex.relators.back().size(), 10u);
  const auto g = diagram_graph(DiagramKind::affine_a5);
  EXPECT_THROW(deflation_relator(g, Hexagon{0, 1, 2, 3, 4, 5}), std::invalid_argument);
}

TEST(Presentation, RelatorsHoldOnWallReflectionsModThree) {
  for (int n = 2; n <= 4; ++n) {
    const auto p = build_presentation(kind_for_dimension(n));
    const auto walls = gosset::wall_reflections_mod3(n);
    const auto id = isometry::ModularMatrix::identity(n + 1, 3);
    for (const auto& w : p.relators) EXPECT_TRUE(evaluate_word(w, walls, id).is_identity()) << format_word(p.diagram, w);
  }
}

TEST(Presentation, DeflationIsNontrivialOverIntegers) {
  const auto p = build_presentation(DiagramKind::affine_a5);
  std::vector<isometry::LatticeIsometry> walls;
  for (const auto& r : gosset::gosset_walls(3).walls) walls.push_back(isometry::reflection_matrix(r));
  const auto m = evaluate_word(p.relators.back(), walls, isometry::LatticeIsometry::identity(3));
  EXPECT_FALSE(m.is_identity());
  EXPECT_TRUE(isometry::reduce_mod(m, 3).is_identity());
  // Over Z only involutions and commuting pairs close up: parallel walls
  // generate an infinite dihedral group, so braid relators need the reduction.
  int integral = 0;
  for (std::size_t k = 0; k + 1 < p.relators.size(); ++k) {
    integral += evaluate_word(p.relators[k], walls, isometry::LatticeIsometry::identity(3)).is_identity();
  }
  EXPECT_EQ(integral, p.involution_relators + p.commuting_relators);
}

TEST(Presentation, BraidIdentityWorkedExample) {
  const Root a(LatticeVector{0, 1, 0});
  const Root b(LatticeVector{1, -1, -1});
  const auto lambda = LatticeVector::basis(2, 0);
  EXPECT_TRUE(braid_identity_check(a, b, lambda));
  using oddpres::lattice::inner;
  using oddpres::lattice::reflect;
  const auto lhs = reflect(b, reflect(a, reflect(b, lambda))) - reflect(a, reflect(b, reflect(a, lambda)));
  EXPECT_EQ(lhs, 6 * inner(lambda, a.vector()) * a.vector() - 6 * inner(lambda, b.vector()) * b.vector());
  EXPECT_THROW(braid_identity_check(a, Root(LatticeVector{0, 0, 1}), lambda), std::invalid_argument);
}

TEST(Presentation, RelatorTextRoundTrip) {
  const auto p = build_presentation(DiagramKind::petersen);
  const auto parsed = parse_relator_text(to_relator_text(p));
  EXPECT_EQ(parsed.generators, p.diagram.labels());
  EXPECT_EQ(parsed.relators, p.relators);

  const auto loose = parse_relator_text("# comment\nb.b\n\na.a\na.b.a.b.a.b\n");
  EXPECT_EQ(loose.generators, (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(loose.relators.size(), 3u);
  EXPECT_EQ(loose.relators[2].letters, (std::vector<int>{1, 0, 1, 0, 1, 0}));

  EXPECT_THROW(parse_relator_text("# generators: a b\na.c\n"), std::invalid_argument);
  EXPECT_THROW(parse_relator_text("a..b\n"), std::invalid_argument);
}

TEST(Presentation, KindNames) {
  EXPECT_EQ(parse_kind("p10"), DiagramKind::petersen);
  EXPECT_EQ(parse_kind("i10"), DiagramKind::petersen);
  EXPECT_EQ(parse_kind("a5~"), DiagramKind::affine_a5);
  EXPECT_THROW(parse_kind("e8"), std::invalid_argument);
  EXPECT_THROW(DiagramGraph({"a", "a"}, {}), std::invalid_argument);
  EXPECT_THROW(DiagramGraph({"a", "b"}, {{0, 0}}), std::invalid_argument);
}

TEST(Presentation, DiagramDot) {
  const auto dot = to_dot(diagram_graph(DiagramKind::a3), "a3");
  EXPECT_EQ(dot, to_dot(diagram_graph(DiagramKind::a3), "a3"));
  EXPECT_NE(dot.find("\"1\" -- \"3\""), std::string::npos);
}

}  // namespace
