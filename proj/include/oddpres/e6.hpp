#pragma once

// The E6 root system in simple-root coordinates, and a configuration of ten
// roots whose Gram matrix is the incidence matrix of the Petersen graph.
//
// Simple roots are numbered along the chain 1-2-3-4-5 with node 6 attached to
// node 3; the form is the Cartan matrix.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "oddpres/presentation.hpp"

namespace oddpres::e6 {

/// Coefficients of a root in the basis alpha_1..alpha_6.
using RootCoords = std::array<int, 6>;

struct E6RootSystem {
  std::array<std::array<int, 6>, 6> cartan{};
  std::vector<RootCoords> roots;  // sorted

  int form(const RootCoords& a, const RootCoords& b) const;
  bool contains(const RootCoords& r) const;
  /// Index into roots, or -1.
  int index_of(const RootCoords& r) const;
  /// s_beta(r) = r - (r, beta) beta.
  RootCoords reflect(const RootCoords& beta, const RootCoords& r) const;
};

/// Closure of the simple roots under the simple reflections: 72 roots.
E6RootSystem build_e6();

struct BetaConfiguration {
  std::vector<std::string> labels;  // Petersen node labels, same order as diagram_graph(petersen)
  std::vector<RootCoords> roots;

  const RootCoords& at(const std::string& label) const;
};

/// The ten roots beta_i, beta_jk.  std::domain_error if one of them is not a root.
BetaConfiguration beta_configuration(const E6RootSystem& system);

struct GramCheck {
  bool ok = false;
  std::vector<std::vector<int>> gram;
  int edge_entries = 0;      // unordered pairs with Gram 1
  int non_edge_entries = 0;  // unordered pairs with Gram 0
  std::string detail;        // first mismatching pair, if any
};

/// Compares the Gram matrix against Petersen adjacency: 2 on the diagonal,
/// 1 on edges, 0 on non-edges.
GramCheck verify_petersen_gram(const E6RootSystem& system, const BetaConfiguration& c);

struct HexagonSumCheck {
  bool ok = false;
  int hexagons = 0;
  std::vector<std::string> failures;  // hexagons with a nonzero sum
};

/// beta_a - beta_b + beta_c - beta_d + beta_e - beta_f for (a..f) a hexagon.
RootCoords alternating_sum(const BetaConfiguration& c, const presentation::Hexagon& h);

/// All free hexagons of the Petersen graph have vanishing alternating sums.
HexagonSumCheck verify_hexagon_sums(const BetaConfiguration& c);

/// Order of the permutation group on the 72 roots generated by the ten
/// reflections s_beta.  BudgetExceeded past the budget.
std::uint64_t verify_generation(const E6RootSystem& system, const BetaConfiguration& c,
                                std::size_t budget = 1'000'000);

std::string to_string(const RootCoords& r);

}  // namespace oddpres::e6
