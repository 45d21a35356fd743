#pragma once

// The Gosset polytope P for n = 2, 3, 4: its wall roots, the words expressing
// the wall reflections in the simple reflections, wall-angle classification,
// vertex orbits, and the tessellation of the level-3 quotient by copies of P.

#include <cstdint>
#include <string>
#include <vector>

#include "oddpres/isometry.hpp"
#include "oddpres/lattice.hpp"

namespace oddpres::gosset {

using lattice::LatticeVector;
using lattice::Root;

/// Norm-one wall roots of P, one per node of its Coxeter diagram.
///   n=2: 1=e1, 2=e2, 3=e0-e1-e2
///   n=3: 1..3=e_i, 4=e0-e1-e2, 5=e0-e2-e3, 6=e0-e1-e3
///   n=4: i=e_i (1<=i<=4), jk=e0-e_j-e_k (1<=j<k<=4)
struct GossetWallSystem {
  int n = 0;
  std::vector<Root> walls;
  std::vector<std::string> labels;

  std::size_t index_of(const std::string& label) const;
};

/// Throws std::invalid_argument unless n is 2, 3 or 4.
GossetWallSystem gosset_walls(int n);

struct WordCheck {
  std::string label;   // wall label
  std::string word;    // e.g. "s1 s2 s1"
  bool matches = false;
};

struct GeneratorWordReport {
  int n = 0;
  std::vector<WordCheck> words;
  /// n = 4 only: number of distinct w s4 w^-1 over the finite stabilizer group.
  std::uint64_t distinct_conjugates = 0;
  bool conjugates_match_walls = false;

  bool passed() const;
  /// Labels of the words that failed, comma separated.
  std::string failures() const;
};

GeneratorWordReport verify_generator_words(int n);

enum class WallRelation { orthogonal, parallel };

struct WallPairClassification {
  int n = 0;
  /// relation[i][j] for i != j; the diagonal is meaningless.
  std::vector<std::vector<WallRelation>> relation;
  int orthogonal_pairs = 0;  // unordered pairs
  int parallel_pairs = 0;
};

/// Throws std::domain_error if two distinct walls have |inner| >= 2.
WallPairClassification wall_pair_classification(int n);

struct VertexOrbitReport {
  int n = 0;
  std::uint64_t group_order = 0;
  std::vector<LatticeVector> actual_vertices;  // orbit of v0
  std::vector<LatticeVector> ideal_vertices;   // orbit of v1
  bool central_vertex_fixed = false;           // v_n fixed by every element
};

/// Orbits of v0 and v1 under the stabilizer group, n in {3, 4}.
VertexOrbitReport vertex_orbits(int n);

/// Adjacency of tiles gP, g ranging over the cosets of the stabilizer image in
/// the projective mod-3 group, glued across wall i to g t_i P.
struct TileGraph {
  struct Edge {
    std::uint32_t from;
    std::uint32_t wall;  // index into wall_labels
    std::uint32_t to;
  };

  int n = 0;
  std::uint32_t tile_count = 0;
  std::vector<std::string> wall_labels;
  std::vector<Edge> edges;  // tile_count * wall_labels.size(), sorted by (from, wall)

  std::uint32_t neighbor(std::uint32_t tile, std::uint32_t wall) const {
    return edges[tile * wall_labels.size() + wall].to;
  }
  bool is_symmetric() const;
  bool is_connected() const;
  std::uint64_t self_loop_count() const;
  /// Number of distinct neighboring tiles of each tile.
  std::vector<std::uint32_t> distinct_neighbor_counts() const;
};

struct Tessellation {
  TileGraph graph;
  std::uint64_t group_order = 0;             // linear mod-3 closure
  std::uint64_t projective_group_order = 0;
  std::uint64_t stabilizer_image_order = 0;  // |image of stabilizer mod 3|
  bool representative_independent = false;
};

/// Throws std::domain_error if the neighbor multiset of a tile depends on the
/// chosen coset representative.
Tessellation build_tessellation(int n);

/// Mod-3 images of the wall reflections, in wall order.
std::vector<isometry::ModularMatrix> wall_reflections_mod3(int n);

std::string to_dot(const TileGraph& graph);

}  // namespace oddpres::gosset
