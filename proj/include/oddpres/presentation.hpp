#pragma once

// Simply laced Coxeter diagrams (A3, affine A5, Petersen), their braid and
// deflation relators, and evaluation of words in matrix groups.
//
// The Petersen diagram is written I_10 in some sources and P_10 in others;
// here it is DiagramKind::petersen throughout.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddpres/gosset.hpp"
#include "oddpres/isometry.hpp"
#include "oddpres/lattice.hpp"

namespace oddpres::presentation {

enum class DiagramKind { a3, affine_a5, petersen };

std::string to_string(DiagramKind kind);
/// "a3", "affine_a5"/"a5~", "petersen"/"p10"/"i10"; std::invalid_argument otherwise.
DiagramKind parse_kind(const std::string& name);
/// The diagram of the wall reflections of the Gosset polytope for n = 2, 3, 4.
DiagramKind kind_for_dimension(int n);

/// Simple graph on labeled nodes.  Node order is the declaration order and is
/// what "index" means everywhere below.
class DiagramGraph {
 public:
  DiagramGraph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges);

  int node_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const;
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  /// std::invalid_argument for an unknown label.
  int index_of(const std::string& label) const;

  bool adjacent(int i, int j) const { return adj_[i * node_count() + j] != 0; }
  int degree(int i) const;
  std::vector<int> neighbors(int i) const;
  /// Edges as index pairs (i < j), sorted.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const DiagramGraph&, const DiagramGraph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<char> adj_;
};

DiagramGraph diagram_graph(DiagramKind kind);

/// Edge between walls i and j iff (beta_i, beta_j) = -1.  std::domain_error if
/// an off-diagonal inner product is outside {0, -1}.
DiagramGraph diagram_from_gram(const gosset::GossetWallSystem& walls);

/// Order of the automorphism group, by backtracking over label permutations.
std::uint64_t diagram_automorphism_order(const DiagramGraph& g);

/// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const DiagramGraph& g);

/// An induced 6-cycle as node indices in cyclic order.
using Hexagon = std::array<int, 6>;

/// All induced 6-cycles, each once, in canonical form (lexicographically least
/// of its 12 rotations and reflections), sorted.
std::vector<Hexagon> free_hexagons(const DiagramGraph& g);
Hexagon canonical_hexagon(const Hexagon& h);

/// A word in the involutive generators t_i; letters are node indices.
struct Word {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// Letters as labels joined by dots, e.g. "1.4.2.5.3.6.3.5.2.4".
std::string format_word(const DiagramGraph& g, const Word& w);

/// a b c d e f e d c b for the hexagon (a, b, c, d, e, f).  std::invalid_argument
/// if the hexagon is not a 6-cycle of g.
Word deflation_relator(const DiagramGraph& g, const Hexagon& hexagon);

struct Presentation {
  DiagramGraph diagram;
  std::vector<Word> relators;
  int involution_relators = 0;
  int commuting_relators = 0;
  int braid_relators = 0;
  int deflation_relators = 0;

  int generator_count() const { return diagram.node_count(); }
};

/// t_i^2, (t_i t_j)^2 for non-edges, (t_i t_j)^3 for edges, and one deflation
/// relator per free hexagon (at its canonical representative) when requested.
Presentation build_presentation(DiagramKind kind, bool with_deflation = true);

/// Left-to-right product of the assigned matrices, starting from identity.
/// std::invalid_argument if a letter has no assignment.
isometry::ModularMatrix evaluate_word(const Word& w, std::span<const isometry::ModularMatrix> assignment,
                                      const isometry::ModularMatrix& identity);
isometry::LatticeIsometry evaluate_word(const Word& w, std::span<const isometry::LatticeIsometry> assignment,
                                        const isometry::LatticeIsometry& identity);

/// Checks (s_b s_a s_b - s_a s_b s_a) lambda = 6 (lambda, a) a - 6 (lambda, b) b
/// exactly.  Requires a, b of norm one with (a, b) = -1 (std::invalid_argument).
bool braid_identity_check(const lattice::Root& alpha, const lattice::Root& beta,
                          const lattice::LatticeVector& lambda);

// ---------------------------------------------------------------------------
// Relator interchange text format:
//
//   # comment lines start with '#'
//   # generators: 1 2 3 4 12 13 14 23 24 34
//   1.1
//   1.2.1.2
//   ...
//
// One relator per line, letters are generator labels separated by dots.  The
// generators header is optional; without it generators are taken in order of
// first appearance.

struct RelatorFile {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // letters index into generators
};

std::string to_relator_text(const Presentation& p);
/// std::invalid_argument on malformed input or letters missing from the header.
RelatorFile parse_relator_text(const std::string& text);

std::string to_dot(const DiagramGraph& g, const std::string& name);

}  // namespace oddpres::presentation
