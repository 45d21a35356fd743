#include "oddpres/gosset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oddpres::gosset {

using isometry::LatticeIsometry;
using isometry::ModularMatrix;

namespace {

void require_small_dimension(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("Gosset walls are defined for n = 2, 3, 4 only");
}

LatticeVector e(int n, int i) { return LatticeVector::basis(n, i); }

LatticeVector e0_minus(int n, int j, int k) { return e(n, 0) - e(n, j) - e(n, k); }

// A word in the simple reflections s_0..s_n, applied left to right.
using SimpleWord = std::vector<int>;

std::string word_string(const SimpleWord& w) {
  std::string out;
  for (int s : w) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(s);
  }
  return out;
}

LatticeIsometry evaluate(const SimpleWord& w, const std::vector<LatticeIsometry>& s, int n) {
  LatticeIsometry m = LatticeIsometry::identity(n);
  for (int i : w) m = m * s[i];
  return m;
}

// Conjugate w x w^-1 as a word, for w a product of involutions.
SimpleWord conjugate(const SimpleWord& w, const SimpleWord& x) {
  SimpleWord out = w;
  out.insert(out.end(), x.begin(), x.end());
  out.insert(out.end(), w.rbegin(), w.rend());
  return out;
}

std::vector<std::pair<std::string, SimpleWord>> wall_words(int n) {
  switch (n) {
    case 2:
      return {{"1", {1, 2, 1}}, {"2", {2}}, {"3", {0}}};
    case 3: {
      const SimpleWord r3 = {3};
      const SimpleWord r2 = conjugate({2}, r3);
      const SimpleWord r1 = conjugate({1}, r2);
      return {{"1", r1},
              {"2", r2},
              {"3", r3},
              {"4", conjugate({0}, r3)},
              {"5", conjugate({0}, r1)},
              {"6", conjugate({0}, r2)}};
    }
    default: {
      // beta_3 = s3(alpha_4), beta_12 = s0(beta_3); the rest by s1, s2, s3.
      const SimpleWord s4 = {4};
      return {{"1", conjugate({1, 2, 3}, s4)},
              {"2", conjugate({2, 3}, s4)},
              {"3", conjugate({3}, s4)},
              {"4", s4},
              {"12", conjugate({0, 3}, s4)},
              {"13", conjugate({2, 0, 3}, s4)},
              {"14", conjugate({3, 2, 0, 3}, s4)},
              {"23", conjugate({1, 2, 0, 3}, s4)},
              {"24", conjugate({3, 1, 2, 0, 3}, s4)},
              {"34", conjugate({2, 3, 1, 2, 0, 3}, s4)}};
    }
  }
}

}  // namespace

std::size_t GossetWallSystem::index_of(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::invalid_argument("unknown wall label " + label);
  return static_cast<std::size_t>(it - labels.begin());
}

GossetWallSystem gosset_walls(int n) {
  require_small_dimension(n);
  GossetWallSystem sys;
  sys.n = n;
  auto add = [&](std::string label, LatticeVector v) {
    sys.labels.push_back(std::move(label));
    sys.walls.emplace_back(std::move(v));
  };
  switch (n) {
    case 2:
      add("1", e(n, 1));
      add("2", e(n, 2));
      add("3", e0_minus(n, 1, 2));
      break;
    case 3:
      add("1", e(n, 1));
      add("2", e(n, 2));
      add("3", e(n, 3));
      add("4", e0_minus(n, 1, 2));
      add("5", e0_minus(n, 2, 3));
      add("6", e0_minus(n, 1, 3));
      break;
    default:
      for (int i = 1; i <= 4; ++i) add(std::to_string(i), e(n, i));
      for (int j = 1; j <= 4; ++j) {
        for (int k = j + 1; k <= 4; ++k) add(std::to_string(j) + std::to_string(k), e0_minus(n, j, k));
      }
  }
  for (const Root& r : sys.walls) {
    if (r.norm() != 1) throw std::logic_error("wall root of norm other than 1");
  }
  return sys;
}

bool GeneratorWordReport::passed() const {
  const bool words_ok = std::all_of(words.begin(), words.end(), [](const WordCheck& w) { return w.matches; });
  return words_ok && (n != 4 || (distinct_conjugates == 10 && conjugates_match_walls));
}

std::string GeneratorWordReport::failures() const {
  std::string out;
  for (const auto& w : words) {
    if (w.matches) continue;
    if (!out.empty()) out += ", ";
    out += w.label + " = " + w.word;
  }
  return out;
}

GeneratorWordReport verify_generator_words(int n) {
  const GossetWallSystem sys = gosset_walls(n);
  const auto s = isometry::simple_reflections(n);

  GeneratorWordReport report;
  report.n = n;
  for (const auto& [label, word] : wall_words(n)) {
    const auto want = isometry::reflection_matrix(sys.walls[sys.index_of(label)]);
    report.words.push_back({label, word_string(word), evaluate(word, s, n) == want});
  }

  if (n == 4) {
    const auto group = isometry::finite_group_elements(isometry::long_simple_reflections(n));
    std::set<std::vector<std::int64_t>> conjugates;
    for (std::uint32_t i = 0; i < group.order(); ++i) {
      const LatticeIsometry w = group.element(i);
      // Elements of a reflection group need not be involutions; invert via the
      // form: w^-1 = J w^T J.
      const int sz = w.size();
      std::vector<std::int64_t> inv(sz * sz);
      for (int r = 0; r < sz; ++r) {
        for (int c = 0; c < sz; ++c) {
          const int sign = (r == 0) == (c == 0) ? 1 : -1;
          inv[r * sz + c] = sign * w.at(c, r);
        }
      }
      const LatticeIsometry c = w * s[4] * LatticeIsometry(n, std::move(inv));
      conjugates.insert(std::vector<std::int64_t>(c.entries().begin(), c.entries().end()));
    }
    report.distinct_conjugates = conjugates.size();
    std::set<std::vector<std::int64_t>> walls;
    for (const Root& r : sys.walls) {
      const auto m = isometry::reflection_matrix(r);
      walls.insert(std::vector<std::int64_t>(m.entries().begin(), m.entries().end()));
    }
    report.conjugates_match_walls = conjugates == walls;
  }
  return report;
}

WallPairClassification wall_pair_classification(int n) {
  const GossetWallSystem sys = gosset_walls(n);
  const std::size_t k = sys.walls.size();
  WallPairClassification out;
  out.n = n;
  out.relation.assign(k, std::vector<WallRelation>(k, WallRelation::orthogonal));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const std::int64_t ip = lattice::inner(sys.walls[i].vector(), sys.walls[j].vector());
      if (ip == 0) {
        out.relation[i][j] = WallRelation::orthogonal;
      } else if (ip == 1 || ip == -1) {
        out.relation[i][j] = WallRelation::parallel;
      } else {
        throw std::domain_error("walls " + sys.labels[i] + " and " + sys.labels[j] +
                                " meet at a non-right angle (inner product " + std::to_string(ip) + ")");
      }
      if (i < j) {
        (out.relation[i][j] == WallRelation::orthogonal ? out.orthogonal_pairs : out.parallel_pairs)++;
      }
    }
  }
  return out;
}

VertexOrbitReport vertex_orbits(int n) {
  if (n != 3 && n != 4) throw std::invalid_argument("vertex orbits are computed for n = 3, 4");
  const auto group = isometry::finite_group_elements(isometry::long_simple_reflections(n));
  const auto v = lattice::chamber_vertices(n);

  std::set<LatticeVector> actual;
  std::set<LatticeVector> ideal;
  bool fixed = true;
  for (std::uint32_t i = 0; i < group.order(); ++i) {
    const LatticeIsometry w = group.element(i);
    actual.insert(w.apply(v[0]));
    ideal.insert(w.apply(v[1]));
    fixed = fixed && w.apply(v[n]) == v[n];
  }
  VertexOrbitReport out;
  out.n = n;
  out.group_order = group.order();
  out.actual_vertices.assign(actual.begin(), actual.end());
  out.ideal_vertices.assign(ideal.begin(), ideal.end());
  out.central_vertex_fixed = fixed;
  return out;
}

// ---------------------------------------------------------------------------
// Tessellation

bool TileGraph::is_symmetric() const {
  std::map<std::pair<std::uint32_t, std::uint32_t>, long> balance;
  for (const Edge& e : edges) {
    if (e.from == e.to) continue;
    balance[{std::min(e.from, e.to), std::max(e.from, e.to)}] += e.from < e.to ? 1 : -1;
  }
  return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
}

bool TileGraph::is_connected() const {
  if (tile_count == 0) return true;
  std::vector<char> seen(tile_count, 0);
  std::queue<std::uint32_t> q;
  q.push(0);
  seen[0] = 1;
  std::uint32_t reached = 1;
  while (!q.empty()) {
    const std::uint32_t t = q.front();
    q.pop();
    for (std::uint32_t w = 0; w < wall_labels.size(); ++w) {
      const std::uint32_t u = neighbor(t, w);
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        q.push(u);
      }
    }
  }
  return reached == tile_count;
}

std::uint64_t TileGraph::self_loop_count() const {
  return std::count_if(edges.begin(), edges.end(), [](const Edge& e) { return e.from == e.to; });
}

std::vector<std::uint32_t> TileGraph::distinct_neighbor_counts() const {
  std::vector<std::uint32_t> out(tile_count);
  for (std::uint32_t t = 0; t < tile_count; ++t) {
    std::set<std::uint32_t> nb;
    for (std::uint32_t w = 0; w < wall_labels.size(); ++w) nb.insert(neighbor(t, w));
    out[t] = static_cast<std::uint32_t>(nb.size());
  }
  return out;
}

std::vector<ModularMatrix> wall_reflections_mod3(int n) {
  std::vector<ModularMatrix> out;
  for (const Root& r : gosset_walls(n).walls) out.push_back(isometry::reduce_mod(isometry::reflection_matrix(r), 3));
  return out;
}

Tessellation build_tessellation(int n) {
  const GossetWallSystem sys = gosset_walls(n);

  std::vector<ModularMatrix> simple;
  for (const auto& s : isometry::simple_reflections(n)) simple.push_back(isometry::reduce_mod(s, 3));
  std::vector<ModularMatrix> stabilizer;
  for (const auto& s : isometry::long_simple_reflections(n)) stabilizer.push_back(isometry::reduce_mod(s, 3));

  const isometry::GroupClosure group = isometry::closure(simple);
  const isometry::CosetSpace cosets = isometry::coset_space(group, stabilizer);
  const std::vector<ModularMatrix> walls = wall_reflections_mod3(n);
  for (std::size_t i = 0; i < walls.size(); ++i) {
    if (!group.contains(walls[i])) {
      throw std::logic_error("wall reflection " + sys.labels[i] + " not in the mod-3 group");
    }
  }

  Tessellation out;
  out.group_order = group.order();
  out.projective_group_order = isometry::projective_order(group);
  out.stabilizer_image_order = cosets.subgroup_order;

  TileGraph& g = out.graph;
  g.n = n;
  g.tile_count = static_cast<std::uint32_t>(cosets.count);
  g.wall_labels = sys.labels;
  const auto k = static_cast<std::uint32_t>(walls.size());

  auto neighbor_tiles = [&](const ModularMatrix& rep) {
    std::vector<std::uint32_t> nb(k);
    for (std::uint32_t w = 0; w < k; ++w) nb[w] = cosets.coset_of[*group.index_of(rep * walls[w])];
    return nb;
  };

  std::vector<std::vector<std::uint32_t>> sorted_neighbors(g.tile_count);
  for (std::uint32_t t = 0; t < g.tile_count; ++t) {
    const auto nb = neighbor_tiles(group.element(cosets.representatives[t]));
    for (std::uint32_t w = 0; w < k; ++w) g.edges.push_back({t, w, nb[w]});
    sorted_neighbors[t] = nb;
    std::sort(sorted_neighbors[t].begin(), sorted_neighbors[t].end());
  }

  // Every representative of a tile must see the same neighbor multiset.
  for (std::uint32_t i = 0; i < group.order(); ++i) {
    auto nb = neighbor_tiles(group.element(i));
    std::sort(nb.begin(), nb.end());
    if (nb != sorted_neighbors[cosets.coset_of[i]]) {
      throw std::domain_error("tile adjacency depends on the coset representative (tile " +
                              std::to_string(cosets.coset_of[i]) + ")");
    }
  }
  out.representative_independent = true;
  return out;
}

std::string to_dot(const TileGraph& graph) {
  std::ostringstream os;
  os << "graph tessellation_n" << graph.n << " {\n";
  os << "  node [shape=circle];\n";
  for (std::uint32_t t = 0; t < graph.tile_count; ++t) os << "  t" << t << ";\n";
  // Each glued pair of wall slots is emitted once, from the lower-numbered tile.
  for (const auto& e : graph.edges) {
    if (e.from > e.to) continue;
    os << "  t" << e.from << " -- t" << e.to << " [label=\"" << graph.wall_labels[e.wall] << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace oddpres::gosset
