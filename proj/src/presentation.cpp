#include "oddpres/presentation.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oddpres::presentation {

using lattice::LatticeVector;
using lattice::Root;

std::string to_string(DiagramKind kind) {
  switch (kind) {
    case DiagramKind::a3:
      return "a3";
    case DiagramKind::affine_a5:
      return "affine_a5";
    case DiagramKind::petersen:
      return "petersen";
  }
  return "?";
}

DiagramKind parse_kind(const std::string& name) {
  if (name == "a3") return DiagramKind::a3;
  if (name == "affine_a5" || name == "a5~") return DiagramKind::affine_a5;
  if (name == "petersen" || name == "p10" || name == "i10") return DiagramKind::petersen;
  throw std::invalid_argument("unknown diagram kind: " + name);
}

DiagramKind kind_for_dimension(int n) {
  switch (n) {
    case 2:
      return DiagramKind::a3;
    case 3:
      return DiagramKind::affine_a5;
    case 4:
      return DiagramKind::petersen;
    default:
      throw std::invalid_argument("no Gosset diagram for n=" + std::to_string(n));
  }
}

// ---------------------------------------------------------------------------
// DiagramGraph

DiagramGraph::DiagramGraph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges)
    : labels_(std::move(labels)), adj_(labels_.size() * labels_.size(), 0) {
  const int n = node_count();
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size()) {
    throw std::invalid_argument("duplicate node label");
  }
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("diagram graphs have no loops");
    if (adj_[a * n + b]) throw std::invalid_argument("diagram graphs have no multi-edges");
    adj_[a * n + b] = adj_[b * n + a] = 1;
  }
}

int DiagramGraph::edge_count() const { return static_cast<int>(std::count(adj_.begin(), adj_.end(), 1)) / 2; }

int DiagramGraph::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("unknown node label: " + label);
  return static_cast<int>(it - labels_.begin());
}

int DiagramGraph::degree(int i) const {
  int d = 0;
  for (int j = 0; j < node_count(); ++j) d += adjacent(i, j);
  return d;
}

std::vector<int> DiagramGraph::neighbors(int i) const {
  std::vector<int> out;
  for (int j = 0; j < node_count(); ++j) {
    if (adjacent(i, j)) out.push_back(j);
  }
  return out;
}

std::vector<std::pair<int, int>> DiagramGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < node_count(); ++i) {
    for (int j = i + 1; j < node_count(); ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

DiagramGraph diagram_graph(DiagramKind kind) {
  switch (kind) {
    case DiagramKind::a3:
      // path 1 - 3 - 2
      return DiagramGraph({"1", "2", "3"}, {{0, 2}, {2, 1}});
    case DiagramKind::affine_a5:
      // hexagon 1 - 4 - 2 - 5 - 3 - 6 - 1
      return DiagramGraph({"1", "2", "3", "4", "5", "6"}, {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}});
    case DiagramKind::petersen:
      break;
  }
  // i ~ jk iff i in {j,k};  jk ~ lm iff {j,k} and {l,m} are disjoint.
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;  // (j,k) for the pair nodes, 1-based
  for (int i = 1; i <= 4; ++i) labels.push_back(std::to_string(i));
  for (int j = 1; j <= 4; ++j) {
    for (int k = j + 1; k <= 4; ++k) {
      labels.push_back(std::to_string(j) + std::to_string(k));
      pairs.emplace_back(j, k);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 4; ++i) {
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (pairs[p].first == i || pairs[p].second == i) edges.emplace_back(i - 1, 4 + static_cast<int>(p));
    }
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      const auto [a, b] = pairs[p];
      const auto [c, d] = pairs[q];
      if (a != c && a != d && b != c && b != d) {
        edges.emplace_back(4 + static_cast<int>(p), 4 + static_cast<int>(q));
      }
    }
  }
  return DiagramGraph(std::move(labels), edges);
}

DiagramGraph diagram_from_gram(const gosset::GossetWallSystem& walls) {
  const int k = static_cast<int>(walls.walls.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const std::int64_t ip = lattice::inner(walls.walls[i].vector(), walls.walls[j].vector());
      if (ip == -1) {
        edges.emplace_back(i, j);
      } else if (ip != 0) {
        throw std::domain_error("Gram entry " + std::to_string(ip) + " between walls " + walls.labels[i] +
                                " and " + walls.labels[j]);
      }
    }
  }
  return DiagramGraph(walls.labels, edges);
}

std::uint64_t diagram_automorphism_order(const DiagramGraph& g) {
  const int n = g.node_count();
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;

  std::function<void(int)> extend = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      extend(v + 1);
      used[w] = 0;
    }
  };
  extend(0);
  return count;
}

std::optional<int> girth(const DiagramGraph& g) {
  const int n = g.node_count();
  int best = -1;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<int> parent(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          const int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

Hexagon canonical_hexagon(const Hexagon& h) {
  Hexagon best = h;
  for (int dir = 0; dir < 2; ++dir) {
    for (int start = 0; start < 6; ++start) {
      Hexagon c;
      for (int i = 0; i < 6; ++i) c[i] = h[(start + (dir == 0 ? i : 6 - i)) % 6];
      best = std::min(best, c);
    }
  }
  return best;
}

std::vector<Hexagon> free_hexagons(const DiagramGraph& g) {
  const int n = g.node_count();
  std::set<Hexagon> found;
  Hexagon path{};

  std::function<void(int)> grow = [&](int depth) {
    if (depth == 6) {
      if (!g.adjacent(path[5], path[0])) return;
      for (int i = 0; i < 6; ++i) {
        for (int j = i + 2; j < 6; ++j) {
          if (i == 0 && j == 5) continue;
          if (g.adjacent(path[i], path[j])) return;  // chord
        }
      }
      found.insert(canonical_hexagon(path));
      return;
    }
    for (int w : g.neighbors(path[depth - 1])) {
      if (w <= path[0]) continue;
      if (std::find(path.begin(), path.begin() + depth, w) != path.begin() + depth) continue;
      path[depth] = w;
      grow(depth + 1);
    }
  };
  for (int s = 0; s < n; ++s) {
    path[0] = s;
    grow(1);
  }
  return {found.begin(), found.end()};
}

std::string format_word(const DiagramGraph& g, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += '.';
    out += g.label(w.letters[i]);
  }
  return out;
}

Word deflation_relator(const DiagramGraph& g, const Hexagon& h) {
  for (int i = 0; i < 6; ++i) {
    if (h[i] < 0 || h[i] >= g.node_count()) throw std::invalid_argument("hexagon node out of range");
  }
  if (std::set<int>(h.begin(), h.end()).size() != 6) throw std::invalid_argument("hexagon repeats a node");
  for (int i = 0; i < 6; ++i) {
    if (!g.adjacent(h[i], h[(i + 1) % 6])) {
      throw std::invalid_argument("not a 6-cycle: " + g.label(h[i]) + " and " + g.label(h[(i + 1) % 6]) +
                                  " are not joined");
    }
  }
  Word w;
  w.letters.assign(h.begin(), h.end());
  for (int i = 4; i >= 1; --i) w.letters.push_back(h[i]);
  return w;
}

Presentation build_presentation(DiagramKind kind, bool with_deflation) {
  Presentation p{diagram_graph(kind), {}};
  const int n = p.diagram.node_count();
  for (int i = 0; i < n; ++i) {
    p.relators.push_back({{i, i}});
    ++p.involution_relators;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (p.diagram.adjacent(i, j)) {
        p.relators.push_back({{i, j, i, j, i, j}});
        ++p.braid_relators;
      } else {
        p.relators.push_back({{i, j, i, j}});
        ++p.commuting_relators;
      }
    }
  }
  if (with_deflation) {
    for (const Hexagon& h : free_hexagons(p.diagram)) {
      p.relators.push_back(deflation_relator(p.diagram, h));
      ++p.deflation_relators;
    }
  }
  return p;
}

namespace {

template <class M>
M evaluate_impl(const Word& w, std::span<const M> assignment, const M& identity) {
  M acc = identity;
  for (int letter : w.letters) {
    if (letter < 0 || static_cast<std::size_t>(letter) >= assignment.size()) {
      throw std::invalid_argument("letter " + std::to_string(letter) + " has no assigned matrix");
    }
    acc = acc * assignment[letter];
  }
  return acc;
}

}  // namespace

isometry::ModularMatrix evaluate_word(const Word& w, std::span<const isometry::ModularMatrix> assignment,
                                      const isometry::ModularMatrix& identity) {
  return evaluate_impl(w, assignment, identity);
}

isometry::LatticeIsometry evaluate_word(const Word& w, std::span<const isometry::LatticeIsometry> assignment,
                                        const isometry::LatticeIsometry& identity) {
  return evaluate_impl(w, assignment, identity);
}

bool braid_identity_check(const Root& alpha, const Root& beta, const LatticeVector& lambda) {
  if (alpha.norm() != 1 || beta.norm() != 1) throw std::invalid_argument("braid identity needs norm-one roots");
  if (lattice::inner(alpha.vector(), beta.vector()) != -1) {
    throw std::invalid_argument("braid identity needs (alpha, beta) = -1");
  }
  using lattice::reflect;
  const LatticeVector bab = reflect(beta, reflect(alpha, reflect(beta, lambda)));
  const LatticeVector aba = reflect(alpha, reflect(beta, reflect(alpha, lambda)));
  const LatticeVector rhs = (6 * lattice::inner(lambda, alpha.vector())) * alpha.vector() -
                            (6 * lattice::inner(lambda, beta.vector())) * beta.vector();
  return bab - aba == rhs;
}

// ---------------------------------------------------------------------------
// Text formats

std::string to_relator_text(const Presentation& p) {
  std::ostringstream os;
  os << "# generators:";
  for (const auto& l : p.diagram.labels()) os << ' ' << l;
  os << '\n';
  for (const Word& w : p.relators) os << format_word(p.diagram, w) << '\n';
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

RelatorFile parse_relator_text(const std::string& text) {
  RelatorFile out;
  bool declared = false;
  std::vector<std::vector<std::string>> raw;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(line.substr(1));
      const std::string key = "generators:";
      if (body.rfind(key, 0) == 0) {
        if (declared) throw std::invalid_argument("duplicate generators header");
        declared = true;
        std::istringstream gs(body.substr(key.size()));
        for (std::string g; gs >> g;) out.generators.push_back(g);
        if (std::set<std::string>(out.generators.begin(), out.generators.end()).size() !=
            out.generators.size()) {
          throw std::invalid_argument("duplicate generator in header");
        }
      }
      continue;
    }
    std::vector<std::string> letters;
    std::size_t start = 0;
    while (true) {
      const auto dot = line.find('.', start);
      const std::string tok = trim(line.substr(start, dot == std::string::npos ? std::string::npos : dot - start));
      if (tok.empty()) throw std::invalid_argument("empty letter on line " + std::to_string(line_no));
      letters.push_back(tok);
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
    raw.push_back(std::move(letters));
  }

  for (const auto& letters : raw) {
    Word w;
    for (const auto& l : letters) {
      auto it = std::find(out.generators.begin(), out.generators.end(), l);
      if (it == out.generators.end()) {
        if (declared) throw std::invalid_argument("letter '" + l + "' not among declared generators");
        out.generators.push_back(l);
        it = out.generators.end() - 1;
      }
      w.letters.push_back(static_cast<int>(it - out.generators.begin()));
    }
    out.relators.push_back(std::move(w));
  }
  return out;
}

std::string to_dot(const DiagramGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  node [shape=circle];\n";
  for (int i = 0; i < g.node_count(); ++i) os << "  \"" << g.label(i) << "\";\n";
  for (const auto& [a, b] : g.edges()) os << "  \"" << g.label(a) << "\" -- \"" << g.label(b) << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace oddpres::presentation
