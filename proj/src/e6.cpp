#include "oddpres/e6.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "oddpres/element_store.hpp"

namespace oddpres::e6 {

int E6RootSystem::form(const RootCoords& a, const RootCoords& b) const {
  int acc = 0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) acc += a[i] * cartan[i][j] * b[j];
  }
  return acc;
}

int E6RootSystem::index_of(const RootCoords& r) const {
  const auto it = std::lower_bound(roots.begin(), roots.end(), r);
  return it != roots.end() && *it == r ? static_cast<int>(it - roots.begin()) : -1;
}

bool E6RootSystem::contains(const RootCoords& r) const { return index_of(r) >= 0; }

RootCoords E6RootSystem::reflect(const RootCoords& beta, const RootCoords& r) const {
  const int k = form(r, beta);
  RootCoords out;
  for (int i = 0; i < 6; ++i) out[i] = r[i] - k * beta[i];
  return out;
}

E6RootSystem build_e6() {
  E6RootSystem sys;
  for (int i = 0; i < 6; ++i) sys.cartan[i][i] = 2;
  const std::array<std::pair<int, int>, 5> bonds = {{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}};
  for (const auto& [a, b] : bonds) sys.cartan[a][b] = sys.cartan[b][a] = -1;

  std::set<RootCoords> seen;
  std::vector<RootCoords> frontier;
  for (int i = 0; i < 6; ++i) {
    RootCoords a{};
    a[i] = 1;
    seen.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<RootCoords> next;
    for (const RootCoords& r : frontier) {
      for (int i = 0; i < 6; ++i) {
        RootCoords a{};
        a[i] = 1;
        const RootCoords img = sys.reflect(a, r);
        if (seen.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  sys.roots.assign(seen.begin(), seen.end());
  return sys;
}

const RootCoords& BetaConfiguration::at(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::invalid_argument("unknown Petersen label " + label);
  return roots[it - labels.begin()];
}

BetaConfiguration beta_configuration(const E6RootSystem& system) {
  const std::vector<std::pair<std::string, RootCoords>> given = {
      {"13", {-1, 0, 0, 0, 0, 0}},
      {"1", {0, 1, 0, 0, 0, 0}},
      {"14", {0, 0, -1, 0, 0, 0}},
      {"4", {0, 0, 0, 1, 0, 0}},
      {"34", {0, 0, 0, 0, -1, 0}},
      {"23", {0, 0, 0, 0, 0, 1}},
      {"3", {-1, -1, -1, -1, -1, 0}},
      {"24", {0, 1, 2, 2, 1, 1}},
      {"2", {1, 2, 3, 2, 1, 2}},
      {"12", {1, 2, 2, 1, 0, 1}},
  };
  BetaConfiguration c;
  c.labels = presentation::diagram_graph(presentation::DiagramKind::petersen).labels();
  for (const auto& label : c.labels) {
    const auto it = std::find_if(given.begin(), given.end(), [&](const auto& p) { return p.first == label; });
    if (!system.contains(it->second)) {
      throw std::domain_error("beta_" + label + " = " + to_string(it->second) + " is not an E6 root");
    }
    c.roots.push_back(it->second);
  }
  return c;
}

GramCheck verify_petersen_gram(const E6RootSystem& system, const BetaConfiguration& c) {
  const auto petersen = presentation::diagram_graph(presentation::DiagramKind::petersen);
  GramCheck out;
  const int k = static_cast<int>(c.roots.size());
  out.gram.assign(k, std::vector<int>(k, 0));
  out.ok = k == petersen.node_count();
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int g = system.form(c.roots[i], c.roots[j]);
      out.gram[i][j] = g;
      const int want = i == j ? 2 : (petersen.adjacent(petersen.index_of(c.labels[i]), petersen.index_of(c.labels[j])) ? 1 : 0);
      if (g != want && out.ok) {
        out.ok = false;
        out.detail = "(" + c.labels[i] + ", " + c.labels[j] + ") has Gram " + std::to_string(g) + ", expected " +
                     std::to_string(want);
      }
      if (i < j) {
        out.edge_entries += g == 1;
        out.non_edge_entries += g == 0;
      }
    }
  }
  return out;
}

RootCoords alternating_sum(const BetaConfiguration& c, const presentation::Hexagon& h) {
  const auto petersen = presentation::diagram_graph(presentation::DiagramKind::petersen);
  RootCoords sum{};
  for (int i = 0; i < 6; ++i) {
    const RootCoords& b = c.at(petersen.label(h[i]));
    const int sign = i % 2 == 0 ? 1 : -1;
    for (int j = 0; j < 6; ++j) sum[j] += sign * b[j];
  }
  return sum;
}

HexagonSumCheck verify_hexagon_sums(const BetaConfiguration& c) {
  const auto petersen = presentation::diagram_graph(presentation::DiagramKind::petersen);
  HexagonSumCheck out;
  for (const auto& h : presentation::free_hexagons(petersen)) {
    ++out.hexagons;
    if (alternating_sum(c, h) != RootCoords{}) {
      std::string name;
      for (int v : h) name += (name.empty() ? "(" : ",") + petersen.label(v);
      out.failures.push_back(name + ")");
    }
  }
  out.ok = out.failures.empty() && out.hexagons > 0;
  return out;
}

std::uint64_t verify_generation(const E6RootSystem& system, const BetaConfiguration& c, std::size_t budget) {
  const std::size_t points = system.roots.size();
  std::vector<std::vector<std::uint8_t>> perms;
  for (const RootCoords& beta : c.roots) {
    std::vector<std::uint8_t> p(points);
    for (std::size_t i = 0; i < points; ++i) {
      const int j = system.index_of(system.reflect(beta, system.roots[i]));
      if (j < 0) throw std::logic_error("reflection left the root system");
      p[i] = static_cast<std::uint8_t>(j);
    }
    perms.push_back(std::move(p));
  }
  std::vector<std::uint8_t> id(points);
  for (std::size_t i = 0; i < points; ++i) id[i] = static_cast<std::uint8_t>(i);

  // x * g: first x, then g, as maps on root indices.
  auto step = [&](std::span<const std::uint8_t> x, std::size_t gi, std::span<std::uint8_t> out) {
    const auto& g = perms[gi];
    for (std::size_t i = 0; i < points; ++i) out[i] = g[x[i]];
  };
  return bfs_closure(id, perms.size(), step, budget).size();
}

std::string to_string(const RootCoords& r) {
  std::string out = "(";
  for (int i = 0; i < 6; ++i) out += (i ? "," : "") + std::to_string(r[i]);
  return out + ")";
}

}  // namespace oddpres::e6
