#include "oddpres/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "oddpres/coset_enum.hpp"
#include "oddpres/e6.hpp"
#include "oddpres/eisenstein.hpp"
#include "oddpres/gosset.hpp"
#include "oddpres/isometry.hpp"
#include "oddpres/lattice.hpp"
#include "oddpres/presentation.hpp"

namespace oddpres::verify {

using nlohmann::json;

namespace {

struct Outcome {
  json actual;
  std::string details;
};

class Runner {
 public:
  template <class Fn>
  void check(std::string id, std::optional<int> n, json expected, Fn&& fn) {
    CheckReport r;
    r.check_id = std::move(id);
    r.n = n;
    r.expected = std::move(expected);
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = to_outcome(fn());
      r.actual = std::move(o.actual);
      r.details = std::move(o.details);
      r.status = r.actual == r.expected ? CheckStatus::pass : CheckStatus::fail;
    } catch (const std::exception& e) {
      r.actual = nullptr;
      r.status = CheckStatus::error;
      r.details = e.what();
    }
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    reports_.push_back(std::move(r));
  }

  void skip(std::string id, std::optional<int> n, std::string why) {
    CheckReport r;
    r.check_id = std::move(id);
    r.n = n;
    r.status = CheckStatus::skipped;
    r.details = std::move(why);
    reports_.push_back(std::move(r));
  }

  std::vector<CheckReport>& reports() { return reports_; }

 private:
  static Outcome to_outcome(Outcome o) { return o; }
  static Outcome to_outcome(json j) { return {std::move(j), {}}; }

  std::vector<CheckReport> reports_;
};

std::vector<int> gosset_dimensions(const SuiteOptions& o) {
  if (o.n) return {*o.n};
  return {2, 3, 4};
}

using lattice::LatticeVector;
using lattice::Root;

LatticeVector vec(std::initializer_list<std::int64_t> c) { return LatticeVector(c); }

// ---------------------------------------------------------------------------

void lattice_suite(Runner& run, const SuiteOptions& o) {
  run.check("inner_e0_e0", std::nullopt, -1, [] { return json(lattice::inner(LatticeVector::basis(4, 0), LatticeVector::basis(4, 0))); });
  run.check("inner_alpha0_alpha0", std::nullopt, 2, [] {
    const auto a = vec({1, -1, -1, -1, 0});
    return json(lattice::inner(a, a));
  });
  run.check("reflect_e1_minus_e2_on_e1", std::nullopt, "e2", [] {
    return json(lattice::reflect(Root(vec({0, 1, -1, 0, 0})), LatticeVector::basis(4, 1)).to_string());
  });
  run.check("reflect_e0_minus_e1_minus_e2_on_e0", std::nullopt, "3e0-2e1-2e2", [] {
    return json(lattice::reflect(Root(vec({1, -1, -1})), LatticeVector::basis(2, 0)).to_string());
  });

  for (int n = lattice::kMinDimension; n <= lattice::kMaxDimension; ++n) {
    std::vector<int> want_norms(n + 1, 2);
    want_norms.back() = 1;
    if (n == 2) want_norms.front() = 1;
    run.check("simple_root_norms", n, want_norms, [n] {
      std::vector<int> norms;
      for (const Root& r : lattice::simple_roots(n)) norms.push_back(r.norm());
      return json(norms);
    });
    run.check("chamber_vertex_antidual_pairing", n, true, [n] {
      const auto roots = lattice::simple_roots(n);
      const auto verts = lattice::chamber_vertices(n);
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          const auto ip = lattice::inner(verts[i], roots[j].vector());
          if ((i == j && ip >= 0) || (i != j && ip != 0)) {
            return Outcome{false, "(v" + std::to_string(i) + ", alpha" + std::to_string(j) + ") = " + std::to_string(ip)};
          }
        }
      }
      return Outcome{true, {}};
    });
    run.check("ideal_chamber_vertices", n, json::array({1}), [n] {
      json ideal = json::array();
      const auto verts = lattice::chamber_vertices(n);
      for (int i = 0; i <= n; ++i) {
        const auto nv = lattice::norm(verts[i]);
        if (nv == 0) ideal.push_back(i);
        if (nv > 0) return Outcome{json("positive norm vertex " + std::to_string(i)), {}};
      }
      return Outcome{ideal, {}};
    });
    run.check("simple_reflection_matrices_are_isometries", n, true, [n] {
      for (const Root& r : lattice::simple_roots(n)) {
        const auto m = isometry::reflection_matrix(r);  // checked constructor
        if (m.determinant() != -1 || !(m * m).is_identity()) return Outcome{false, r.vector().to_string()};
      }
      return Outcome{true, {}};
    });
    if (n <= 7) {
      run.check("norm1_reflections_trivial_mod2", n, true, [n] {
        for (const Root& r : lattice::simple_roots(n)) {
          const bool trivial = isometry::reduce_mod(isometry::reflection_matrix(r), 2).is_identity();
          if (trivial != (r.norm() == 1)) return Outcome{false, r.vector().to_string()};
        }
        return Outcome{true, {}};
      });
    }
  }

  static const std::array<std::uint64_t, 8> kStabilizerOrder = {0, 0, 2, 12, 120, 1920, 51840, 2903040};
  std::vector<int> dims;
  if (o.n) {
    dims = {*o.n};
  } else {
    for (int n = 2; n <= o.max_n; ++n) dims.push_back(n);
  }
  for (int n : dims) {
    json want = {{"order", kStabilizerOrder[n]}, {"kernel_mod2", 1}, {"kernel_mod3", 1}};
    run.check("stabilizer_congruence_kernels", n, want, [n] {
      const auto r = isometry::check_congruence_kernels(n, n == 7);
      return json{{"order", r.group_order}, {"kernel_mod2", r.kernel_mod2}, {"kernel_mod3", r.kernel_mod3}};
    });
  }
  if (!o.n && o.max_n < 7) run.skip("stabilizer_congruence_kernels", 7, "n = 7 runs only with --max-n 7");
}

void diagrams_suite(Runner& run, const SuiteOptions& o) {
  using presentation::DiagramKind;
  static const std::array<std::uint64_t, 5> kAutOrder = {0, 0, 2, 12, 120};
  static const std::array<json, 5> kWallPairs = {json(), json(), json{{"orthogonal", 1}, {"parallel", 2}},
                                                 json{{"orthogonal", 9}, {"parallel", 6}},
                                                 json{{"orthogonal", 30}, {"parallel", 15}}};
  for (int n : gosset_dimensions(o)) {
    const std::size_t wall_count = n == 2 ? 3 : n == 3 ? 6 : 10;
    run.check("wall_count", n, wall_count, [n] { return json(gosset::gosset_walls(n).walls.size()); });
    run.check("wall_pair_classification", n, kWallPairs[n], [n] {
      const auto c = gosset::wall_pair_classification(n);
      return json{{"orthogonal", c.orthogonal_pairs}, {"parallel", c.parallel_pairs}};
    });
    run.check("wall_gram_diagram", n, true, [n] {
      const auto from_gram = presentation::diagram_from_gram(gosset::gosset_walls(n));
      return json(from_gram == presentation::diagram_graph(presentation::kind_for_dimension(n)));
    });
    run.check("generator_words", n, true, [n] {
      const auto r = gosset::verify_generator_words(n);
      std::string details = r.failures();
      if (n == 4) details += "distinct conjugates of s4: " + std::to_string(r.distinct_conjugates);
      return Outcome{r.passed(), details};
    });
    run.check("diagram_automorphism_order", n, kAutOrder[n], [n] {
      return json(presentation::diagram_automorphism_order(presentation::diagram_graph(presentation::kind_for_dimension(n))));
    });
    if (n == 3 || n == 4) {
      json want = n == 3 ? json{{"actual", 2}, {"ideal", 3}, {"central_fixed", true}}
                         : json{{"actual", 5}, {"ideal", 5}, {"central_fixed", true}};
      run.check("vertex_orbits", n, want, [n] {
        const auto r = gosset::vertex_orbits(n);
        return json{{"actual", r.actual_vertices.size()}, {"ideal", r.ideal_vertices.size()}, {"central_fixed", r.central_vertex_fixed}};
      });
    }
    if (n == 4) {
      run.check("petersen_shape", n, json{{"nodes", 10}, {"edges", 15}, {"degrees", {3}}, {"girth", 5}, {"free_hexagons", 10}}, [] {
        const auto g = presentation::diagram_graph(DiagramKind::petersen);
        std::vector<int> degrees;
        for (int i = 0; i < g.node_count(); ++i) degrees.push_back(g.degree(i));
        std::sort(degrees.begin(), degrees.end());
        degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
        return json{{"nodes", g.node_count()}, {"edges", g.edge_count()}, {"degrees", degrees},
                    {"girth", presentation::girth(g).value_or(0)}, {"free_hexagons", presentation::free_hexagons(g).size()}};
      });
    }
  }
}

void presentation_suite(Runner& run, const SuiteOptions& o) {
  using presentation::DiagramKind;
  for (int n : gosset_dimensions(o)) {
    const DiagramKind kind = presentation::kind_for_dimension(n);
    static const std::array<json, 5> kCounts = {
        json(), json(), json{{"involution", 3}, {"commuting", 1}, {"braid", 2}, {"deflation", 0}},
        json{{"involution", 6}, {"commuting", 9}, {"braid", 6}, {"deflation", 1}},
        json{{"involution", 10}, {"commuting", 30}, {"braid", 15}, {"deflation", 10}}};
    run.check("relator_counts", n, kCounts[n], [kind] {
      const auto p = presentation::build_presentation(kind);
      return json{{"involution", p.involution_relators}, {"commuting", p.commuting_relators},
                  {"braid", p.braid_relators}, {"deflation", p.deflation_relators}};
    });
    run.check("relators_hold_mod3", n, true, [n, kind] {
      const auto p = presentation::build_presentation(kind);
      const auto walls = gosset::wall_reflections_mod3(n);
      const auto id = isometry::ModularMatrix::identity(n + 1, 3);
      for (const auto& w : p.relators) {
        if (!presentation::evaluate_word(w, walls, id).is_identity()) {
          return Outcome{false, "relator " + presentation::format_word(p.diagram, w)};
        }
      }
      return Outcome{true, std::to_string(p.relators.size()) + " relators"};
    });
    if (n == 3) {
      run.check("hexagon_deflation_word", n, "1.4.2.5.3.6.3.5.2.4", [kind] {
        const auto p = presentation::build_presentation(kind);
        return json(presentation::format_word(p.diagram, p.relators.back()));
      });
      run.check("deflation_is_translation", n, json{{"integer_identity", false}, {"mod3_identity", true}}, [n, kind] {
        const auto p = presentation::build_presentation(kind);
        std::vector<isometry::LatticeIsometry> walls;
        for (const Root& r : gosset::gosset_walls(n).walls) walls.push_back(isometry::reflection_matrix(r));
        const auto m = presentation::evaluate_word(p.relators.back(), walls, isometry::LatticeIsometry::identity(n));
        return Outcome{json{{"integer_identity", m.is_identity()}, {"mod3_identity", isometry::reduce_mod(m, 3).is_identity()}},
                       m.to_string()};
      });
    }
    if (n == 3 || n == 4) {
      run.check("braid_identity_random", n, true, [n, seed = o.seed] {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
        std::uniform_int_distribution<int> coord(-9, 9);
        const auto sys = gosset::gosset_walls(n);
        int pairs = 0;
        for (std::size_t i = 0; i < sys.walls.size(); ++i) {
          for (std::size_t j = 0; j < sys.walls.size(); ++j) {
            if (i == j || lattice::inner(sys.walls[i].vector(), sys.walls[j].vector()) != -1) continue;
            ++pairs;
            for (int t = 0; t < 100; ++t) {
              std::vector<std::int64_t> c(n + 1);
              for (auto& x : c) x = coord(rng);
              if (!presentation::braid_identity_check(sys.walls[i], sys.walls[j], LatticeVector(c))) {
                return Outcome{false, sys.labels[i] + "," + sys.labels[j]};
              }
            }
          }
        }
        return Outcome{true, std::to_string(pairs) + " ordered adjacent pairs x 100 vectors"};
      });
    }
  }
  run.check("braid_identity_worked_example", std::nullopt, "6e0-6e1-6e2", [] {
    const Root a(vec({0, 1, 0}));
    const Root b(vec({1, -1, -1}));
    const auto lambda = LatticeVector::basis(2, 0);
    if (!presentation::braid_identity_check(a, b, lambda)) return json("identity fails");
    using lattice::reflect;
    return json((reflect(b, reflect(a, reflect(b, lambda))) - reflect(a, reflect(b, reflect(a, lambda)))).to_string());
  });
}

void enumeration_suite(Runner& run, const SuiteOptions& o) {
  static const std::array<std::uint64_t, 5> kOrder = {0, 0, 24, 720, 51840};
  static const std::array<const char*, 5> kId = {"", "", "a3_order", "affine_a5_deflated_order", "petersen_deflated_order"};
  for (int n : gosset_dimensions(o)) {
    const auto kind = presentation::kind_for_dimension(n);
    const auto p = presentation::build_presentation(kind);
    const auto table = std::make_shared<coset_enum::CosetTable>();
    run.check(kId[n], n, kOrder[n], [&] {
      *table = coset_enum::todd_coxeter(p, {}, o.budget);
      if (!table->closed()) return Outcome{coset_enum::to_string(table->status()), {}};
      return Outcome{table->live_count(), std::to_string(table->total_defined()) + " cosets defined"};
    });
    run.check("coset_table_certificate", n, true, [&] {
      return json(table->closed() && table->is_involutive() && table->satisfies(p.relators));
    });
    run.check("mod3_projective_order", n, kOrder[n], [n] {
      std::vector<isometry::ModularMatrix> gens;
      for (const auto& s : isometry::simple_reflections(n)) gens.push_back(isometry::reduce_mod(s, 3));
      const auto g = isometry::closure(gens);
      return Outcome{isometry::projective_order(g), "linear order " + std::to_string(g.order()) +
                                                        (g.contains_minus_identity() ? ", contains -I" : ", no -I")};
    });
    run.check("action_matches_matrices", n, true, [&] {
      const auto r = coset_enum::verify_action_against_matrices(*table, gosset::wall_reflections_mod3(n));
      return Outcome{r.ok, r.ok ? "cosets " + std::to_string(r.cosets) + " = matrix order " + std::to_string(r.matrix_order) : r.detail};
    });
  }
  if (!o.n || *o.n == 3) {
    run.check("affine_a5_undeflated_diverges", 3, "budget_exceeded", [] {
      const auto p = presentation::build_presentation(presentation::DiagramKind::affine_a5, false);
      const auto t = coset_enum::todd_coxeter(p, {}, 100'000);
      return json(coset_enum::to_string(t.status()));
    });
  }
}

void tessellation_suite(Runner& run, const SuiteOptions& o) {
  static const std::array<std::uint64_t, 5> kTiles = {0, 0, 12, 60, 432};
  for (int n : gosset_dimensions(o)) {
    const auto tess = std::make_shared<gosset::Tessellation>();
    run.check("tile_count", n, kTiles[n], [&] {
      *tess = gosset::build_tessellation(n);
      return json(tess->graph.tile_count);
    });
    const std::size_t walls = n == 2 ? 3 : n == 3 ? 6 : 10;
    run.check("tile_graph", n, json{{"connected", true}, {"symmetric", true}, {"wall_slots", walls}, {"representative_independent", true}}, [&] {
      const auto& g = tess->graph;
      const auto counts = g.distinct_neighbor_counts();
      const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
      std::string details = "self-loops " + std::to_string(g.self_loop_count()) + ", distinct neighbors per tile " +
                            std::to_string(*lo) + (*lo == *hi ? "" : ".." + std::to_string(*hi));
      return Outcome{json{{"connected", g.is_connected()}, {"symmetric", g.is_symmetric()},
                          {"wall_slots", g.wall_labels.size()}, {"representative_independent", tess->representative_independent}},
                     details};
    });
    run.check("tile_count_lagrange", n, true, [&] {
      return Outcome{tess->graph.tile_count * tess->stabilizer_image_order == tess->projective_group_order,
                     std::to_string(tess->graph.tile_count) + " x " + std::to_string(tess->stabilizer_image_order) + " = " +
                         std::to_string(tess->projective_group_order)};
    });
  }
}

void e6_suite(Runner& run, const SuiteOptions&) {
  const auto sys = std::make_shared<e6::E6RootSystem>();
  run.check("root_count", std::nullopt, 72, [&] {
    *sys = e6::build_e6();
    return json(sys->roots.size());
  });
  run.check("roots_norm_two", std::nullopt, true, [&] {
    return json(std::all_of(sys->roots.begin(), sys->roots.end(), [&](const auto& r) { return sys->form(r, r) == 2; }));
  });
  run.check("highest_root_present", std::nullopt, true, [&] { return json(sys->contains({1, 2, 3, 2, 1, 2})); });
  const auto beta = std::make_shared<e6::BetaConfiguration>();
  run.check("betas_are_roots", std::nullopt, 10, [&] {
    *beta = e6::beta_configuration(*sys);
    return json(beta->roots.size());
  });
  run.check("beta_gram_is_petersen", std::nullopt, json{{"ok", true}, {"edges", 15}, {"non_edges", 30}}, [&] {
    const auto g = e6::verify_petersen_gram(*sys, *beta);
    return Outcome{json{{"ok", g.ok}, {"edges", g.edge_entries}, {"non_edges", g.non_edge_entries}}, g.detail};
  });
  run.check("hexagon_alternating_sums", std::nullopt, json{{"hexagons", 10}, {"nonzero", 0}}, [&] {
    const auto h = e6::verify_hexagon_sums(*beta);
    return json{{"hexagons", h.hexagons}, {"nonzero", h.failures.size()}};
  });
  run.check("hexagon_sums_sign_sensitive", std::nullopt, true, [&] {
    e6::BetaConfiguration flipped = *beta;
    for (auto& x : flipped.roots[0]) x = -x;
    return json(!e6::verify_hexagon_sums(flipped).ok);
  });
  run.check("beta_reflection_group_order", std::nullopt, 51840, [&] { return json(e6::verify_generation(*sys, *beta)); });
}

void eisenstein_suite(Runner& run, const SuiteOptions&) {
  using eisenstein::EisensteinInteger;
  using eisenstein::EisensteinVector;
  const EisensteinInteger w = EisensteinInteger::omega();
  const EisensteinInteger one{1, 0};
  run.check("omega_squared", std::nullopt, "-1-w", [&] { return json((w * w).to_string()); });
  run.check("one_plus_omega_squared", std::nullopt, "w", [&] { return json(((one + w) * (one + w)).to_string()); });

  // Norm-one vectors of E (x) Z^{3,1} under diag(-1,1,1,1).
  const std::vector<EisensteinVector> mirrors = {
      {{{0, 0}, {1, 0}, {0, 0}, {0, 0}}},
      {{{0, 0}, {0, 0}, {0, 1}, {0, 0}}},
      {{{1, 0}, {1, 0}, {1, 0}, {0, 0}}},
      {{{1, 1}, {1, 0}, {0, 1}, {0, 0}}},
      {{{0, 1}, {1, 1}, {1, 0}, {0, 0}}},
      {{{2, 0}, {1, 0}, {0, 1}, {1, -1}}},
  };
  std::vector<EisensteinVector> basis(4);
  for (int i = 0; i < 4; ++i) basis[i][i] = one;

  run.check("hexaflection_on_mirror", std::nullopt, true, [&] {
    for (const auto& e : mirrors) {
      if (eisenstein::hexaflection(e, e) != (-(w * w)) * e) return false;
    }
    return true;
  });
  run.check("hexaflection_order", std::nullopt, json::array({6}), [&] {
    std::vector<int> orders;
    for (const auto& e : mirrors) {
      int order = 0;
      std::vector<EisensteinVector> img = basis;
      for (int k = 1; k <= 12 && order == 0; ++k) {
        for (auto& v : img) v = eisenstein::hexaflection(e, v);
        if (img == basis) order = k;
      }
      orders.push_back(order);
    }
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    return json(orders);
  });
  run.check("hexaflection_square_order", std::nullopt, json::array({3}), [&] {
    std::vector<int> orders;
    for (const auto& e : mirrors) {
      int order = 0;
      std::vector<EisensteinVector> img = basis;
      for (int k = 1; k <= 12 && order == 0; ++k) {
        for (auto& v : img) v = eisenstein::hexaflection(e, eisenstein::hexaflection(e, v));
        if (img == basis) order = k;
      }
      orders.push_back(order);
    }
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    return json(orders);
  });
  run.check("hexaflection_preserves_form", std::nullopt, true, [&] {
    for (const auto& e : mirrors) {
      for (const auto& u : basis) {
        for (const auto& v : mirrors) {
          if (eisenstein::hermitian(eisenstein::hexaflection(e, u), eisenstein::hexaflection(e, v)) != eisenstein::hermitian(u, v)) {
            return false;
          }
        }
      }
    }
    return true;
  });
}

}  // namespace

std::string to_string(Suite s) {
  switch (s) {
    case Suite::lattice:
      return "lattice";
    case Suite::diagrams:
      return "diagrams";
    case Suite::presentation:
      return "presentation";
    case Suite::enumeration:
      return "enumeration";
    case Suite::tessellation:
      return "tessellation";
    case Suite::e6:
      return "e6";
    case Suite::eisenstein:
      return "eisenstein";
    case Suite::all:
      return "all";
  }
  return "?";
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::skipped:
      return "skipped";
    case CheckStatus::error:
      return "error";
  }
  return "?";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lattice",      "diagrams", "presentation", "enumeration",
                                                 "tessellation", "e6",       "eisenstein",   "all"};
  return names;
}

Suite parse_suite(const std::string& name) {
  for (int i = 0; i <= static_cast<int>(Suite::all); ++i) {
    if (to_string(static_cast<Suite>(i)) == name) return static_cast<Suite>(i);
  }
  throw std::invalid_argument("unknown suite: " + name);
}

void validate(const SuiteOptions& o) {
  if (o.n && (*o.n < 2 || *o.n > 4)) throw std::invalid_argument("--n must be 2, 3 or 4");
  if (o.max_n < 2 || o.max_n > 7) throw std::invalid_argument("--max-n must lie in 2..7");
  if (o.budget < 1) throw std::invalid_argument("--budget must be positive");
}

std::vector<CheckReport> run_suite(Suite suite, const SuiteOptions& options) {
  validate(options);
  Runner run;
  const bool all = suite == Suite::all;
  if (all || suite == Suite::lattice) lattice_suite(run, options);
  if (all || suite == Suite::diagrams) diagrams_suite(run, options);
  if (all || suite == Suite::presentation) presentation_suite(run, options);
  if (all || suite == Suite::enumeration) enumeration_suite(run, options);
  if (all || suite == Suite::tessellation) tessellation_suite(run, options);
  if (all || suite == Suite::e6) e6_suite(run, options);
  if (all || suite == Suite::eisenstein) eisenstein_suite(run, options);
  return std::move(run.reports());
}

json to_json(const CheckReport& r) {
  return json{{"check_id", r.check_id},
              {"n", r.n ? json(*r.n) : json(nullptr)},
              {"status", to_string(r.status)},
              {"expected", r.expected},
              {"actual", r.actual},
              {"runtime_ms", r.runtime_ms},
              {"details", r.details}};
}

json to_json(Suite suite, const std::vector<CheckReport>& reports) {
  json checks = json::array();
  for (const auto& r : reports) checks.push_back(to_json(r));
  return json{{"version", kReportVersion}, {"suite", to_string(suite)}, {"checks", std::move(checks)}};
}

int exit_code(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (r.status != CheckStatus::pass && r.status != CheckStatus::skipped) return 1;
  }
  return 0;
}

std::vector<DotFile> dot_exports(Suite suite, const SuiteOptions& options) {
  validate(options);
  std::vector<DotFile> out;
  const bool all = suite == Suite::all;
  for (int n : gosset_dimensions(options)) {
    if (all || suite == Suite::diagrams) {
      const auto g = presentation::diagram_graph(presentation::kind_for_dimension(n));
      out.push_back({"diagrams_" + std::to_string(n) + ".dot",
                     presentation::to_dot(g, presentation::to_string(presentation::kind_for_dimension(n)))});
    }
    if (all || suite == Suite::tessellation) {
      out.push_back({"tessellation_" + std::to_string(n) + ".dot", gosset::to_dot(gosset::build_tessellation(n).graph)});
    }
  }
  return out;
}

}  // namespace oddpres::verify
