#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oddpres/coset_enum.hpp"
#include "oddpres/e6.hpp"
#include "oddpres/eisenstein.hpp"
#include "oddpres/gosset.hpp"
#include "oddpres/isometry.hpp"
#include "oddpres/presentation.hpp"
#include "oddpres/verify.hpp"

namespace py = pybind11;
using namespace oddpres;

namespace {

using Coords = std::vector<std::int64_t>;

Coords to_coords(const lattice::LatticeVector& v) { return {v.coords().begin(), v.coords().end()}; }

std::vector<Coords> root_coords(const std::vector<lattice::Root>& roots) {
  std::vector<Coords> out;
  for (const auto& r : roots) out.push_back(to_coords(r.vector()));
  return out;
}

using PyEisenstein = std::pair<std::int64_t, std::int64_t>;
using PyEisensteinVector = std::array<PyEisenstein, 4>;

eisenstein::EisensteinVector to_eis(const PyEisensteinVector& v) {
  eisenstein::EisensteinVector out;
  for (int i = 0; i < 4; ++i) out[i] = {v[i].first, v[i].second};
  return out;
}

PyEisensteinVector from_eis(const eisenstein::EisensteinVector& v) {
  PyEisensteinVector out;
  for (int i = 0; i < 4; ++i) out[i] = {v[i].a, v[i].b};
  return out;
}

std::vector<presentation::Word> to_words(const std::vector<std::vector<int>>& lists) {
  std::vector<presentation::Word> out;
  for (const auto& l : lists) out.push_back({l});
  return out;
}

py::dict table_dict(const coset_enum::CosetTable& t) {
  py::dict d;
  d["status"] = coset_enum::to_string(t.status());
  d["cosets"] = t.live_count();
  d["defined"] = t.total_defined();
  std::vector<std::vector<std::uint32_t>> rows;
  if (t.closed()) {
    for (std::uint32_t c = 0; c < t.live_count(); ++c) {
      std::vector<std::uint32_t> row;
      for (int g = 0; g < t.generator_count(); ++g) row.push_back(t.image(c, g));
      rows.push_back(std::move(row));
    }
  }
  d["table"] = rows;
  return d;
}

py::dict diagram_dict(const presentation::DiagramGraph& g) {
  py::dict d;
  d["labels"] = g.labels();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [i, j] : g.edges()) edges.emplace_back(g.label(i), g.label(j));
  d["edges"] = edges;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact checks of reflection-group presentations of W(E6)";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("inner", [](const Coords& u, const Coords& v) {
    return lattice::inner(lattice::LatticeVector(u), lattice::LatticeVector(v));
  }, py::arg("u"), py::arg("v"));
  m.def("reflect", [](const Coords& root, const Coords& v) {
    return to_coords(lattice::reflect(lattice::Root(lattice::LatticeVector(root)), lattice::LatticeVector(v)));
  }, py::arg("root"), py::arg("v"));
  m.def("simple_roots", [](int n) { return root_coords(lattice::simple_roots(n)); }, py::arg("n"));
  m.def("chamber_vertices", [](int n) {
    std::vector<Coords> out;
    for (const auto& v : lattice::chamber_vertices(n)) out.push_back(to_coords(v));
    return out;
  }, py::arg("n"));

  m.def("congruence_kernels", [](int n, bool allow_n7) {
    const auto r = isometry::check_congruence_kernels(n, allow_n7);
    py::dict d;
    d["order"] = r.group_order;
    d["kernel_mod2"] = r.kernel_mod2;
    d["kernel_mod3"] = r.kernel_mod3;
    return d;
  }, py::arg("n"), py::arg("allow_n7") = false,
     "Order of the face stabilizer and its elements congruent to I mod 2 and mod 3.");
  m.def("mod3_projective_order", [](int n) {
    std::vector<isometry::ModularMatrix> gens;
    for (const auto& s : isometry::simple_reflections(n)) gens.push_back(isometry::reduce_mod(s, 3));
    return isometry::projective_order(isometry::closure(gens));
  }, py::arg("n"));

  m.def("gosset_walls", [](int n) {
    const auto sys = gosset::gosset_walls(n);
    std::vector<std::pair<std::string, Coords>> out;
    for (std::size_t i = 0; i < sys.walls.size(); ++i) out.emplace_back(sys.labels[i], to_coords(sys.walls[i].vector()));
    return out;
  }, py::arg("n"));
  m.def("tessellation", [](int n) {
    const auto t = gosset::build_tessellation(n);
    py::dict d;
    d["tile_count"] = t.graph.tile_count;
    d["walls"] = t.graph.wall_labels;
    std::vector<std::tuple<std::uint32_t, std::string, std::uint32_t>> edges;
    for (const auto& e : t.graph.edges) edges.emplace_back(e.from, t.graph.wall_labels[e.wall], e.to);
    d["edges"] = edges;
    d["connected"] = t.graph.is_connected();
    d["symmetric"] = t.graph.is_symmetric();
    return d;
  }, py::arg("n"));
  m.def("tessellation_dot", [](int n) { return gosset::to_dot(gosset::build_tessellation(n).graph); }, py::arg("n"));

  m.def("diagram", [](const std::string& kind) {
    return diagram_dict(presentation::diagram_graph(presentation::parse_kind(kind)));
  }, py::arg("kind"));
  m.def("automorphism_order", [](const std::string& kind) {
    return presentation::diagram_automorphism_order(presentation::diagram_graph(presentation::parse_kind(kind)));
  }, py::arg("kind"));
  m.def("free_hexagons", [](const std::string& kind) {
    const auto g = presentation::diagram_graph(presentation::parse_kind(kind));
    std::vector<std::vector<std::string>> out;
    for (const auto& h : presentation::free_hexagons(g)) {
      std::vector<std::string> labels;
      for (int i : h) labels.push_back(g.label(i));
      out.push_back(std::move(labels));
    }
    return out;
  }, py::arg("kind"));
  m.def("relator_text", [](const std::string& kind, bool deflation) {
    return presentation::to_relator_text(presentation::build_presentation(presentation::parse_kind(kind), deflation));
  }, py::arg("kind"), py::arg("deflation") = true);

  m.def("todd_coxeter", [](int generators, const std::vector<std::vector<int>>& relators,
                           const std::vector<std::vector<int>>& subgroup, std::size_t budget) {
    const auto rels = to_words(relators);
    const auto sub = to_words(subgroup);
    return table_dict(coset_enum::todd_coxeter(generators, rels, sub, budget));
  }, py::arg("generators"), py::arg("relators"), py::arg("subgroup") = std::vector<std::vector<int>>{},
     py::arg("budget") = coset_enum::kDefaultCosetBudget,
     "Coset enumeration for involutive generators; letters are generator indices.");
  m.def("enumerate_presentation", [](const std::string& kind, bool deflation, std::size_t budget) {
    const auto p = presentation::build_presentation(presentation::parse_kind(kind), deflation);
    const auto t = coset_enum::todd_coxeter(p, {}, budget);
    return std::make_pair(coset_enum::to_string(t.status()), t.live_count());
  }, py::arg("kind"), py::arg("deflation") = true, py::arg("budget") = coset_enum::kDefaultCosetBudget);

  m.def("e6_roots", [] { return e6::build_e6().roots; });
  m.def("e6_betas", [] {
    const auto c = e6::beta_configuration(e6::build_e6());
    std::vector<std::pair<std::string, e6::RootCoords>> out;
    for (std::size_t i = 0; i < c.labels.size(); ++i) out.emplace_back(c.labels[i], c.roots[i]);
    return out;
  });
  m.def("e6_generation_order", [] {
    const auto sys = e6::build_e6();
    return e6::verify_generation(sys, e6::beta_configuration(sys));
  });

  m.def("hermitian", [](const PyEisensteinVector& u, const PyEisensteinVector& v) {
    const auto h = eisenstein::hermitian(to_eis(u), to_eis(v));
    return PyEisenstein{h.a, h.b};
  }, py::arg("u"), py::arg("v"), "Eisenstein integers are pairs (a, b) meaning a + b w.");
  m.def("hexaflection", [](const PyEisensteinVector& e, const PyEisensteinVector& l) {
    return from_eis(eisenstein::hexaflection(to_eis(e), to_eis(l)));
  }, py::arg("e"), py::arg("l"));

  m.def("_run_suite_json", [](const std::string& suite, std::optional<int> n, int max_n, std::size_t budget,
                              std::uint64_t seed) {
    verify::SuiteOptions o;
    o.n = n;
    o.max_n = max_n;
    o.budget = budget;
    o.seed = seed;
    const auto s = verify::parse_suite(suite);
    py::gil_scoped_release release;
    return verify::to_json(s, verify::run_suite(s, o)).dump();
  });
}
