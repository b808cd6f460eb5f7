#include "hhbv/bv_verify.hpp"
#include "hhbv/cochains.hpp"
#include "hhbv/errors.hpp"
#include "hhbv/hochschild.hpp"
#include "hhbv/iso.hpp"
#include "hhbv/json_io.hpp"
#include "hhbv/parallel.hpp"
#include "hhbv/sphere_models.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hhbv;

namespace {

// Documents cross the boundary as JSON text; the python layer decodes them.
BVTable table_from(const std::string& text) { return table_from_json(Json::parse(text)); }

GradedAlgebra algebra_from(const std::string& spec, const std::string& ring) {
  Ring r = parse_ring(ring);
  if (spec.rfind("sphere:", 0) == 0) return make_exterior_sphere(std::stoi(spec.substr(7)), r);
  GradedAlgebra a = algebra_from_json(Json::parse(spec));
  return a.ring() == r ? a : change_ring(a, r);
}

std::string sphere_model(const std::string& kind, int n, int bound, const std::string& ring, int eps, int lambda, int eps0) {
  using K = SphereModelConfig::Kind;
  static const std::map<std::string, K> kinds{{"circle", K::Circle}, {"odd", K::OddSphere}, {"even-z", K::EvenSphereZ},
                                              {"s2-f2", K::S2F2},    {"s2-z", K::S2Z},       {"hh-f2", K::HHofSphereF2}};
  auto it = kinds.find(kind);
  if (it == kinds.end()) throw std::invalid_argument("unknown model kind '" + kind + "'");
  return table_to_json(make_sphere_model({it->second, n, bound, parse_ring(ring), eps, lambda, eps0})).dump();
}

std::string hh(const std::string& spec, const std::string& ring, int max_word, std::optional<std::pair<int, int>> degrees) {
  GradedAlgebra a = algebra_from(spec, ring);
  const int d = a.dualizing() ? a.dualizing()->degree : 0;
  auto [lo, hi] = degrees.value_or(std::pair{0, std::max(1, d)});
  DualHochschild h = hh_via_dual(a, a.ring(), max_word);
  h.require_degrees(lo, hi);
  Json doc = dual_to_json(h, std::pair{lo, hi});
  if (a.ring().characteristic() == 2 && a.dualizing()) {
    std::vector<NamedCochain> names;
    if (spec.rfind("sphere:", 0) == 0) names = exterior_sphere_cochain_basis(std::stoi(spec.substr(7)), max_word);
    doc["table"] = table_to_json(delta_on_HH(a, max_word, names).table);
  }
  return doc.dump();
}

std::string verify(const std::string& table) {
  BVTable t = table_from(table);
  AxiomReport bv = verify_bv(t), g = verify_gerstenhaber(t);
  return Json{{"passed", bv.passed() && g.passed()}, {"bv", report_to_json(t, bv)}, {"gerstenhaber", report_to_json(t, g)}}.dump();
}

std::string compare(const std::string& t1, const std::string& t2, const std::string& mode) {
  if (mode != "bv" && mode != "gerstenhaber") throw std::invalid_argument("mode must be 'bv' or 'gerstenhaber'");
  BVTable a = table_from(t1), b = table_from(t2);
  return decision_to_json(a, b, mode == "bv" ? bv_isomorphic(a, b) : gerstenhaber_isomorphic(a, b), mode).dump();
}

std::string automorphisms(const std::string& table) {
  BVTable t = table_from(table);
  AlgebraMapSearch s = enumerate_algebra_automorphisms(t);
  Json maps = Json::array();
  for (const auto& w : s.maps) {
    Json images = Json::object();
    for (auto g : s.generators) images[t.monomial(g).name] = format_element(t, *w.images[g]);
    maps.push_back(images);
  }
  return Json{{"conclusive", s.conclusive}, {"maps", maps}}.dump();
}

std::string reduce(const std::string& table, long long p, const std::optional<std::string>& reference) {
  BVTable t = table_from(table);
  if (!reference) return table_to_json(reduce_mod_p(t, p)).dump();
  return reduction_to_json(reduce_mod_p(t, p, table_from(*reference))).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hochschild homology and BV structures of small graded algebras";

  py::register_exception<WindowTooSmall>(m, "WindowTooSmall");
  py::register_exception<WindowNonConclusive>(m, "WindowNonConclusive");
  py::register_exception<TruncationEscape>(m, "TruncationEscape");
  py::register_exception<NotFinitelyGenerated>(m, "NotFinitelyGenerated");
  py::register_exception<SchemaError>(m, "SchemaError");
  py::register_exception<Json::exception>(m, "JSONError", PyExc_ValueError);

  m.def("sphere_model", &sphere_model, py::arg("kind"), py::arg("n") = 2, py::arg("bound") = 6, py::arg("ring") = "Z",
        py::arg("eps") = 1, py::arg("lambda_") = 0, py::arg("eps0") = -1);
  m.def("hh", &hh, py::arg("algebra"), py::arg("ring") = "Z", py::arg("max_word") = 10, py::arg("degrees") = std::nullopt);
  m.def("verify", &verify, py::arg("table"), py::call_guard<py::gil_scoped_release>());
  m.def("compare", &compare, py::arg("table1"), py::arg("table2"), py::arg("mode") = "bv", py::call_guard<py::gil_scoped_release>());
  m.def("automorphisms", &automorphisms, py::arg("table"));
  m.def("reduce", &reduce, py::arg("table"), py::arg("p"), py::arg("reference") = std::nullopt);
  m.def("thread_count", &thread_count);
}
