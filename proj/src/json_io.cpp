#include "hhbv/json_io.hpp"

#include "hhbv/errors.hpp"

#include <fstream>

namespace hhbv {

namespace {

Json integer_json(const Integer& x) { return to_decimal(x); }

Integer integer_from(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_decimal(j.get<std::string>());
    if (j.is_number_integer()) return Integer(j.get<long long>());
  } catch (const std::invalid_argument&) {
  }
  throw SchemaError(where + ": expected an integer as a decimal string");
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
  return j.at(key);
}

const Json& array_field(const Json& j, const char* key, const std::string& where) {
  const Json& a = field(j, key, where);
  if (!a.is_array()) throw SchemaError(where + ": field '" + key + "' must be an array");
  return a;
}

long long number(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return j.get<long long>();
}

std::size_t index(const Json& j, std::size_t size, const std::string& where) {
  long long i = number(j, where);
  if (i < 0 || static_cast<std::size_t>(i) >= size) throw SchemaError(where + ": index " + std::to_string(i) + " out of range");
  return static_cast<std::size_t>(i);
}

std::string string_field(const Json& j, const char* key, const std::string& where) {
  const Json& s = field(j, key, where);
  if (!s.is_string()) throw SchemaError(where + ": field '" + key + "' must be a string");
  return s.get<std::string>();
}

Ring ring_from(const Json& j) {
  try {
    return parse_ring(string_field(j, "ring", "ring"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("ring: ") + e.what());
  }
}

Element element_checked(const Json& j, std::size_t size, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + ": expected a list of [k, coeff]");
  Element e;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw SchemaError(where + ": expected [k, coeff]");
    e[index(term[0], size, where)] += integer_from(term[1], where);
  }
  return e;
}

Json names(const BVTable& t, const std::vector<std::size_t>& ms) {
  Json out = Json::array();
  for (auto m : ms) out.push_back(t.monomial(m).name);
  return out;
}

Json named_element(const BVTable& t, const std::optional<Element>& e) {
  if (!e) return nullptr;
  return format_element(t, *e);
}

Json group_json(const HomologyGroup& g) {
  Json torsion = Json::array();
  for (const auto& x : g.torsion) torsion.push_back(integer_json(x));
  return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"dimension", g.dimension()}};
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json element_to_json(const Element& e) {
  Json out = Json::array();
  for (const auto& [k, c] : e) out.push_back(Json::array({k, integer_json(c)}));
  return out;
}

Element element_from_json(const Json& j) { return element_checked(j, static_cast<std::size_t>(-1), "element"); }

Json algebra_to_json(const GradedAlgebra& a) {
  Json basis = Json::array();
  for (const auto& b : a.basis()) basis.push_back({{"name", b.name}, {"degree", b.degree}});
  Json products = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector& p = a.product(i, j);
      if (is_zero_vector(p)) continue;
      Json coeffs = Json::array();
      for (const auto& c : p) coeffs.push_back(integer_json(c));
      products.push_back(Json::array({i, j, coeffs}));
    }
  Json out = {{"ring", a.ring().name()}, {"basis", basis}, {"unit", a.unit()}, {"products", products}};
  if (a.dualizing()) {
    Json theta = Json::array();
    for (const auto& c : a.dualizing()->values) theta.push_back(integer_json(c));
    out["dualizing"] = theta;
  }
  return out;
}

GradedAlgebra algebra_from_json(const Json& j) {
  Ring ring = ring_from(j);
  std::vector<BasisElement> basis;
  for (const auto& b : array_field(j, "basis", "basis"))
    basis.push_back({string_field(b, "name", "basis"), static_cast<int>(number(field(b, "degree", "basis"), "basis"))});
  if (basis.empty()) throw SchemaError("basis: must not be empty");
  GradedAlgebra a(ring, basis, index(field(j, "unit", "unit"), basis.size(), "unit"));
  for (const auto& p : array_field(j, "products", "products")) {
    if (!p.is_array() || p.size() != 3 || !p[2].is_array() || p[2].size() != basis.size())
      throw SchemaError("products: expected [i, j, [coeffs]] with one coefficient per basis element");
    Vector v;
    for (const auto& c : p[2]) v.push_back(integer_from(c, "products"));
    a.set_product(index(p[0], basis.size(), "products"), index(p[1], basis.size(), "products"), v);
  }
  if (j.contains("dualizing") && !j.at("dualizing").is_null()) {
    const Json& t = j.at("dualizing");
    if (!t.is_array() || t.size() != basis.size()) throw SchemaError("dualizing: expected one coefficient per basis element");
    Vector v;
    int degree = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      v.push_back(ring.normalize(integer_from(t[i], "dualizing")));
      if (v.back() != 0) degree = -basis[i].degree;
    }
    a.set_dualizing(Functional{degree, v});
  }
  a.set_graded_commutative(true);
  for (const auto& v : validate(a, {false}))
    if (v.kind == Violation::Kind::Commutativity) {
      a.set_graded_commutative(false);
      break;
    }
  return a;
}

Json table_to_json(const BVTable& t) {
  Json monomials = Json::array();
  for (const auto& m : t.monomials()) monomials.push_back({{"name", m.name}, {"degree", m.degree}, {"order", integer_json(m.order)}});
  Json products = Json::array();
  Json delta = Json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j)
      if (const auto& p = t.product(i, j)) products.push_back(Json::array({i, j, element_to_json(*p)}));
    if (const auto& d = t.delta(i)) delta.push_back(Json::array({i, element_to_json(*d)}));
  }
  Json window = nullptr;
  if (t.window()) window = {{"lo", t.window()->lo}, {"hi", t.window()->hi}};
  return {{"ring", t.ring().name()}, {"window", window},          {"unit", t.unit()},
          {"monomials", monomials}, {"products", products}, {"delta", delta}};
}

BVTable table_from_json(const Json& j) {
  Ring ring = ring_from(j);
  std::vector<Monomial> ms;
  for (const auto& m : array_field(j, "monomials", "monomials")) {
    Integer order = m.contains("order") ? integer_from(m.at("order"), "monomials") : Integer(0);
    if (order < 0 || order == 1) throw SchemaError("monomials: order must be 0 or at least 2");
    ms.push_back({string_field(m, "name", "monomials"), static_cast<int>(number(field(m, "degree", "monomials"), "monomials")), order});
  }
  if (ms.empty()) throw SchemaError("monomials: must not be empty");
  const std::size_t n = ms.size();
  BVTable t(ring, ms, index(field(j, "unit", "unit"), n, "unit"));
  const Json& w = field(j, "window", "window");
  if (!w.is_null())
    t.set_window(DegreeWindow{static_cast<int>(number(field(w, "lo", "window"), "window")),
                              static_cast<int>(number(field(w, "hi", "window"), "window"))});
  for (std::size_t i = 0; i < n; ++i) {
    t.set_delta(i, std::nullopt);
    for (std::size_t k = 0; k < n; ++k) t.set_product(i, k, std::nullopt);
  }
  for (const auto& p : array_field(j, "products", "products")) {
    if (!p.is_array() || p.size() != 3) throw SchemaError("products: expected [i, j, [[k, coeff], ...]]");
    t.set_product(index(p[0], n, "products"), index(p[1], n, "products"), element_checked(p[2], n, "products"));
  }
  for (const auto& d : array_field(j, "delta", "delta")) {
    if (!d.is_array() || d.size() != 2) throw SchemaError("delta: expected [i, [[k, coeff], ...]]");
    t.set_delta(index(d[0], n, "delta"), element_checked(d[1], n, "delta"));
  }
  return t;
}

Json report_to_json(const BVTable& t, const AxiomReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back({{"axiom", v.axiom}, {"monomials", names(t, v.monomials)}, {"detail", v.detail}});
  Json checked = Json::object(), skipped = Json::object();
  for (const auto& [k, n] : r.checked) checked[k] = n;
  for (const auto& [k, n] : r.skipped) skipped[k] = n;
  return {{"passed", r.passed()}, {"violations", violations}, {"checked", checked}, {"skipped", skipped}};
}

Json reduction_to_json(const ReductionReport& r) {
  Json degrees = Json::array();
  auto rank = [](const std::optional<std::size_t>& x) { return x ? Json(*x) : Json(nullptr); };
  for (const auto& d : r.degrees)
    degrees.push_back({{"degree", d.degree},
                       {"reduced_dim", d.reduced_dim},
                       {"corrected_dim", d.corrected_dim},
                       {"reference_dim", d.reference_dim},
                       {"reduced_delta_rank", rank(d.reduced_delta_rank)},
                       {"reference_delta_rank", rank(d.reference_delta_rank)}});
  return {{"dimensions_match", r.dimensions_match()},
          {"corrected_dimensions_match", r.corrected_dimensions_match()},
          {"delta_ranks_match", r.delta_ranks_match()},
          {"degrees", degrees},
          {"reduced", table_to_json(r.reduced)}};
}

Json decision_to_json(const BVTable& source, const BVTable& target, const IsoDecision& d, const std::string& mode) {
  Json out = {{"mode", mode},
              {"isomorphic", d.isomorphic},
              {"conclusive", d.conclusive},
              {"reason", d.reason},
              {"generators", names(source, d.generators)}};
  if (d.witness) {
    Json images = Json::object();
    for (std::size_t i = 0; i < source.size(); ++i) images[source.monomial(i).name] = named_element(target, d.witness->images[i]);
    out["witness"] = {{"images", images},
                      {"preserves_product", d.witness->preserves_product},
                      {"preserves_delta", d.witness->preserves_delta},
                      {"preserves_bracket", d.witness->preserves_bracket}};
  }
  Json refutations = Json::array();
  for (const auto& r : d.refutations) {
    Json images = Json::object();
    for (std::size_t g = 0; g < d.generators.size(); ++g)
      images[source.monomial(d.generators[g]).name] = named_element(target, r.generator_images[g]);
    refutations.push_back({{"generator_images", images}, {"monomials", names(source, r.monomials)}, {"detail", r.detail}});
  }
  out["refutations"] = refutations;
  return out;
}

Json dual_to_json(const DualHochschild& h, std::optional<std::pair<int, int>> degrees) {
  auto inside = [&](int e) { return !degrees || (degrees->first <= e && e <= degrees->second); };
  Json groups = Json::array();
  for (const auto& [e, g] : h.groups) {
    if (!inside(e)) continue;
    Json entry = group_json(g);
    entry["dual_degree"] = e;
    entry["degree"] = e - h.shift;
    groups.push_back(entry);
  }
  Json delta = Json::array();
  for (const auto& [e, m] : h.delta) {
    if (!inside(e) || !inside(e + 1)) continue;
    AbelianGroup c = h.delta_cokernel(e);
    Json torsion = Json::array();
    for (const auto& x : c.torsion) torsion.push_back(integer_json(x));
    delta.push_back({{"from", e}, {"to", e + 1}, {"matrix", matrix_json(m)}, {"cokernel", {{"free_rank", c.free_rank}, {"torsion", torsion}}}});
  }
  return {{"ring", h.groups.empty() ? std::string("?") : h.groups.begin()->second.ring.name()},
          {"shift", h.shift},
          {"max_word", h.complex.max_word()},
          {"groups", groups},
          {"delta", delta}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace hhbv
