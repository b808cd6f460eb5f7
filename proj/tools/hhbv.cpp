#include "hhbv/bv_verify.hpp"
#include "hhbv/cochains.hpp"
#include "hhbv/errors.hpp"
#include "hhbv/hochschild.hpp"
#include "hhbv/iso.hpp"
#include "hhbv/json_io.hpp"
#include "hhbv/sphere_models.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace hhbv;

namespace {

struct Output {
  std::string path;
  std::string format = "text";
};

void add_output(CLI::App* cmd, Output& out) {
  cmd->add_option("-o,--out", out.path, "Write the JSON result to this file");
  cmd->add_option("--format", out.format, "Format of standard output")->check(CLI::IsMember({"json", "text"}));
}

void emit(const Output& out, const Json& doc, const std::string& text) {
  if (!out.path.empty()) write_json_file(out.path, doc);
  if (out.format == "json")
    std::cout << doc.dump(2) << '\n';
  else
    std::cout << text;
}

std::string group_text(const std::string& ring, std::size_t free_rank, const std::vector<Integer>& torsion) {
  std::vector<std::string> parts;
  if (free_rank > 0) parts.push_back(ring + (free_rank > 1 ? "^" + std::to_string(free_rank) : ""));
  for (const auto& t : torsion) parts.push_back("Z/" + to_decimal(t));
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

std::string table_text(const BVTable& t) {
  std::ostringstream os;
  os << "ring " << t.ring().name() << ", window ";
  if (t.window())
    os << "[" << t.window()->lo << ", " << t.window()->hi << "]\n";
  else
    os << "none\n";
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& m = t.monomial(i);
    os << "  " << m.name << "  (degree " << m.degree;
    if (m.order != 0) os << ", order " << m.order;
    os << ")  Δ = " << (t.delta(i) ? format_element(t, *t.delta(i)) : "?") << '\n';
  }
  return os.str();
}

struct AlgebraSpec {
  std::string text;
  std::string ring;
};

GradedAlgebra load_algebra(const AlgebraSpec& spec) {
  const std::string prefix = "sphere:";
  Ring ring = spec.ring.empty() ? Ring::integers() : parse_ring(spec.ring);
  if (spec.text.rfind(prefix, 0) == 0) return make_exterior_sphere(std::stoi(spec.text.substr(prefix.size())), ring);
  GradedAlgebra a = algebra_from_json(read_json_file(spec.text));
  if (spec.ring.empty() || a.ring() == ring) return a;
  if (!(a.ring() == Ring::integers())) throw SchemaError("only algebras over Z can be reinterpreted in another ring");
  return change_ring(a, ring);
}

std::pair<int, int> parse_range(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--degrees", "expected lo:hi");
  return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

int cmd_hh(const AlgebraSpec& spec, int max_word, const std::string& degrees, const Output& out) {
  GradedAlgebra a = load_algebra(spec);
  const int d = a.dualizing() ? a.dualizing()->degree : 0;
  auto [lo, hi] = degrees.empty() ? std::pair{0, std::max(1, d)} : parse_range(degrees);
  DualHochschild h = hh_via_dual(a, a.ring(), max_word);
  h.require_degrees(lo, hi);
  Json doc = dual_to_json(h, std::pair{lo, hi});
  std::ostringstream text;
  const std::string ring = a.ring().name();
  for (int e = lo; e <= hi; ++e) {
    const auto& g = h.groups.at(e);
    text << "HH^" << e << " = " << group_text(ring, g.free_rank, g.torsion) << '\n';
  }
  for (const auto& [e, m] : h.delta) {
    if (e < lo || e + 1 > hi) continue;
    AbelianGroup c = h.delta_cokernel(e);
    text << "Δ: HH^" << e << " -> HH^" << e + 1 << "  matrix " << m << "  coker " << group_text(ring, c.free_rank, c.torsion) << '\n';
  }
  if (a.ring().characteristic() == 2 && a.dualizing()) {
    std::vector<NamedCochain> names;
    if (spec.text.rfind("sphere:", 0) == 0) names = exterior_sphere_cochain_basis(-a.degree(a.augmentation_ideal().at(0)), max_word);
    HHBVResult r = delta_on_HH(a, max_word, names);
    doc["table"] = table_to_json(r.table);
    text << "HH^*(A;A) with Δ\n" << table_text(r.table);
  }
  emit(out, doc, text.str());
  return 0;
}

int cmd_model(SphereModelConfig c, const std::string& kind, const std::string& ring, const Output& out) {
  using K = SphereModelConfig::Kind;
  static const std::map<std::string, K> kinds{{"circle", K::Circle}, {"odd", K::OddSphere}, {"even-z", K::EvenSphereZ},
                                              {"s2-f2", K::S2F2},    {"s2-z", K::S2Z},       {"hh-f2", K::HHofSphereF2}};
  c.kind = kinds.at(kind);
  if (!ring.empty()) c.ring = parse_ring(ring);
  BVTable t = make_sphere_model(c);
  emit(out, table_to_json(t), table_text(t));
  return 0;
}

std::string violation_text(const AxiomReport& r, const std::string& label) {
  std::ostringstream os;
  std::size_t checked = 0, skipped = 0;
  for (const auto& [k, n] : r.checked) checked += n;
  for (const auto& [k, n] : r.skipped) skipped += n;
  os << label << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << checked << " checked, " << skipped << " skipped)\n";
  for (const auto& v : r.violations) os << "  " << v.axiom << ' ' << v.detail << '\n';
  return os.str();
}

int cmd_verify(const std::string& path, const Output& out) {
  BVTable t = table_from_json(read_json_file(path));
  AxiomReport bv = verify_bv(t);
  AxiomReport g = verify_gerstenhaber(t);
  Json doc = {{"passed", bv.passed() && g.passed()}, {"bv", report_to_json(t, bv)}, {"gerstenhaber", report_to_json(t, g)}};
  emit(out, doc, violation_text(bv, "BV") + violation_text(g, "Gerstenhaber"));
  return bv.passed() && g.passed() ? 0 : 1;
}

int cmd_compare(const std::string& p1, const std::string& p2, const std::string& mode, const Output& out) {
  BVTable t1 = table_from_json(read_json_file(p1));
  BVTable t2 = table_from_json(read_json_file(p2));
  IsoDecision d = mode == "bv" ? bv_isomorphic(t1, t2) : gerstenhaber_isomorphic(t1, t2);
  Json doc = decision_to_json(t1, t2, d, mode);
  std::ostringstream text;
  text << (d.isomorphic ? "isomorphic" : "not isomorphic") << " as " << (mode == "bv" ? "BV" : "Gerstenhaber") << " algebras";
  if (!d.reason.empty()) text << " (" << d.reason << ")";
  text << '\n';
  if (d.witness)
    for (auto g : d.generators) text << "  " << t1.monomial(g).name << " -> " << format_element(t2, *d.witness->images[g]) << '\n';
  for (const auto& r : d.refutations) text << "  candidate fails: " << r.detail << '\n';
  emit(out, doc, text.str());
  return d.isomorphic ? 0 : 1;
}

int cmd_reduce(const std::string& path, long long p, const std::string& reference, const Output& out) {
  BVTable t = table_from_json(read_json_file(path));
  if (reference.empty()) {
    BVTable r = reduce_mod_p(t, p);
    emit(out, table_to_json(r), table_text(r));
    return 0;
  }
  BVTable ref = table_from_json(read_json_file(reference));
  ReductionReport r = reduce_mod_p(t, p, ref);
  std::ostringstream text;
  text << "degree  reduced  corrected  reference  rankΔ  rankΔ(ref)\n";
  auto rank = [](const std::optional<std::size_t>& x) { return x ? std::to_string(*x) : std::string("?"); };
  for (const auto& d : r.degrees)
    text << std::setw(6) << d.degree << std::setw(9) << d.reduced_dim << std::setw(11) << d.corrected_dim << std::setw(11)
         << d.reference_dim << std::setw(7) << rank(d.reduced_delta_rank) << std::setw(12) << rank(d.reference_delta_rank) << '\n';
  text << "dimensions " << (r.dimensions_match() ? "match" : "differ") << ", Tor-corrected dimensions "
       << (r.corrected_dimensions_match() ? "match" : "differ") << ", Δ-ranks " << (r.delta_ranks_match() ? "match" : "differ") << '\n';
  emit(out, reduction_to_json(r), text.str());
  return r.corrected_dimensions_match() && r.delta_ranks_match() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild homology and BV structures of small graded algebras"};
  app.require_subcommand(1);

  Output out;
  AlgebraSpec spec;
  int max_word = 10;
  std::string degrees;
  auto* hh = app.add_subcommand("hh", "Hochschild cohomology with Δ via the dual chain complex");
  hh->add_option("-a,--algebra", spec.text, "sphere:n or a JSON algebra file")->required();
  hh->add_option("-r,--ring", spec.ring, "Z, Q or Fp");
  hh->add_option("-L,--max-word", max_word, "Maximal bar word length")->check(CLI::PositiveNumber);
  hh->add_option("--degrees", degrees, "Cohomological degrees lo:hi");
  add_output(hh, out);

  SphereModelConfig config;
  std::string kind = "s2-f2", model_ring;
  auto* model = app.add_subcommand("model", "Emit a sphere model table");
  model->add_option("--kind", kind)->check(CLI::IsMember({"circle", "odd", "even-z", "s2-f2", "s2-z", "hh-f2"}));
  model->add_option("-n,--dimension", config.n);
  model->add_option("-K,--bound", config.bound, "Power bound K, or I for the circle")->check(CLI::PositiveNumber);
  model->add_option("-r,--ring", model_ring);
  model->add_option("--eps", config.eps)->check(CLI::Range(0, 1));
  model->add_option("--lambda", config.lambda)->check(CLI::Range(0, 1));
  model->add_option("--eps0", config.eps0)->check(CLI::Range(0, 1));
  add_output(model, out);

  std::string table, table2, mode = "bv", reference;
  auto* verify = app.add_subcommand("verify", "Check the BV and Gerstenhaber axioms on a table");
  verify->add_option("table", table)->required();
  add_output(verify, out);

  auto* compare = app.add_subcommand("compare", "Decide whether two tables are isomorphic");
  compare->add_option("table1", table)->required();
  compare->add_option("table2", table2)->required();
  compare->add_option("--mode", mode)->check(CLI::IsMember({"bv", "gerstenhaber"}));
  add_output(compare, out);

  long long prime = 2;
  auto* reduce = app.add_subcommand("reduce", "Reduce a table over Z modulo p and compare with a reference");
  reduce->add_option("table", table)->required();
  reduce->add_option("-p,--prime", prime)->check(CLI::NonNegativeNumber);
  reduce->add_option("--reference", reference);
  add_output(reduce, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*hh) return cmd_hh(spec, max_word, degrees, out);
    if (*model) return cmd_model(config, kind, model_ring, out);
    if (*verify) return cmd_verify(table, out);
    if (*compare) return cmd_compare(table, table2, mode, out);
    if (*reduce) return cmd_reduce(table, prime, reference, out);
  } catch (const WindowNonConclusive& e) {
    std::cerr << "WindowNonConclusive: " << e.what() << '\n';
    return 3;
  } catch (const WindowTooSmall& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
