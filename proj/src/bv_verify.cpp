#include "hhbv/bv_verify.hpp"

#include "hhbv/errors.hpp"
#include "hhbv/modp.hpp"
#include "hhbv/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace hhbv {
namespace {

using Opt = std::optional<Element>;

Opt mul(const BVTable& t, const Opt& x, const Opt& y) {
  if (!x || !y) return std::nullopt;
  return t.multiply(*x, *y);
}

Opt del(const BVTable& t, const Opt& x) {
  if (!x) return std::nullopt;
  return t.apply_delta(*x);
}

Opt br(const BVTable& t, const BracketTable& b, const Opt& x, const Opt& y) {
  if (!x || !y) return std::nullopt;
  return b.bracket(t, *x, *y);
}

/// Σ sign_i · term_i, or nullopt if any term is truncated.
Opt combine(const BVTable& t, std::initializer_list<std::pair<int, Opt>> terms) {
  Element out;
  for (const auto& [sign, e] : terms) {
    if (!e) return std::nullopt;
    out = add(out, scale(*e, sign));
  }
  return t.normalize(std::move(out));
}

int sgn(long long e) { return sign_of_parity(e); }

std::string names(const BVTable& t, const std::vector<std::size_t>& tuple) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? ", " : "") + t.monomial(tuple[i]).name;
  return s + ")";
}

/// Collects per-axiom results, keeping the lexicographically first failure.
class Collector {
 public:
  explicit Collector(const BVTable& t) : t_(t) {}

  void checked(const std::string& axiom) { report_.checked[axiom]++; }
  void skipped(const std::string& axiom) { report_.skipped[axiom]++; }
  /// lhs == rhs, both possibly truncated.
  void expect(const std::string& axiom, std::vector<std::size_t> tuple, const Opt& lhs, const Opt& rhs) {
    report_.checked[axiom];
    if (!lhs || !rhs) {
      skipped(axiom);
      return;
    }
    checked(axiom);
    if (*lhs == *rhs) return;
    fail(axiom, std::move(tuple), format_element(t_, *lhs) + " != " + format_element(t_, *rhs));
  }
  void fail(const std::string& axiom, std::vector<std::size_t> tuple, const std::string& detail) {
    auto it = first_.find(axiom);
    if (it != first_.end() && it->second.monomials <= tuple) return;
    first_[axiom] = AxiomViolation{axiom, tuple, "at " + names(t_, tuple) + ": " + detail};
  }
  void merge(const Collector& other) {
    for (const auto& [k, v] : other.report_.checked) report_.checked[k] += v;
    for (const auto& [k, v] : other.report_.skipped) report_.skipped[k] += v;
    for (const auto& [k, v] : other.first_) fail(k, v.monomials, "");
    for (const auto& [k, v] : other.first_)
      if (first_[k].monomials == v.monomials) first_[k] = v;
  }
  void declare(const std::string& axiom) { report_.checked[axiom]; }
  AxiomReport finish(const std::vector<std::string>& order) {
    for (const auto& axiom : order)
      if (auto it = first_.find(axiom); it != first_.end()) report_.violations.push_back(it->second);
    return report_;
  }

 private:
  const BVTable& t_;
  AxiomReport report_;
  std::map<std::string, AxiomViolation> first_;
};

/// Runs body(i, collector) in parallel over the first index and merges deterministically.
void over_first_index(const BVTable& t, Collector& into, const std::function<void(std::size_t, Collector&)>& body) {
  std::vector<Collector> parts(thread_count(), Collector(t));
  parallel_for(t.size(), [&](std::size_t i, std::size_t w) { body(i, parts[w]); });
  for (const auto& p : parts) into.merge(p);
}

bool homogeneous(const BVTable& t, const Element& e, int degree) {
  for (const auto& [k, c] : e)
    if (t.degree(k) != degree) return false;
  return true;
}

/// order(i) · e = 0 in the table.
bool annihilated_by_order(const BVTable& t, std::size_t i, const Element& e) {
  const Integer& m = t.monomial(i).order;
  if (m == 0 || t.ring().is_field()) return true;
  return t.normalize(scale(e, m)).empty();
}

const std::vector<std::string> kTableAxioms{"Unit", "Grading", "Torsion", "Commutativity", "Associativity"};

void table_checks(const BVTable& t, Collector& c) {
  for (const auto& a : kTableAxioms) c.declare(a);
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    c.expect("Unit", {i}, t.product(t.unit(), i), t.basis_element(i));
    c.expect("Unit", {i}, t.product(i, t.unit()), t.basis_element(i));
    for (std::size_t j = 0; j < n; ++j) {
      const auto& p = t.product(i, j);
      if (!p) {
        c.skipped("Grading");
        continue;
      }
      c.checked("Grading");
      if (!homogeneous(t, *p, t.degree(i) + t.degree(j))) c.fail("Grading", {i, j}, "product has the wrong degree");
      c.checked("Torsion");
      if (!annihilated_by_order(t, i, *p) || !annihilated_by_order(t, j, *p))
        c.fail("Torsion", {i, j}, "product is not killed by the order of a factor");
      const auto& q = t.product(j, i);
      c.expect("Commutativity", {i, j}, p, q ? Opt(t.normalize(scale(*q, sgn(1LL * t.degree(i) * t.degree(j))))) : std::nullopt);
    }
  }
  over_first_index(t, c, [&](std::size_t i, Collector& part) {
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Opt a = t.basis_element(i), b = t.basis_element(j), e = t.basis_element(k);
        part.expect("Associativity", {i, j, k}, mul(t, mul(t, a, b), e), mul(t, a, mul(t, b, e)));
      }
  });
}

}  // namespace

const AxiomViolation* AxiomReport::find(const std::string& axiom) const {
  for (const auto& v : violations)
    if (v.axiom == axiom) return &v;
  return nullptr;
}

AxiomReport check_table(const BVTable& t) {
  Collector c(t);
  table_checks(t, c);
  return c.finish(kTableAxioms);
}

AxiomReport verify_bv(const BVTable& t) {
  Collector c(t);
  table_checks(t, c);
  const std::size_t n = t.size();
  const bool char2 = t.ring().characteristic() == 2;
  for (const char* a : {"DeltaDegree", "DeltaTorsion", "DeltaSquare", "SquareIdentity", "SevenTerm"}) c.declare(a);

  for (std::size_t i = 0; i < n; ++i) {
    const auto& d = t.delta(i);
    if (!d) {
      c.skipped("DeltaDegree");
      continue;
    }
    c.checked("DeltaDegree");
    if (!homogeneous(t, *d, t.degree(i) + 1)) c.fail("DeltaDegree", {i}, "Δ" + t.monomial(i).name + " = " + format_element(t, *d));
    c.checked("DeltaTorsion");
    if (!annihilated_by_order(t, i, *d)) c.fail("DeltaTorsion", {i}, "Δ does not respect the order of the line");
    c.expect("DeltaSquare", {i}, del(t, d), Element{});
  }

  if (char2)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Opt a = t.basis_element(i), b = t.basis_element(j);
        Opt b2 = mul(t, b, b);
        c.expect("SquareIdentity", {i, j}, del(t, mul(t, a, b2)),
                 combine(t, {{1, mul(t, del(t, a), b2)}, {1, mul(t, a, del(t, b2))}}));
      }

  over_first_index(t, c, [&](std::size_t i, Collector& part) {
    const int da = t.degree(i);
    Opt a = t.basis_element(i), Da = del(t, a);
    for (std::size_t j = 0; j < n; ++j) {
      const int db = t.degree(j);
      Opt b = t.basis_element(j), Db = del(t, b), ab = mul(t, a, b), Dab = del(t, ab);
      for (std::size_t k = 0; k < n; ++k) {
        Opt e = t.basis_element(k), De = del(t, e);
        Opt lhs = del(t, mul(t, ab, e));
        Opt rhs = combine(t, {
                                 {1, mul(t, Dab, e)},
                                 {sgn(da), mul(t, a, del(t, mul(t, b, e)))},
                                 {sgn(1LL * (da - 1) * db), mul(t, b, del(t, mul(t, a, e)))},
                                 {-1, mul(t, mul(t, Da, b), e)},
                                 {-sgn(da), mul(t, mul(t, a, Db), e)},
                                 {-sgn(da + db), mul(t, ab, De)},
                             });
        part.expect("SevenTerm", {i, j, k}, lhs, rhs);
      }
    }
  });

  std::vector<std::string> order = kTableAxioms;
  for (const char* a : {"DeltaDegree", "DeltaTorsion", "DeltaSquare", "SquareIdentity", "SevenTerm"}) order.push_back(a);
  return c.finish(order);
}

BracketTable bracket_from_delta(const BVTable& t) {
  const std::size_t n = t.size();
  BracketTable out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const int da = t.degree(i);
      Opt a = t.basis_element(i), b = t.basis_element(j);
      Opt v = combine(t, {{1, del(t, mul(t, a, b))}, {-1, mul(t, del(t, a), b)}, {-sgn(da), mul(t, a, del(t, b))}});
      out.set(i, j, v ? Opt(t.normalize(scale(*v, sgn(da)))) : std::nullopt);
    }
  return out;
}

AxiomReport verify_gerstenhaber(const BVTable& t, const BracketTable& bracket) {
  if (bracket.size() != t.size()) throw std::invalid_argument("bracket table size does not match the product table");
  Collector c(t);
  table_checks(t, c);
  const std::size_t n = t.size();
  for (const char* a : {"DegreeViolation", "Antisymmetry", "Jacobi", "Poisson"}) c.declare(a);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& e = bracket.entry(i, j);
      if (!e) {
        c.skipped("DegreeViolation");
        continue;
      }
      c.checked("DegreeViolation");
      if (!homogeneous(t, *e, t.degree(i) + t.degree(j) + 1))
        c.fail("DegreeViolation", {i, j}, "bracket has degree other than |a|+|b|+1: " + format_element(t, *e));
      const auto& f = bracket.entry(j, i);
      c.expect("Antisymmetry", {i, j}, e,
               f ? Opt(t.normalize(scale(*f, -sgn(1LL * (t.degree(i) + 1) * (t.degree(j) + 1))))) : std::nullopt);
    }

  over_first_index(t, c, [&](std::size_t i, Collector& part) {
    const int da = t.degree(i);
    Opt a = t.basis_element(i);
    for (std::size_t j = 0; j < n; ++j) {
      const int db = t.degree(j);
      Opt b = t.basis_element(j), ab = br(t, bracket, a, b);
      for (std::size_t k = 0; k < n; ++k) {
        Opt e = t.basis_element(k);
        part.expect("Jacobi", {i, j, k}, br(t, bracket, a, br(t, bracket, b, e)),
                    combine(t, {{1, br(t, bracket, ab, e)}, {sgn(1LL * (da + 1) * (db + 1)), br(t, bracket, b, br(t, bracket, a, e))}}));
        part.expect("Poisson", {i, j, k}, br(t, bracket, a, mul(t, b, e)),
                    combine(t, {{1, mul(t, ab, e)}, {sgn(1LL * (da + 1) * db), mul(t, b, br(t, bracket, a, e))}}));
      }
    }
  });

  std::vector<std::string> order = kTableAxioms;
  for (const char* a : {"DegreeViolation", "Antisymmetry", "Jacobi", "Poisson"}) order.push_back(a);
  return c.finish(order);
}

AxiomReport verify_gerstenhaber(const BVTable& t) { return verify_gerstenhaber(t, bracket_from_delta(t)); }

BVTable reduce_mod_p(const BVTable& t, long long p) {
  if (t.ring().kind != Ring::Kind::Integers) throw UnsupportedRing("reduce_mod_p expects a table over Z");
  const Ring target = p == 0 ? Ring::rationals() : Ring::prime_field(p);
  std::vector<std::size_t> keep;
  std::vector<long> index(t.size(), -1);
  std::vector<Monomial> ms;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Integer& m = t.monomial(i).order;
    if (m != 0 && (p == 0 || m % p != 0)) continue;
    index[i] = static_cast<long>(keep.size());
    keep.push_back(i);
    ms.push_back({t.monomial(i).name, t.degree(i), 0});
  }
  BVTable out(target, ms, static_cast<std::size_t>(index.at(t.unit())));
  out.set_window(t.window());
  auto translate = [&](const Opt& e) -> Opt {
    if (!e) return std::nullopt;
    Element r;
    for (const auto& [k, c] : *e)
      if (index[k] >= 0) r[static_cast<std::size_t>(index[k])] = c;
    return r;
  };
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.set_delta(i, translate(t.delta(keep[i])));
    for (std::size_t j = 0; j < keep.size(); ++j) out.set_product(i, j, translate(t.product(keep[i], keep[j])));
  }
  return out;
}

std::optional<std::size_t> delta_rank(const BVTable& t, int degree) {
  if (!t.ring().is_prime_field()) throw UnsupportedRing("delta_rank is computed over prime fields");
  auto src = t.monomials_of_degree(degree);
  auto dst = t.monomials_of_degree(degree + 1);
  IntMatrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    const auto& d = t.delta(src[j]);
    if (!d) return std::nullopt;
    for (const auto& [k, c] : *d) {
      auto it = std::find(dst.begin(), dst.end(), k);
      m(static_cast<std::size_t>(it - dst.begin()), j) = c;
    }
  }
  return modp::rank(m, t.ring().p);
}

ReductionReport reduce_mod_p(const BVTable& t, long long p, const BVTable& reference) {
  ReductionReport report{reduce_mod_p(t, p), {}};
  const BVTable& r = report.reduced;
  if (!t.window() || !reference.window()) return report;
  const int lo = std::max(t.window()->lo, reference.window()->lo);
  const int hi = std::min(t.window()->hi, reference.window()->hi);
  for (int d = lo; d <= hi; ++d) {
    DegreeComparison row;
    row.degree = d;
    row.reduced_dim = r.monomials_of_degree(d).size();
    row.corrected_dim = row.reduced_dim;
    if (p != 0)
      for (auto i : t.monomials_of_degree(d - 1))
        if (t.monomial(i).order != 0 && t.monomial(i).order % p == 0) ++row.corrected_dim;
    row.reference_dim = reference.monomials_of_degree(d).size();
    if (p != 0) {
      row.reduced_delta_rank = delta_rank(r, d);
      row.reference_delta_rank = delta_rank(reference, d);
    }
    report.degrees.push_back(row);
  }
  return report;
}

bool ReductionReport::dimensions_match() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeComparison& d) { return d.reduced_dim == d.reference_dim; });
}

bool ReductionReport::corrected_dimensions_match() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeComparison& d) { return d.corrected_dim == d.reference_dim; });
}

bool ReductionReport::delta_ranks_match() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeComparison& d) {
    return d.reduced_delta_rank && d.reference_delta_rank && *d.reduced_delta_rank == *d.reference_delta_rank;
  });
}

TableComparison compare_tables(const BVTable& expected, const BVTable& actual) {
  TableComparison out;
  if (!(expected.ring() == actual.ring())) out.mismatches.push_back("rings differ: " + expected.ring().name() + " vs " + actual.ring().name());
  std::vector<long> map(expected.size(), -1);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const Monomial& m = expected.monomial(i);
    auto j = actual.find(m.name);
    if (!j) {
      out.mismatches.push_back("monomial " + m.name + " missing");
      continue;
    }
    if (actual.degree(*j) != m.degree || actual.monomial(*j).order != m.order)
      out.mismatches.push_back("monomial " + m.name + " has a different degree or order");
    map[i] = static_cast<long>(*j);
  }
  if (!out.mismatches.empty()) return out;
  auto translate = [&](const Element& e) {
    Element r;
    for (const auto& [k, c] : e) r[static_cast<std::size_t>(map[k])] = c;
    return actual.normalize(r);
  };
  auto compare = [&](const std::string& what, const Opt& x, const Opt& y) {
    if (!x) return;
    if (!y) {
      out.unknown.push_back(what);
      return;
    }
    if (translate(*x) != *y)
      out.mismatches.push_back(what + ": expected " + format_element(expected, *x) + ", got " + format_element(actual, *y));
  };
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const std::size_t ai = static_cast<std::size_t>(map[i]);
    compare("Δ(" + expected.monomial(i).name + ")", expected.delta(i), actual.delta(ai));
    for (std::size_t j = 0; j < expected.size(); ++j)
      compare(expected.monomial(i).name + " · " + expected.monomial(j).name, expected.product(i, j),
              actual.product(ai, static_cast<std::size_t>(map[j])));
  }
  return out;
}

}  // namespace hhbv
