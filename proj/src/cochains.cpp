#include "hhbv/cochains.hpp"

#include "hhbv/errors.hpp"
#include "hhbv/modp.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace hhbv {
namespace {

void require_f2(const GradedAlgebra& a) {
  if (!(a.ring().is_prime_field() && a.ring().p == 2))
    throw UnsupportedRing("cochain operations are implemented over F2 only, got " + a.ring().name());
}

int word_degree(const GradedAlgebra& a, const Word& w) {
  int d = 0;
  for (auto l : w) d += a.degree(l) + 1;
  return d;
}

// Adds c * v into the value of `word`, mod 2.
void accumulate(Cochain& f, const Word& word, const Vector& v, const Integer& c, std::size_t dim) {
  if (c % 2 == 0) return;
  auto [it, fresh] = f.values.try_emplace(word, Vector(dim));
  for (std::size_t i = 0; i < dim; ++i) it->second[i] = (it->second[i] + v[i]) % 2;
  if (is_zero_vector(it->second)) f.values.erase(it);
}

Vector mod2(Vector v) {
  for (auto& x : v) x = mod_floor(x, 2);
  return v;
}

}  // namespace

std::optional<std::size_t> Cochain::arity() const {
  if (values.empty()) return std::nullopt;
  const std::size_t p = values.begin()->first.size();
  for (const auto& [w, v] : values)
    if (w.size() != p) return std::nullopt;
  return p;
}

Cochain cochain_term(const GradedAlgebra& a, Word word, std::size_t value) {
  Cochain f;
  f.values.emplace(std::move(word), a.basis_vector(value));
  return f;
}

int cochain_degree(const GradedAlgebra& a, const Cochain& f) {
  std::optional<int> deg;
  for (const auto& [w, v] : f.values)
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (v[b] == 0) continue;
      const int d = a.degree(b) - word_degree(a, w);
      if (deg && *deg != d) throw std::invalid_argument("cochain is not homogeneous");
      deg = d;
    }
  if (!deg) throw std::invalid_argument("the zero cochain has no degree");
  return *deg;
}

Cochain operator+(const Cochain& f, const Cochain& g) {
  Cochain out = f;
  for (const auto& [w, v] : g.values) accumulate(out, w, v, 1, v.size());
  return out;
}

HochschildCochainComplex::HochschildCochainComplex(GradedAlgebra algebra, int max_arity)
    : algebra_(std::move(algebra)), max_arity_(max_arity) {
  require_f2(algebra_);
  if (max_arity < 0) throw std::invalid_argument("max arity must be non-negative");
  auto violations = validate(algebra_);
  if (!violations.empty())
    throw InvalidAlgebra("algebra rejected: " + to_string(violations.front().kind) + ": " + violations.front().detail);

  const auto ideal = algebra_.augmentation_ideal();
  int m = std::numeric_limits<int>::max();
  for (auto i : ideal) m = std::min(m, -(algebra_.degree(i) + 1));
  int min_value = 0;
  for (std::size_t b = 0; b < algebra_.dim(); ++b) min_value = std::min(min_value, algebra_.degree(b));
  completeness_bound_ = ideal.empty() ? std::numeric_limits<int>::max() / 2 : (max_arity + 1) * m + min_value;

  Word word;
  std::function<void()> extend = [&]() {
    for (std::size_t b = 0; b < algebra_.dim(); ++b) {
      CochainBasisElement e{word, b, algebra_.degree(b) - word_degree(algebra_, word)};
      auto& block = blocks_[e.degree];
      positions_[{word, b}] = block.size();
      block.push_back(std::move(e));
    }
    if (static_cast<int>(word.size()) == max_arity_) return;
    for (auto letter : ideal) {
      word.push_back(letter);
      extend();
      word.pop_back();
    }
  };
  extend();
}

std::vector<int> HochschildCochainComplex::degrees() const {
  std::vector<int> out;
  for (const auto& [d, b] : blocks_) out.push_back(d);
  return out;
}

const std::vector<CochainBasisElement>& HochschildCochainComplex::basis(int degree) const {
  static const std::vector<CochainBasisElement> empty;
  auto it = blocks_.find(degree);
  return it == blocks_.end() ? empty : it->second;
}

std::optional<std::size_t> HochschildCochainComplex::position(const Word& word, std::size_t value) const {
  auto it = positions_.find({word, value});
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

IntMatrix HochschildCochainComplex::differential(int degree) const {
  const auto& src = basis(degree);
  IntMatrix m(dim(degree - 1), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    Cochain image = d2(algebra_, cochain_term(algebra_, src[j].word, src[j].value));
    for (const auto& [w, v] : image.values)
      for (std::size_t b = 0; b < v.size(); ++b)
        if (v[b] != 0)
          if (auto pos = position(w, b)) m(*pos, j) = v[b];
  }
  return m;
}

std::vector<int> HochschildCochainComplex::certified_degrees() const {
  std::vector<int> out;
  for (const auto& [d, b] : blocks_)
    if (is_certified(d)) out.push_back(d);
  return out;
}

Vector HochschildCochainComplex::to_vector(const Cochain& f, int degree) const {
  Vector out(dim(degree));
  for (const auto& [w, v] : f.values)
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (v[b] == 0) continue;
      auto pos = position(w, b);
      if (!pos || basis(degree)[*pos].degree != degree)
        throw TruncationEscape("cochain term outside the degree " + std::to_string(degree) + " block");
      out[*pos] = mod_floor(out[*pos] + v[b], 2);
    }
  return out;
}

Cochain HochschildCochainComplex::from_vector(int degree, const Vector& v) const {
  Cochain f;
  const auto& b = basis(degree);
  for (std::size_t i = 0; i < b.size(); ++i)
    accumulate(f, b[i].word, algebra_.basis_vector(b[i].value), v[i], algebra_.dim());
  return f;
}

HochschildCochainComplex build_cochain_complex(const GradedAlgebra& a, int max_arity) { return HochschildCochainComplex(a, max_arity); }

Cochain d2(const GradedAlgebra& a, const Cochain& f) {
  require_f2(a);
  const std::size_t n = a.dim();
  const auto ideal = a.augmentation_ideal();
  Cochain out;
  for (const auto& [w, v] : f.values) {
    // a_1 f[sa_2|...] and f[...|sa_p] a_{p+1}
    for (auto letter : ideal) {
      Word front{letter};
      front.insert(front.end(), w.begin(), w.end());
      accumulate(out, front, mod2(a.multiply(a.basis_vector(letter), v)), 1, n);
      Word back = w;
      back.push_back(letter);
      accumulate(out, back, mod2(a.multiply(v, a.basis_vector(letter))), 1, n);
    }
    // f[...|s(a_i a_{i+1})|...]: split the letter at position i
    for (std::size_t i = 0; i < w.size(); ++i)
      for (auto x : ideal)
        for (auto y : ideal) {
          const Integer& c = a.product(x, y)[w[i]];
          if (c % 2 == 0) continue;
          Word split(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
          split.push_back(x);
          split.push_back(y);
          split.insert(split.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
          accumulate(out, split, v, c, n);
        }
  }
  return out;
}

Cochain cup(const GradedAlgebra& a, const Cochain& f, const Cochain& g) {
  require_f2(a);
  Cochain out;
  for (const auto& [wf, vf] : f.values)
    for (const auto& [wg, vg] : g.values) {
      Word w = wf;
      w.insert(w.end(), wg.begin(), wg.end());
      accumulate(out, w, mod2(a.multiply(vf, vg)), 1, a.dim());
    }
  return out;
}

Cochain brace(const GradedAlgebra& a, const Cochain& f, const Cochain& g) {
  require_f2(a);
  Cochain out;
  for (const auto& [wf, vf] : f.values)
    for (std::size_t i = 0; i < wf.size(); ++i)
      for (const auto& [wg, vg] : g.values) {
        const Integer& c = vg[wf[i]];  // Ā-component of g's value in the slot's letter
        if (c % 2 == 0) continue;
        Word w(wf.begin(), wf.begin() + static_cast<std::ptrdiff_t>(i));
        w.insert(w.end(), wg.begin(), wg.end());
        w.insert(w.end(), wf.begin() + static_cast<std::ptrdiff_t>(i) + 1, wf.end());
        accumulate(out, w, vf, c, a.dim());
      }
  return out;
}

Cochain gerst_bracket(const GradedAlgebra& a, const Cochain& f, const Cochain& g) { return brace(a, f, g) + brace(a, g, f); }

DualChain theta_hat(const GradedAlgebra& a, const Cochain& f) {
  if (!a.dualizing()) throw NotDualizing("theta_hat: algebra has no dualizing functional");
  const Functional& theta = *a.dualizing();
  DualChain out;
  for (const auto& [w, v] : f.values)
    for (std::size_t a0 = 0; a0 < a.dim(); ++a0) {
      Vector prod = a.multiply(v, a.basis_vector(a0));
      Integer c = 0;
      for (std::size_t b = 0; b < prod.size(); ++b) c += theta.values[b] * prod[b];
      c = a.ring().normalize(c);
      if (c != 0) out[{a0, w}] = c;
    }
  return out;
}

IntMatrix theta_hat_matrix(const HochschildCochainComplex& cochains, const HochschildChainComplex& chains, int degree) {
  const GradedAlgebra& a = cochains.algebra();
  if (!a.dualizing()) throw NotDualizing("theta_hat: algebra has no dualizing functional");
  const int chain_degree = -(degree + a.dualizing()->degree);
  const auto& src = cochains.basis(degree);
  IntMatrix m(chains.dim(chain_degree), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto& [key, c] : theta_hat(a, cochain_term(a, src[j].word, src[j].value))) {
      auto pos = chains.position(key.first, key.second);
      if (!pos) throw TruncationEscape("theta_hat: chain outside the word-length window");
      m(*pos, j) = c;
    }
  return m;
}

std::vector<NamedCochain> exterior_sphere_cochain_basis(int d, int max_power) {
  GradedAlgebra a = make_exterior_sphere(d, Ring::prime_field(2));
  const std::size_t one = a.unit(), x = a.index_of("x");
  std::vector<NamedCochain> out;
  for (int k = 0; k <= max_power; ++k) {
    Word w(static_cast<std::size_t>(k), x);
    const std::string power = k == 0 ? "" : k == 1 ? "f" : "f^" + std::to_string(k);
    out.push_back({k == 0 ? "1" : power, cochain_term(a, w, one)});
    out.push_back({k == 0 ? "g" : "g " + power, cochain_term(a, w, x)});
  }
  return out;
}

HHBVResult delta_on_HH(const GradedAlgebra& a, int max_word, const std::vector<NamedCochain>& names) {
  require_f2(a);
  if (!a.dualizing()) throw NotDualizing("delta_on_HH: algebra has no dualizing functional");
  const Ring f2 = Ring::prime_field(2);
  const int shift = a.dualizing()->degree;
  HochschildCochainComplex cochains(a, max_word);
  HochschildChainComplex chains(a, max_word);

  HHBVResult out;
  out.max_word = max_word;
  auto certified = [&](int e) {
    return cochains.is_certified(e) && chains.is_certified(-(e + shift)) && chains.is_certified(-(e + shift) + 1);
  };
  for (int e : cochains.certified_degrees()) {
    if (!certified(e)) continue;
    out.groups.emplace(e, homology(cochains.differential(e + 1), cochains.differential(e), f2));
  }

  // Per-degree basis of cocycle representatives and the change of basis from
  // group coordinates to monomial coordinates.
  struct Line {
    std::string name;
    int degree;
    Cochain rep;
  };
  std::vector<Line> lines;
  std::map<int, std::pair<std::size_t, IntMatrix>> to_monomials;  // degree → (first line, inverse basis matrix)
  const Cochain unit_cochain = cochain_term(a, {}, a.unit());

  for (const auto& [e, group] : out.groups) {
    if (group.generators() == 0) continue;
    std::vector<std::pair<std::string, Cochain>> chosen;
    modp::SpanBuilder span(group.generators(), 2);
    std::vector<Vector> coords;
    auto offer = [&](const std::string& name, const Cochain& rep) {
      Vector v = cochains.to_vector(rep, e);
      if (!group.is_cycle(v)) throw std::invalid_argument("named class " + name + " is not a cocycle");
      Vector c = group.coordinates(v);
      if (span.add(c)) {
        chosen.emplace_back(name, rep);
        coords.push_back(c);
      }
    };
    for (const auto& n : names)
      if (!n.cochain.is_zero() && cochain_degree(a, n.cochain) == e) offer(n.name, n.cochain);
    if (chosen.size() != group.generators()) {
      chosen.clear();
      coords.clear();
      span = modp::SpanBuilder(group.generators(), 2);
      if (e == 0) offer("1", unit_cochain);
      for (std::size_t i = 0; i < group.generators(); ++i)
        offer("h" + std::to_string(e) + "_" + std::to_string(i), cochains.from_vector(e, group.representatives[i]));
    }
    IntMatrix basis = IntMatrix::from_columns(coords, group.generators());
    to_monomials.emplace(e, std::make_pair(lines.size(), *modp::inverse(basis, 2)));
    for (auto& [name, rep] : chosen) lines.push_back({name, e, rep});
  }

  std::vector<Monomial> monomials;
  for (const auto& l : lines) monomials.push_back({l.name, l.degree, 0});

  // Monomial coordinates of a cocycle of degree e, or nullopt outside the certified degrees.
  auto express = [&](const Cochain& c, int e) -> std::optional<Element> {
    if (!certified(e)) return std::nullopt;
    Element el;
    auto g = out.groups.find(e);
    if (c.is_zero() || g == out.groups.end() || g->second.generators() == 0) return el;
    const auto& [first, inv] = to_monomials.at(e);
    Vector v = cochains.to_vector(c, e);
    if (!g->second.is_cycle(v)) throw std::logic_error("expected a cocycle in degree " + std::to_string(e));
    Vector coords = inv * g->second.coordinates(v);
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] % 2 != 0) el[first + i] = 1;
    return el;
  };

  auto unit_el = express(unit_cochain, 0);
  if (!unit_el || unit_el->size() != 1 || unit_el->begin()->second != 1)
    throw std::invalid_argument("delta_on_HH: the unit class is not one of the basis lines");
  BVTable table(f2, monomials, unit_el->begin()->first);

  out.cochain_bracket = BracketTable(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = 0; j < lines.size(); ++j) {
      table.set_product(i, j, express(cup(a, lines[i].rep, lines[j].rep), lines[i].degree + lines[j].degree));
      out.cochain_bracket.set(i, j, express(gerst_bracket(a, lines[i].rep, lines[j].rep), lines[i].degree + lines[j].degree + 1));
    }

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int e = lines[i].degree;
    if (!certified(e + 1)) {
      table.set_delta(i, std::nullopt);
      continue;
    }
    Vector dual = theta_hat_matrix(cochains, chains, e) * cochains.to_vector(lines[i].rep, e);
    Vector image = dual_connes(chains, e + shift) * dual;
    for (auto& x : image) x = mod_floor(x, 2);
    auto pre = modp::solve(theta_hat_matrix(cochains, chains, e + 1), image, 2);
    if (!pre) throw std::logic_error("theta_hat is not invertible in degree " + std::to_string(e + 1));
    table.set_delta(i, express(cochains.from_vector(e + 1, *pre), e + 1));
  }

  if (!out.groups.empty()) {
    int hi = out.groups.begin()->first;
    while (certified(hi + 1)) ++hi;
    table.set_window(DegreeWindow{out.groups.begin()->first, hi});
  }
  out.table = std::move(table);
  for (const auto& l : lines) out.representatives.push_back(l.rep);
  return out;
}

}  // namespace hhbv
