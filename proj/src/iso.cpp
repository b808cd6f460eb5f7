#include "hhbv/iso.hpp"

#include "hhbv/bv_verify.hpp"
#include "hhbv/errors.hpp"
#include "hhbv/modp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hhbv {
namespace {

bool is_unit_coefficient(const Ring& ring, const Integer& c) {
  if (ring.is_field()) return ring.normalize(c) != 0;
  return c == 1 || c == -1;
}

Integer unit_inverse(const Ring& ring, const Integer& c) {
  if (ring.is_prime_field()) return inverse_mod(ring.normalize(c), ring.p);
  if (ring.kind == Ring::Kind::Rationals) throw UnsupportedRing("iso search over Q is not supported");
  return c;
}

/// m = coeff · left · right
struct Factorization {
  std::size_t left, right;
  Integer coeff;
};

/// Single-term product c·m with c a unit, if any.
std::optional<std::pair<std::size_t, Integer>> monomial_product(const BVTable& t, std::size_t i, std::size_t j) {
  const auto& p = t.product(i, j);
  if (!p || p->size() != 1) return std::nullopt;
  const auto& [m, c] = *p->begin();
  if (!is_unit_coefficient(t.ring(), c)) return std::nullopt;
  return std::make_pair(m, c);
}

/// Factorizations of every monomial through the generators, in closure order.
std::vector<std::pair<std::size_t, Factorization>> closure(const BVTable& t, const std::vector<std::size_t>& gens) {
  std::vector<bool> reached(t.size(), false);
  reached[t.unit()] = true;
  for (auto g : gens) reached.at(g) = true;
  std::vector<std::size_t> order(gens.begin(), gens.end());
  std::vector<std::pair<std::size_t, Factorization>> out;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t x = 0; x < order.size(); ++x)
      for (std::size_t y = 0; y < order.size(); ++y) {
        auto mp = monomial_product(t, order[x], order[y]);
        if (!mp || reached[mp->first]) continue;
        reached[mp->first] = true;
        out.push_back({mp->first, {order[x], order[y], unit_inverse(t.ring(), mp->second)}});
        order.push_back(mp->first);
        grew = true;
      }
  }
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!reached[i]) missing.push_back(t.monomial(i).name);
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw NotFinitelyGenerated("monomials not generated inside the table: " + list);
  }
  return out;
}

/// Candidate images of a generator: nonzero elements of its degree in the target.
std::vector<Element> candidate_images(const BVTable& target, int degree) {
  auto lines = target.monomials_of_degree(degree);
  const Ring& ring = target.ring();
  std::vector<std::vector<Integer>> ranges;
  for (auto j : lines) {
    std::vector<Integer> r;
    if (ring.is_prime_field()) {
      for (long long c = 0; c < ring.p; ++c) r.push_back(c);
    } else if (target.monomial(j).order != 0) {
      for (Integer c = 0; c < target.monomial(j).order; ++c) r.push_back(c);
    } else {
      r = {0, 1, -1};
    }
    ranges.push_back(std::move(r));
  }
  std::vector<Element> out;
  std::vector<std::size_t> digit(lines.size(), 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < digit.size() && ++digit[pos] == ranges[pos].size()) digit[pos++] = 0;
    if (pos == digit.size()) break;
    Element e;
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (ranges[i][digit[i]] != 0) e[lines[i]] = ranges[i][digit[i]];
    out.push_back(std::move(e));
  }
  return out;
}

bool in_window(const BVTable& t, int degree) { return t.window() && t.window()->contains(degree); }

/// Bijectivity of one degree block of the map.
bool block_is_bijective(const BVTable& source, const BVTable& target, const IntMatrix& m, int degree) {
  if (m.rows() != m.cols()) return false;
  const Ring& ring = source.ring();
  if (ring.is_prime_field()) return modp::rank(m, ring.p) == m.rows();
  auto src = source.monomials_of_degree(degree), dst = target.monomials_of_degree(degree);
  std::vector<std::size_t> free_r, tors_r, free_c, tors_c;
  for (std::size_t r = 0; r < dst.size(); ++r) (target.monomial(dst[r]).order == 0 ? free_r : tors_r).push_back(r);
  for (std::size_t c = 0; c < src.size(); ++c) (source.monomial(src[c]).order == 0 ? free_c : tors_c).push_back(c);
  if (free_r.size() != free_c.size()) return false;
  for (auto r : free_r)
    for (auto c : tors_c)
      if (m(r, c) != 0) return false;
  auto sub = [&](const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    IntMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
    return s;
  };
  Integer det = determinant(sub(free_r, free_c));
  if (det != 1 && det != -1) return false;
  if (tors_r.empty()) return true;
  Integer orders = 1;
  for (auto r : tors_r) orders = orders * target.monomial(dst[r]).order / gcd(orders, target.monomial(dst[r]).order);
  return gcd(determinant(sub(tors_r, tors_c)), orders) == 1;
}

struct Search {
  const BVTable& source;
  const BVTable& target;
  std::vector<std::size_t> gens;
  std::vector<std::pair<std::size_t, Factorization>> steps;
  std::vector<std::vector<Element>> candidates;
  bool conclusive = true;

  Search(const BVTable& s, const BVTable& t, std::vector<std::size_t> g) : source(s), target(t), gens(std::move(g)) {
    if (!(s.ring() == t.ring())) throw std::invalid_argument("iso search: rings differ");
    steps = closure(s, gens);
    for (auto g : gens) {
      candidates.push_back(candidate_images(t, s.degree(g)));
      if (!in_window(s, s.degree(g)) || !in_window(t, s.degree(g))) conclusive = false;
    }
    if (!s.window() || !t.window()) conclusive = false;
  }

  std::vector<std::optional<Element>> images_for(const std::vector<Element>& gen_images) const {
    std::vector<std::optional<Element>> img(source.size());
    img[source.unit()] = target.basis_element(target.unit());
    for (std::size_t i = 0; i < gens.size(); ++i) img[gens[i]] = gen_images[i];
    for (const auto& [m, f] : steps) {
      if (!img[f.left] || !img[f.right]) continue;
      auto p = target.multiply(*img[f.left], *img[f.right]);
      if (p) img[m] = target.normalize(scale(*p, f.coeff));
    }
    return img;
  }

  /// Algebra isomorphism on the window, or nullopt.
  std::optional<IsoWitness> check(const std::vector<Element>& gen_images) {
    IsoWitness w;
    w.images = images_for(gen_images);
    for (std::size_t i = 0; i < source.size(); ++i)
      for (std::size_t j = 0; j < source.size(); ++j) {
        const auto& p = source.product(i, j);
        if (!p || !w.images[i] || !w.images[j]) continue;
        auto lhs = w.apply(target, *p);
        auto rhs = target.multiply(*w.images[i], *w.images[j]);
        if (lhs && rhs && *lhs != *rhs) return std::nullopt;
      }
    if (source.window() && target.window()) {
      const int lo = std::max(source.window()->lo, target.window()->lo);
      const int hi = std::min(source.window()->hi, target.window()->hi);
      for (int d = lo; d <= hi; ++d) {
        for (auto i : source.monomials_of_degree(d))
          if (!w.images[i]) {
            conclusive = false;
            return std::nullopt;
          }
        if (!block_is_bijective(source, target, w.degree_matrix(source, target, d), d)) return std::nullopt;
      }
    }
    w.preserves_product = true;
    return w;
  }

  AlgebraMapSearch run() {
    AlgebraMapSearch out;
    out.generators = gens;
    std::vector<std::size_t> digit(gens.size(), 0);
    for (const auto& c : candidates)
      if (c.empty()) {
        out.conclusive = conclusive;
        return out;
      }
    while (true) {
      std::vector<Element> chosen;
      for (std::size_t i = 0; i < gens.size(); ++i) chosen.push_back(candidates[i][digit[i]]);
      if (auto w = check(chosen)) out.maps.push_back(std::move(*w));
      std::size_t pos = 0;
      while (pos < digit.size() && ++digit[pos] == candidates[pos].size()) digit[pos++] = 0;
      if (pos == digit.size()) break;
    }
    out.conclusive = conclusive;
    return out;
  }
};

std::string difference(const BVTable& t, const Element& a, const Element& b) {
  Element d = t.normalize(subtract(a, b));
  std::string names;
  for (const auto& [k, c] : d) names += (names.empty() ? "" : ", ") + t.monomial(k).name;
  return names;
}

/// First monomial (Δ mode) or pair (bracket mode) where w fails to intertwine.
std::optional<std::pair<std::vector<std::size_t>, std::string>> first_failure(const BVTable& t1, const BVTable& t2,
                                                                              const IsoWitness& w, bool bracket_mode,
                                                                              const BracketTable* b1, const BracketTable* b2) {
  if (!bracket_mode) {
    for (std::size_t i = 0; i < t1.size(); ++i) {
      const auto& d = t1.delta(i);
      if (!d || !w.images[i]) continue;
      auto lhs = w.apply(t2, *d);
      auto rhs = t2.apply_delta(*w.images[i]);
      if (!lhs || !rhs || *lhs == *rhs) continue;
      return std::make_pair(std::vector<std::size_t>{i}, "Δ(" + t1.monomial(i).name + "): image of Δ is " + format_element(t2, *lhs) +
                                                             ", Δ of image is " + format_element(t2, *rhs) + "; they differ on " +
                                                             difference(t2, *lhs, *rhs));
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < t1.size(); ++i)
    for (std::size_t j = 0; j < t1.size(); ++j) {
      const auto& e = b1->entry(i, j);
      if (!e || !w.images[i] || !w.images[j]) continue;
      auto lhs = w.apply(t2, *e);
      auto rhs = b2->bracket(t2, *w.images[i], *w.images[j]);
      if (!lhs || !rhs || *lhs == *rhs) continue;
      return std::make_pair(std::vector<std::size_t>{i, j}, "{" + t1.monomial(i).name + ", " + t1.monomial(j).name + "}: image is " +
                                                                format_element(t2, *lhs) + ", bracket of images is " +
                                                                format_element(t2, *rhs) + "; they differ on " +
                                                                difference(t2, *lhs, *rhs));
    }
  return std::nullopt;
}

std::optional<std::string> precheck(const BVTable& t1, const BVTable& t2) {
  if (!(t1.ring() == t2.ring())) return "rings differ";
  if (t1.window() != t2.window()) return "windows differ";
  std::set<int> degrees;
  for (int d : t1.degrees()) degrees.insert(d);
  for (int d : t2.degrees()) degrees.insert(d);
  for (int d : degrees) {
    if (t1.window() && !t1.window()->contains(d)) continue;
    if (t1.monomials_of_degree(d).size() != t2.monomials_of_degree(d).size()) return "dimensions differ in degree " + std::to_string(d);
  }
  return std::nullopt;
}

IsoDecision decide(const BVTable& t1, const BVTable& t2, bool bracket_mode) {
  IsoDecision out;
  if (auto why = precheck(t1, t2)) {
    out.reason = *why;
    out.conclusive = true;
    return out;
  }
  Search search(t1, t2, infer_generators(t1));
  AlgebraMapSearch maps = search.run();
  out.generators = maps.generators;
  out.conclusive = maps.conclusive;
  BracketTable b1, b2;
  if (bracket_mode) {
    b1 = bracket_from_delta(t1);
    b2 = bracket_from_delta(t2);
  }
  for (auto& w : maps.maps) {
    auto fail = first_failure(t1, t2, w, bracket_mode, &b1, &b2);
    if (!fail) {
      (bracket_mode ? w.preserves_bracket : w.preserves_delta) = true;
      out.isomorphic = true;
      out.witness = w;
      out.reason = bracket_mode ? "algebra isomorphism intertwining the brackets" : "algebra isomorphism intertwining Δ";
      return out;
    }
    Refutation r;
    for (auto g : maps.generators) r.generator_images.push_back(w.images[g]);
    r.monomials = fail->first;
    r.detail = fail->second;
    out.refutations.push_back(std::move(r));
  }
  out.reason = maps.maps.empty() ? "no algebra isomorphism on the window"
                                 : std::to_string(maps.maps.size()) + " algebra isomorphism(s), none intertwining " +
                                       (bracket_mode ? "the brackets" : "Δ");
  if (!out.conclusive) throw WindowNonConclusive("window too small to refute: " + out.reason);
  return out;
}

}  // namespace

std::optional<Element> IsoWitness::apply(const BVTable& target, const Element& x) const {
  Element out;
  for (const auto& [i, c] : x) {
    if (!images.at(i)) return std::nullopt;
    out = add(out, scale(*images[i], c));
  }
  return target.normalize(std::move(out));
}

IntMatrix IsoWitness::degree_matrix(const BVTable& source, const BVTable& target, int degree) const {
  auto src = source.monomials_of_degree(degree), dst = target.monomials_of_degree(degree);
  IntMatrix m(dst.size(), src.size());
  for (std::size_t c = 0; c < src.size(); ++c) {
    if (!images[src[c]]) throw TruncationEscape("image of " + source.monomial(src[c]).name + " is not determined");
    for (const auto& [k, v] : *images[src[c]]) {
      auto it = std::find(dst.begin(), dst.end(), k);
      if (it == dst.end()) throw std::logic_error("map does not preserve degrees");
      m(static_cast<std::size_t>(it - dst.begin()), c) = v;
    }
  }
  return m;
}

std::vector<std::size_t> infer_generators(const BVTable& t) {
  std::vector<bool> decomposable(t.size(), false);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (i == t.unit() || j == t.unit()) continue;
      if (auto mp = monomial_product(t, i, j)) decomposable[mp->first] = true;
    }
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (i != t.unit() && !decomposable[i]) gens.push_back(i);
  closure(t, gens);
  return gens;
}

AlgebraMapSearch enumerate_algebra_isomorphisms(const BVTable& source, const BVTable& target,
                                                std::optional<std::vector<std::size_t>> generators) {
  Search s(source, target, generators ? *generators : infer_generators(source));
  return s.run();
}

AlgebraMapSearch enumerate_algebra_automorphisms(const BVTable& t, std::optional<std::vector<std::size_t>> generators) {
  return enumerate_algebra_isomorphisms(t, t, std::move(generators));
}

IsoDecision bv_isomorphic(const BVTable& t1, const BVTable& t2) { return decide(t1, t2, false); }

IsoDecision gerstenhaber_isomorphic(const BVTable& t1, const BVTable& t2) { return decide(t1, t2, true); }

bool recheck_refutation(const BVTable& t1, const BVTable& t2, const std::vector<std::size_t>& generators, const Refutation& r,
                        bool bracket_mode) {
  Search s(t1, t2, generators);
  std::vector<Element> gen_images;
  for (const auto& g : r.generator_images) {
    if (!g) return false;
    gen_images.push_back(*g);
  }
  IsoWitness w;
  w.images = s.images_for(gen_images);
  if (!bracket_mode) {
    const std::size_t i = r.monomials.at(0);
    if (!t1.delta(i) || !w.images[i]) return false;
    auto lhs = w.apply(t2, *t1.delta(i));
    auto rhs = t2.apply_delta(*w.images[i]);
    return lhs && rhs && *lhs != *rhs;
  }
  const std::size_t i = r.monomials.at(0), j = r.monomials.at(1);
  auto b1 = bracket_from_delta(t1), b2 = bracket_from_delta(t2);
  if (!b1.entry(i, j) || !w.images[i] || !w.images[j]) return false;
  auto lhs = w.apply(t2, *b1.entry(i, j));
  auto rhs = b2.bracket(t2, *w.images[i], *w.images[j]);
  return lhs && rhs && *lhs != *rhs;
}

namespace {

/// Inverse images of every monomial of t under w (nullopt where unknown).
std::vector<std::optional<Element>> inverse_images(const BVTable& t, const IsoWitness& w) {
  std::vector<std::optional<Element>> inv(t.size());
  for (int d : t.degrees()) {
    auto lines = t.monomials_of_degree(d);
    IntMatrix m;
    try {
      m = w.degree_matrix(t, t, d);
    } catch (const TruncationEscape&) {
      continue;
    }
    // Solve m x = e_j for each line j of this degree.
    for (std::size_t j = 0; j < lines.size(); ++j) {
      Vector rhs(lines.size());
      rhs[j] = 1;
      std::optional<Vector> x;
      if (t.ring().is_prime_field()) {
        x = modp::solve(m, rhs, t.ring().p);
      } else {
        // Over Z the supported automorphisms are involutions: w^{-1} = w.
        IntMatrix sq = m * m;
        for (std::size_t r = 0; r < sq.rows(); ++r)
          for (std::size_t c = 0; c < sq.cols(); ++c)
            if (reduce_by_order(sq(r, c) - (r == c ? 1 : 0), t.monomial(lines[r]).order) != 0)
              throw std::invalid_argument("transport over Z needs an involution");
        x = m.column(j);
      }
      if (!x) continue;
      Element e;
      for (std::size_t k = 0; k < lines.size(); ++k)
        if ((*x)[k] != 0) e[lines[k]] = (*x)[k];
      inv[lines[j]] = t.normalize(e);
    }
  }
  return inv;
}

}  // namespace

BVTable transport_by_involution(const BVTable& t, const IsoWitness& w) {
  auto inv = inverse_images(t, w);
  BVTable out = t;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::optional<Element> v;
    if (inv[i])
      if (auto d = t.apply_delta(*inv[i])) v = w.apply(t, *d);
    out.set_delta(i, v);
  }
  return out;
}

BracketTable transport_bracket(const BVTable& t, const BracketTable& b, const IsoWitness& w) {
  auto inv = inverse_images(t, w);
  BracketTable out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) {
      std::optional<Element> v;
      if (inv[i] && inv[j])
        if (auto x = b.bracket(t, *inv[i], *inv[j])) v = w.apply(t, *x);
      out.set(i, j, v);
    }
  return out;
}

}  // namespace hhbv
