#include "hhbv/hochschild.hpp"

#include "hhbv/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace hhbv {
namespace {

long long suspended_degree(const GradedAlgebra& a, std::size_t letter) { return a.degree(letter) + 1; }

}  // namespace

int chain_degree(const GradedAlgebra& a, std::size_t a0, const Word& word) {
  int d = a.degree(a0);
  for (auto w : word) d += a.degree(w) + 1;
  return d;
}

HochschildChainComplex::HochschildChainComplex(GradedAlgebra algebra, int max_word)
    : algebra_(std::move(algebra)), max_word_(max_word) {
  if (max_word < 0) throw std::invalid_argument("max word length must be non-negative");
  auto violations = validate(algebra_);
  if (!violations.empty())
    throw InvalidAlgebra("algebra rejected: " + to_string(violations.front().kind) + ": " + violations.front().detail);

  const auto ideal = algebra_.augmentation_ideal();
  int m = std::numeric_limits<int>::max();
  for (auto i : ideal) m = std::min(m, -(algebra_.degree(i) + 1));
  completeness_bound_ = ideal.empty() ? std::numeric_limits<int>::min() / 2 : -(max_word + 1) * m;

  Word word;
  std::function<void()> extend = [&]() {
    for (std::size_t a0 = 0; a0 < algebra_.dim(); ++a0) {
      ChainBasisElement e{a0, word, chain_degree(algebra_, a0, word)};
      auto& block = blocks_[e.degree];
      positions_[{a0, word}] = block.size();
      block.push_back(std::move(e));
    }
    if (static_cast<int>(word.size()) == max_word_) return;
    for (auto letter : ideal) {
      word.push_back(letter);
      extend();
      word.pop_back();
    }
  };
  extend();
}

std::vector<int> HochschildChainComplex::degrees() const {
  std::vector<int> out;
  for (const auto& [d, b] : blocks_) out.push_back(d);
  return out;
}

const std::vector<ChainBasisElement>& HochschildChainComplex::basis(int degree) const {
  static const std::vector<ChainBasisElement> empty;
  auto it = blocks_.find(degree);
  return it == blocks_.end() ? empty : it->second;
}

std::optional<std::size_t> HochschildChainComplex::position(std::size_t a0, const Word& word) const {
  auto it = positions_.find({a0, word});
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

std::map<std::pair<std::size_t, Word>, Integer> HochschildChainComplex::apply_differential(const ChainBasisElement& e) const {
  const GradedAlgebra& a = algebra_;
  std::map<std::pair<std::size_t, Word>, Integer> out;
  const Word& w = e.word;
  const std::size_t k = w.size();
  if (k == 0) return out;

  // (-1)^{|a|} a a_1 [sa_2|...|sa_k]
  {
    const int sign = sign_of_parity(a.degree(e.a0));
    const Vector& prod = a.product(e.a0, w[0]);
    Word rest(w.begin() + 1, w.end());
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (prod[c] != 0) out[{c, rest}] += sign * prod[c];
  }
  // Σ (-1)^{ε_i} a[...|s(a_i a_{i+1})|...], products projected onto Ā
  long long eps = a.degree(e.a0);
  for (std::size_t i = 0; i + 1 < k; ++i) {
    eps += suspended_degree(a, w[i]);
    const int sign = sign_of_parity(eps);
    const Vector& prod = a.product(w[i], w[i + 1]);
    for (std::size_t c = 0; c < a.dim(); ++c) {
      if (prod[c] == 0 || !a.in_augmentation_ideal(c)) continue;
      Word merged(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      merged.push_back(c);
      merged.insert(merged.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
      out[{e.a0, merged}] += sign * prod[c];
    }
  }
  // -(-1)^{|sa_k| ε_{k-1}} a_k a [sa_1|...|sa_{k-1}]
  {
    long long eps_before = a.degree(e.a0);
    for (std::size_t i = 0; i + 1 < k; ++i) eps_before += suspended_degree(a, w[i]);
    const int sign = -sign_of_parity(suspended_degree(a, w[k - 1]) * eps_before);
    const Vector& prod = a.product(w[k - 1], e.a0);
    Word front(w.begin(), w.end() - 1);
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (prod[c] != 0) out[{c, front}] += sign * prod[c];
  }
  for (auto it = out.begin(); it != out.end();) {
    it->second = ring().normalize(it->second);
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

std::map<std::pair<std::size_t, Word>, Integer> HochschildChainComplex::apply_connes(const ChainBasisElement& e) const {
  const GradedAlgebra& a = algebra_;
  std::map<std::pair<std::size_t, Word>, Integer> out;
  if (!a.in_augmentation_ideal(e.a0)) return out;  // s(1) = 0
  Word letters{e.a0};
  letters.insert(letters.end(), e.word.begin(), e.word.end());
  const std::size_t p = e.word.size();
  long long total = 0;
  for (auto l : letters) total += suspended_degree(a, l);
  long long before = 0;
  for (std::size_t i = 0; i <= p; ++i) {
    const int sign = sign_of_parity(before * (total - before));
    Word rotated(letters.begin() + static_cast<std::ptrdiff_t>(i), letters.end());
    rotated.insert(rotated.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(i));
    out[{a.unit(), rotated}] += sign;
    before += suspended_degree(a, letters[i]);
  }
  for (auto it = out.begin(); it != out.end();) {
    it->second = ring().normalize(it->second);
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

IntMatrix HochschildChainComplex::differential(int degree) const {
  const auto& src = basis(degree);
  IntMatrix m(dim(degree - 1), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto& [key, c] : apply_differential(src[j])) m(*position(key.first, key.second), j) = c;
  return m;
}

IntMatrix HochschildChainComplex::connes(int degree) const {
  const auto& src = basis(degree);
  IntMatrix m(dim(degree + 1), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto& [key, c] : apply_connes(src[j]))
      if (auto pos = position(key.first, key.second)) m(*pos, j) = c;
  return m;
}

std::vector<int> HochschildChainComplex::certified_degrees() const {
  std::vector<int> out;
  if (blocks_.empty()) return out;
  for (int d = 0; d >= blocks_.begin()->first; --d)
    if (is_certified(d)) out.push_back(d);
  return out;
}

void HochschildChainComplex::require_certified(std::span<const int> degrees) const {
  std::vector<int> bad;
  for (int d : degrees)
    if (!is_certified(d)) bad.push_back(d);
  if (bad.empty()) return;
  std::ostringstream msg;
  msg << "word-length window L=" << max_word_ << " does not certify degree(s)";
  for (int d : bad) msg << ' ' << d;
  throw WindowTooSmall(msg.str(), bad);
}

HochschildChainComplex build_chain_complex(const GradedAlgebra& a, int max_word) { return HochschildChainComplex(a, max_word); }

std::map<int, IntMatrix> connes_B(const GradedAlgebra& a, int max_word) {
  HochschildChainComplex c(a, max_word);
  std::map<int, IntMatrix> out;
  for (int d : c.degrees())
    if (c.is_complete(d + 1)) out.emplace(d, c.connes(d));
  return out;
}

IntMatrix dual_differential(const HochschildChainComplex& c, int dual_degree) {
  const int chain = -dual_degree;
  return c.differential(chain + 1).transposed().scaled(sign_of_parity(dual_degree + 1)).reduced(c.ring());
}

IntMatrix dual_connes(const HochschildChainComplex& c, int dual_degree) {
  const int chain = -dual_degree;
  return c.connes(chain - 1).transposed().scaled(sign_of_parity(dual_degree)).reduced(c.ring());
}

AbelianGroup DualHochschild::delta_cokernel(int dual_degree) const {
  auto it = delta.find(dual_degree);
  if (it == delta.end())
    throw WindowTooSmall("Δ out of degree " + std::to_string(dual_degree) + " is not certified", {dual_degree, dual_degree + 1});
  return cokernel_on_homology(it->second, groups.at(dual_degree + 1));
}

void DualHochschild::require_degrees(int lo, int hi) const {
  std::vector<int> missing;
  for (int e = lo; e <= hi; ++e)
    if (!groups.count(e)) missing.push_back(e);
  if (missing.empty()) return;
  std::string list;
  for (int e : missing) list += " " + std::to_string(e);
  throw WindowTooSmall("WindowTooSmall: degrees" + list + " are not certified with max word length " +
                           std::to_string(complex.max_word()),
                       missing);
}

GradedAlgebra change_ring(const GradedAlgebra& a, const Ring& ring) {
  if (a.ring() == ring) return a;
  if (a.ring().kind != Ring::Kind::Integers && !(ring.kind == Ring::Kind::Rationals && a.ring().kind == Ring::Kind::Rationals))
    throw UnsupportedRing("change_ring: only algebras over Z can be moved to another ring");
  GradedAlgebra out(ring, a.basis(), a.unit());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.set_product(i, j, a.product(i, j));
  if (a.dualizing()) {
    Functional theta = *a.dualizing();
    for (auto& v : theta.values) v = ring.normalize(v);
    out.set_dualizing(theta);
  }
  out.set_graded_commutative(a.graded_commutative());
  return out;
}

DualHochschild hh_via_dual(const GradedAlgebra& a, const Ring& ring, int max_word) {
  DualHochschild out{HochschildChainComplex(change_ring(a, ring), max_word), a.dualizing() ? a.dualizing()->degree : 0, {}, {}};
  const HochschildChainComplex& c = out.complex;
  for (int chain : c.certified_degrees()) {
    const int e = -chain;
    IntMatrix d_in = dual_differential(c, e + 1);
    IntMatrix d_out = dual_differential(c, e);
    out.groups.emplace(e, homology(d_in, d_out, c.ring()));
  }
  for (const auto& [e, group] : out.groups) {
    auto next = out.groups.find(e + 1);
    if (next == out.groups.end()) continue;
    out.delta.emplace(e, induced_map_on_homology(dual_connes(c, e), group, next->second));
  }
  return out;
}

}  // namespace hhbv
