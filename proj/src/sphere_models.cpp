#include "hhbv/sphere_models.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace hhbv {
namespace {

struct Line {
  std::string name;
  int degree;
  Integer order = 0;
};

using Terms = std::vector<std::pair<std::string, Integer>>;

std::string power(const std::string& letter, int k) {
  if (k == 0) return "";
  if (k == 1) return letter;
  return letter + "^" + std::to_string(k);
}

std::string join(const std::string& a, const std::string& b) {
  if (a.empty()) return b.empty() ? "1" : b;
  return b.empty() ? a : a + " " + b;
}

/// Sorts lines by degree (stable) and fills the table; a term naming a line
/// that does not exist makes the entry truncated.
BVTable assemble(const Ring& ring, std::vector<Line> lines, const std::function<Terms(const Line&, const Line&)>& product,
                 const std::function<Terms(const Line&)>& delta, std::optional<DegreeWindow> window) {
  std::stable_sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) { return x.degree < y.degree; });
  std::vector<Monomial> ms;
  std::map<std::string, std::size_t> index;
  for (const auto& l : lines) {
    index[l.name] = ms.size();
    ms.push_back({l.name, l.degree, l.order});
  }
  BVTable t(ring, ms, index.at("1"));
  t.set_window(window);
  auto build = [&](const Terms& terms) -> std::optional<Element> {
    Element e;
    for (const auto& [name, c] : terms) {
      const Integer r = ring.normalize(c);
      if (r == 0) continue;
      auto it = index.find(name);
      if (it == index.end()) return std::nullopt;
      e[it->second] += r;
    }
    return e;
  };
  for (std::size_t i = 0; i < lines.size(); ++i) {
    t.set_delta(i, build(delta(lines[i])));
    for (std::size_t j = 0; j < lines.size(); ++j) t.set_product(i, j, build(product(lines[i], lines[j])));
  }
  return t;
}

/// Λe ⊗ R[p] truncated at p^K: lines p^k and e p^k, with e p^k = e·p^k.
struct TwoLetters {
  std::string e;
  int e_degree;
  std::string p;
  int p_degree;
  int max_power;

  std::vector<Line> lines() const {
    std::vector<Line> out;
    for (int k = 0; k <= max_power; ++k) {
      out.push_back({join("", power(p, k)), k * p_degree});
      out.push_back({join(e, power(p, k)), e_degree + k * p_degree});
    }
    return out;
  }
  std::string name(bool has_e, int k) const { return join(has_e ? e : "", power(p, k)); }
  // Exponents encoded in the lines' names are recovered from their degrees.
  std::pair<bool, int> parse(const Line& l) const {
    const bool has_e = l.name == e || l.name.rfind(e + " ", 0) == 0;
    return {has_e, (l.degree - (has_e ? e_degree : 0)) / p_degree};
  }
  Terms product(const Line& x, const Line& y) const {
    auto [ex, kx] = parse(x);
    auto [ey, ky] = parse(y);
    if (ex && ey) return {};
    // p^{kx} · e p^{ky} = (-1)^{kx|p||e|} e p^{kx+ky}
    const int sign = ey ? sign_of_parity(1LL * kx * p_degree * e_degree) : 1;
    return {{name(ex || ey, kx + ky), sign}};
  }
  DegreeWindow window() const {
    const int next = (max_power + 1) * p_degree;
    return {std::min(0, e_degree), std::min(next, next + e_degree) - 1};
  }
};

}  // namespace

BVTable circle_table(const Ring& ring, int max_exponent) {
  if (max_exponent < 1) throw std::invalid_argument("circle_table: I must be positive");
  std::vector<Line> lines;
  auto xname = [](int i) { return i == 0 ? std::string() : i == 1 ? std::string("x") : "x^" + std::to_string(i); };
  std::map<std::string, std::pair<bool, int>> parsed;
  for (int i = -max_exponent; i <= max_exponent; ++i) {
    lines.push_back({join("", xname(i)), 0});
    lines.push_back({join("a", xname(i)), -1});
    parsed[lines[lines.size() - 2].name] = {false, i};
    parsed[lines.back().name] = {true, i};
  }
  auto product = [&](const Line& x, const Line& y) -> Terms {
    auto [ax, i] = parsed.at(x.name);
    auto [ay, j] = parsed.at(y.name);
    if (ax && ay) return {};
    return {{join(ax || ay ? "a" : "", xname(i + j)), 1}};
  };
  auto delta = [&](const Line& l) -> Terms {
    auto [a, i] = parsed.at(l.name);
    if (!a) return {};
    return {{join("", xname(i)), i}};
  };
  return assemble(ring, lines, product, delta, std::nullopt);
}

BVTable odd_sphere_table(int n, const Ring& ring, int max_power) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("odd_sphere_table: n must be odd");
  TwoLetters s{"a", -n, "u", n - 1, max_power};
  if (n == 1) throw std::invalid_argument("odd_sphere_table: use circle_table for n = 1");
  auto delta = [&](const Line& l) -> Terms {
    auto [has_a, k] = s.parse(l);
    if (!has_a || k == 0) return {};
    return {{s.name(false, k - 1), k}};
  };
  return assemble(ring, s.lines(), [&](const Line& x, const Line& y) { return s.product(x, y); }, delta, s.window());
}

BVTable even_sphere_z_table(int n, int eps0, int max_power) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("even_sphere_z_table: n must be even and >= 2");
  if (eps0 < 0) eps0 = n == 2 ? 1 : 0;
  if (eps0 > 1) throw std::invalid_argument("even_sphere_z_table: eps0 must be 0 or 1");
  if (n != 2 && eps0 != 0) throw std::invalid_argument("even_sphere_z_table: the eps0 term exists only for n = 2");
  const int dv = 2 * (n - 1);
  // Each line is b^e a^f v^k with at most one of e, f set.
  struct Exp {
    bool b, a;
    int k;
  };
  std::map<std::string, Exp> parsed;
  std::vector<Line> lines;
  auto name = [](Exp x) { return join(x.b ? "b" : x.a ? "a" : "", power("v", x.k)); };
  for (int k = 0; k <= max_power; ++k) {
    for (Exp x : {Exp{false, false, k}, Exp{true, false, k}, Exp{false, true, k}}) {
      Line l{name(x), (x.b ? -1 : 0) + (x.a ? -n : 0) + k * dv, x.a && k >= 1 ? 2 : 0};
      parsed[l.name] = x;
      lines.push_back(l);
    }
  }
  auto product = [&](const Line& x, const Line& y) -> Terms {
    Exp p = parsed.at(x.name), q = parsed.at(y.name);
    if ((p.a || p.b) && (q.a || q.b)) return {};  // a² = ab = b² = 0
    Exp r{p.b || q.b, p.a || q.a, p.k + q.k};
    return {{name(r), 1}};  // |v| even: no signs
  };
  auto delta = [&](const Line& l) -> Terms {
    Exp x = parsed.at(l.name);
    if (!x.b) return {};
    Terms t{{name({false, false, x.k}), 2 * x.k + 1}};
    if (eps0) t.push_back({name({false, true, x.k + 1}), 1});
    return t;
  };
  const int next = (max_power + 1) * dv;
  DegreeWindow w{-n, std::min({next, next - 1, next - n}) - 1};
  return assemble(Ring::integers(), lines, product, delta, w);
}

BVTable s2_z_table(int max_power) { return even_sphere_z_table(2, -1, max_power); }

BVTable s2_f2_table(int eps, int lambda, int max_power) {
  if ((eps != 0 && eps != 1) || (lambda != 0 && lambda != 1)) throw std::invalid_argument("s2_f2_table: eps and lambda are bits");
  TwoLetters s{"a", -2, "u", 1, max_power};
  auto delta = [&](const Line& l) -> Terms {
    auto [has_a, k] = s.parse(l);
    if (has_a) {
      if (k % 2 == 0) return {};
      return {{s.name(false, k - 1), 1}, {s.name(true, k + 1), eps}};
    }
    if (lambda == 0 || k % 2 == 0) return {};
    return {{s.name(false, k + 1), 1}, {s.name(true, k + 3), eps}};
  };
  return assemble(Ring::prime_field(2), s.lines(), [&](const Line& x, const Line& y) { return s.product(x, y); }, delta,
                  s.window());
}

BVTable hh_sphere_f2_table(int d, int max_power) {
  if (d < 2) throw std::invalid_argument("hh_sphere_f2_table: d must be >= 2");
  TwoLetters s{"g", -d, "f", d - 1, max_power};
  auto delta = [&](const Line& l) -> Terms {
    auto [has_g, k] = s.parse(l);
    if (!has_g || k % 2 == 0) return {};
    return {{s.name(false, k - 1), 1}};
  };
  return assemble(Ring::prime_field(2), s.lines(), [&](const Line& x, const Line& y) { return s.product(x, y); }, delta,
                  s.window());
}

IsoWitness involution_f2(int max_power) {
  BVTable t = s2_f2_table(1, 0, max_power);
  IsoWitness w;
  w.images.resize(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) w.images[i] = t.basis_element(i);
  for (int k = 1; k <= max_power; k += 2) {
    const std::size_t i = t.index_of(power("u", k));
    if (auto partner = t.find(join("a", power("u", k + 2))))
      (*w.images[i])[*partner] = 1;
    else
      w.images[i] = std::nullopt;
  }
  w.preserves_product = true;
  return w;
}

IsoWitness involution_z(int max_power) {
  BVTable t = s2_z_table(max_power);
  IsoWitness w;
  w.images.resize(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) w.images[i] = t.basis_element(i);
  for (int k = 1; k <= max_power; k += 2) {
    const std::size_t i = t.index_of(power("v", k));
    if (auto partner = t.find(join("a", power("v", k + 1))))
      (*w.images[i])[*partner] = 1;
    else
      w.images[i] = std::nullopt;
  }
  w.preserves_product = true;
  return w;
}

BVTable make_sphere_model(const SphereModelConfig& c) {
  using K = SphereModelConfig::Kind;
  switch (c.kind) {
    case K::Circle:
      return circle_table(c.ring, c.bound);
    case K::OddSphere:
      return odd_sphere_table(c.n, c.ring, c.bound);
    case K::EvenSphereZ:
      return even_sphere_z_table(c.n, c.eps0, c.bound);
    case K::S2F2:
      return s2_f2_table(c.eps, c.lambda, c.bound);
    case K::S2Z:
      return s2_z_table(c.bound);
    case K::HHofSphereF2:
      return hh_sphere_f2_table(c.n, c.bound);
  }
  throw std::invalid_argument("unknown sphere model");
}

}  // namespace hhbv
