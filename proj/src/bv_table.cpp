#include "hhbv/bv_table.hpp"

#include "hhbv/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hhbv {

BVTable::BVTable(Ring ring, std::vector<Monomial> monomials, std::size_t unit)
    : ring_(ring),
      monomials_(std::move(monomials)),
      unit_(unit),
      products_(monomials_.size() * monomials_.size(), Element{}),
      delta_(monomials_.size(), Element{}) {
  if (unit_ >= monomials_.size()) throw std::invalid_argument("BVTable: unit index out of range");
}

void BVTable::set_product(std::size_t i, std::size_t j, std::optional<Element> value) {
  if (value) value = normalize(std::move(*value));
  products_.at(i * size() + j) = std::move(value);
}

void BVTable::set_delta(std::size_t i, std::optional<Element> value) {
  if (value) value = normalize(std::move(*value));
  delta_.at(i) = std::move(value);
}

Element BVTable::normalize(Element e) const {
  for (auto it = e.begin(); it != e.end();) {
    if (it->first >= size()) throw std::out_of_range("element refers to monomial " + std::to_string(it->first));
    it->second = reduce_by_order(ring_.normalize(it->second), monomials_[it->first].order);
    it = it->second == 0 ? e.erase(it) : std::next(it);
  }
  return e;
}

std::optional<Element> BVTable::multiply(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      const auto& p = product(i, j);
      if (!p) return std::nullopt;
      for (const auto& [k, c] : *p) out[k] += a * b * c;
    }
  return normalize(std::move(out));
}

std::optional<Element> BVTable::apply_delta(const Element& x) const {
  Element out;
  for (const auto& [i, a] : x) {
    const auto& d = delta(i);
    if (!d) return std::nullopt;
    for (const auto& [k, c] : *d) out[k] += a * c;
  }
  return normalize(std::move(out));
}

std::vector<std::size_t> BVTable::monomials_of_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (monomials_[i].degree == d) out.push_back(i);
  return out;
}

std::vector<int> BVTable::degrees() const {
  std::set<int> ds;
  for (const auto& m : monomials_) ds.insert(m.degree);
  return {ds.begin(), ds.end()};
}

std::optional<std::size_t> BVTable::find(const std::string& name) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (monomials_[i].name == name) return i;
  return std::nullopt;
}

std::size_t BVTable::index_of(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw std::out_of_range("no monomial named '" + name + "'");
}

const Element& BracketTable::at(std::size_t i, std::size_t j) const {
  const auto& e = entry(i, j);
  if (!e) throw TruncationEscape("bracket entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is truncated");
  return *e;
}

std::optional<Element> BracketTable::bracket(const BVTable& t, const Element& x, const Element& y) const {
  Element out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      const auto& e = entry(i, j);
      if (!e) return std::nullopt;
      for (const auto& [k, c] : *e) out[k] += a * b * c;
    }
  return t.normalize(std::move(out));
}

Element add(const Element& a, const Element& b) {
  Element out = a;
  for (const auto& [k, c] : b) out[k] += c;
  return out;
}

Element scale(const Element& a, const Integer& c) {
  Element out;
  for (const auto& [k, v] : a) out[k] = v * c;
  return out;
}

Element subtract(const Element& a, const Element& b) { return add(a, scale(b, -1)); }

std::string format_element(const BVTable& t, const Element& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : e) {
    const std::string& name = t.monomial(k).name;
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    Integer mag = c < 0 ? Integer(-c) : c;
    if (mag != 1)
      os << mag << (name == "1" ? "" : "·" + name);
    else
      os << name;
    first = false;
  }
  return os.str();
}

BVTable restrict_table(const BVTable& t, const std::vector<std::size_t>& keep, std::optional<DegreeWindow> window) {
  std::vector<long> new_index(t.size(), -1);
  std::vector<Monomial> ms;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    new_index.at(keep[i]) = static_cast<long>(i);
    ms.push_back(t.monomial(keep[i]));
  }
  if (new_index.at(t.unit()) < 0) throw std::invalid_argument("restrict_table: the unit must be kept");
  BVTable out(t.ring(), ms, static_cast<std::size_t>(new_index[t.unit()]));
  out.set_window(window);
  auto translate = [&](const std::optional<Element>& e) -> std::optional<Element> {
    if (!e) return std::nullopt;
    Element r;
    for (const auto& [k, c] : *e) {
      if (new_index[k] < 0) return std::nullopt;
      r[static_cast<std::size_t>(new_index[k])] = c;
    }
    return r;
  };
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.set_delta(i, translate(t.delta(keep[i])));
    for (std::size_t j = 0; j < keep.size(); ++j) out.set_product(i, j, translate(t.product(keep[i], keep[j])));
  }
  return out;
}

BVTable rename_letters(const BVTable& t, const std::map<std::string, std::string>& letters) {
  std::vector<Monomial> ms = t.monomials();
  for (auto& m : ms) {
    std::istringstream in(m.name);
    std::string token, renamed;
    while (in >> token) {
      auto caret = token.find('^');
      std::string letter = token.substr(0, caret);
      if (auto it = letters.find(letter); it != letters.end()) letter = it->second;
      if (!renamed.empty()) renamed += ' ';
      renamed += letter + (caret == std::string::npos ? "" : token.substr(caret));
    }
    m.name = renamed;
  }
  BVTable out(t.ring(), ms, t.unit());
  out.set_window(t.window());
  for (std::size_t i = 0; i < t.size(); ++i) {
    out.set_delta(i, t.delta(i));
    for (std::size_t j = 0; j < t.size(); ++j) out.set_product(i, j, t.product(i, j));
  }
  return out;
}

}  // namespace hhbv
