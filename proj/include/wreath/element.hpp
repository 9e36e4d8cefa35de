#pragma once

// Elements s*gamma of the wreath product of a finite group with the finite
// permutations of the positive integers: a permutation part plus a sparse
// coloring position -> group element.  Identity colors are never stored.
//
// Text grammar (canonical): <perm>[<name>@<pos>,...], cycles then colors,
// e.g. "(1 2 3)[a@1,b@3]"; brackets omitted means no colors.

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wreath/group.hpp"
#include "wreath/perm.hpp"

namespace wreath {

struct Element {
  Perm s;
  std::map<int, int> colors;  // position -> group element index, identity omitted

  bool is_identity() const { return s.is_identity() && colors.empty(); }

  bool operator==(const Element& o) const { return s == o.s && colors == o.colors; }
  bool operator!=(const Element& o) const { return !(*this == o); }
};

inline Element make_element(Perm s, const std::map<int, int>& colors, const Group& g) {
  Element e;
  e.s = std::move(s);
  for (const auto& [pos, c] : colors) {
    if (pos <= 0) throw validation_error("element: color positions must be positive");
    if (c < 0 || c >= g.order) throw validation_error("element: color index out of range");
    if (c != g.identity) e.colors[pos] = c;
  }
  return e;
}

inline std::set<int> support(const Element& e) {
  std::set<int> s = e.s.support();
  for (const auto& [pos, c] : e.colors) s.insert(pos);
  return s;
}

inline int max_point(const Element& e) {
  int m = e.s.max_point();
  if (!e.colors.empty()) m = std::max(m, e.colors.rbegin()->first);
  return m;
}

inline int color_at(const Element& e, int pos, const Group& g) {
  auto it = e.colors.find(pos);
  return it == e.colors.end() ? g.identity : it->second;
}

// (s g1)(s' g2) = (s s')((s'^-1 g1 s') g2): the color landing at position i
// is g1[s'(i)] * g2[i].
inline Element multiply(const Element& a, const Element& b, const Group& g) {
  Perm s = a.s * b.s;
  std::set<int> pts;
  for (const auto& [pos, c] : a.colors) pts.insert(b.s.apply_inv(pos));
  for (const auto& [pos, c] : b.colors) pts.insert(pos);
  std::map<int, int> colors;
  for (int i : pts) {
    const int c = g.op(color_at(a, b.s.apply(i), g), color_at(b, i, g));
    if (c != g.identity) colors[i] = c;
  }
  Element e;
  e.s = std::move(s);
  e.colors = std::move(colors);
  return e;
}

inline Element inverse(const Element& a, const Group& g) {
  Element e;
  e.s = a.s.inverse();
  for (const auto& [pos, c] : a.colors) e.colors[a.s.apply(pos)] = g.invert(c);
  return e;
}

// h (s gamma) h^-1: position h(i) carries the color that sat at i.
inline Element conjugate(const Element& a, const Perm& h, const Group&) {
  Element e;
  e.s = (h * a.s) * h.inverse();
  for (const auto& [pos, c] : a.colors) e.colors[h.apply(pos)] = c;
  return e;
}

// One orbit of the permutation part together with the colors it carries, or
// a colored singleton fixed by s.
struct GenCycle {
  std::vector<int> orbit;   // walk from the minimum via cycle.apply
  Perm cycle;               // identity for singletons
  std::map<int, int> colors;

  int length() const { return static_cast<int>(orbit.size()); }
};

inline Element cycle_to_element(const GenCycle& c) {
  Element e;
  e.s = c.cycle;
  e.colors = c.colors;
  return e;
}

// Factorization into commuting generalized cycles: the orbits of s (each
// carrying its colors) plus one singleton per colored point fixed by s.
// The product of the returned parts, in any order, is the input element.
inline std::vector<GenCycle> generalized_cycles(const Element& e) {
  std::vector<GenCycle> out;
  std::set<int> in_orbit;
  for (const auto& orbit : e.s.cycles()) {
    GenCycle c;
    c.orbit = orbit;
    c.cycle = Perm::from_cycles({orbit});
    for (int pos : orbit) {
      in_orbit.insert(pos);
      auto it = e.colors.find(pos);
      if (it != e.colors.end()) c.colors[pos] = it->second;
    }
    out.push_back(std::move(c));
  }
  for (const auto& [pos, col] : e.colors) {
    if (in_orbit.count(pos)) continue;
    GenCycle c;
    c.orbit = {pos};
    c.colors[pos] = col;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const GenCycle& a, const GenCycle& b) { return a.orbit[0] < b.orbit[0]; });
  return out;
}

// Ordered color product along the cycle starting at the orbit minimum k and
// stepping backwards through the cycle: gamma_k * gamma_{s^-1(k)} * ...
inline int cycle_invariant(const GenCycle& c, const Group& g) {
  if (c.orbit.empty()) throw validation_error("cycle_invariant: empty orbit");
  const int k0 = c.orbit[0];
  int acc = g.identity;
  int pos = k0;
  for (size_t m = 0; m < c.orbit.size(); ++m) {
    auto it = c.colors.find(pos);
    if (it != c.colors.end()) acc = g.op(acc, it->second);
    pos = c.cycle.apply_inv(pos);
  }
  return acc;
}

inline std::string format_element(const Element& e, const Group& g) {
  std::string out = e.s.str();
  if (!e.colors.empty()) {
    out += '[';
    bool first = true;
    for (const auto& [pos, c] : e.colors) {
      if (!first) out += ',';
      first = false;
      out += g.names[c] + "@" + std::to_string(pos);
    }
    out += ']';
  }
  return out;
}

inline Element parse_element(const std::string& text, const Group& g) {
  const size_t lb = text.find('[');
  const std::string perm_part = text.substr(0, lb);
  Perm s = Perm::parse(perm_part);
  std::map<int, int> colors;
  if (lb != std::string::npos) {
    if (text.back() != ']') throw parse_error("element: missing ']' in " + text);
    const std::string body = text.substr(lb + 1, text.size() - lb - 2);
    size_t i = 0;
    while (i < body.size()) {
      size_t comma = body.find(',', i);
      if (comma == std::string::npos) comma = body.size();
      const std::string item = body.substr(i, comma - i);
      const size_t at = item.find('@');
      if (at == std::string::npos) throw parse_error("element: expected name@pos in " + item);
      const std::string name = item.substr(0, at);
      int pos = 0;
      try {
        pos = std::stoi(item.substr(at + 1));
      } catch (const std::exception&) {
        throw parse_error("element: bad position in " + item);
      }
      if (pos <= 0) throw parse_error("element: positions must be positive in " + item);
      const int c = g.index_of(name);
      if (colors.count(pos)) throw parse_error("element: duplicate color position " + std::to_string(pos));
      if (c != g.identity) colors[pos] = c;
      i = comma + 1;
    }
  }
  Element e;
  e.s = std::move(s);
  e.colors = std::move(colors);
  return e;
}

}  // namespace wreath
