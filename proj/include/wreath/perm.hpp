#pragma once

// Finite-support permutations of the positive integers.  Only the moved
// points are stored, so the identity is the empty map and support is never
// stale.  Points are 1-based; 0 and negatives are rejected.

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreath/cmatrix.hpp"  // validation_error / parse_error

namespace wreath {

class Perm {
 public:
  Perm() = default;

  // m must be a bijection of its key set onto itself; fixed points are stripped.
  static Perm from_map(const std::map<int, int>& m) {
    std::set<int> keys, images;
    for (const auto& [k, v] : m) {
      if (k <= 0 || v <= 0) throw validation_error("permutation: points must be positive");
      keys.insert(k);
      if (!images.insert(v).second) throw validation_error("permutation: map is not injective");
    }
    if (keys != images) throw validation_error("permutation: key set differs from image set");
    Perm p;
    for (const auto& [k, v] : m)
      if (k != v) p.map_[k] = v;
    return p;
  }

  // Product of the listed cycles; cycles must be pairwise disjoint.
  // Singleton cycles are allowed and ignored; [a,b,c] maps a->b->c->a.
  static Perm from_cycles(const std::vector<std::vector<int>>& cycles) {
    std::map<int, int> m;
    std::set<int> seen;
    for (const auto& cyc : cycles) {
      for (int x : cyc) {
        if (x <= 0) throw validation_error("cycle entries must be positive");
        if (!seen.insert(x).second)
          throw validation_error("cycles overlap at point " + std::to_string(x));
      }
      if (cyc.size() < 2) continue;
      for (size_t i = 0; i < cyc.size(); ++i) m[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    return from_map(m);
  }

  static Perm transposition(int i, int j) {
    if (i == j) return Perm();
    return from_cycles({{i, j}});
  }

  // omega_n swaps the blocks [1..n] and [n+1..2n].
  static Perm omega(int n) {
    if (n < 1) throw validation_error("omega: n must be >= 1");
    std::map<int, int> m;
    for (int i = 1; i <= n; ++i) {
      m[i] = i + n;
      m[i + n] = i;
    }
    return from_map(m);
  }

  // sigma_n is the n-cycle 1 -> 2 -> ... -> n -> 1.
  static Perm sigma(int n) {
    if (n < 1) throw validation_error("sigma: n must be >= 1");
    if (n == 1) return Perm();
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = i + 1;
    return from_cycles({cyc});
  }

  int apply(int i) const {
    if (i <= 0) throw validation_error("permutation applied to non-positive point");
    auto it = map_.find(i);
    return it == map_.end() ? i : it->second;
  }

  int apply_inv(int i) const {
    if (i <= 0) throw validation_error("permutation applied to non-positive point");
    for (const auto& [k, v] : map_)
      if (v == i) return k;
    return i;
  }

  Perm inverse() const {
    Perm p;
    for (const auto& [k, v] : map_) p.map_[v] = k;
    return p;
  }

  bool is_identity() const { return map_.empty(); }

  std::set<int> support() const {
    std::set<int> s;
    for (const auto& [k, v] : map_) s.insert(k);
    return s;
  }

  int max_point() const { return map_.empty() ? 0 : map_.rbegin()->first; }

  // Orbits of the moved points; each orbit starts at its minimum and walks
  // x -> apply(x); orbits sorted by minimum.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::set<int> done;
    for (const auto& [k, v] : map_) {
      if (done.count(k)) continue;
      int mn = k, x = apply(k);
      while (x != k) {
        mn = std::min(mn, x);
        x = apply(x);
      }
      std::vector<int> orbit{mn};
      done.insert(mn);
      for (int y = apply(mn); y != mn; y = apply(y)) {
        orbit.push_back(y);
        done.insert(y);
      }
      out.push_back(std::move(orbit));
    }
    return out;
  }

  int sign() const {
    int s = 1;
    for (const auto& c : cycles())
      if (c.size() % 2 == 0) s = -s;
    return s;
  }

  std::string str() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
      os << '(';
      for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
      os << ')';
    }
    return os.str();
  }

  // Cycle notation, e.g. "(1 2)(3 4 5)"; "()" is the identity.
  static Perm parse(const std::string& text) {
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i >= text.size()) throw parse_error("empty permutation text");
    while (i < text.size()) {
      skip_ws();
      if (i >= text.size()) break;
      if (text[i] != '(') throw parse_error("expected '(' in permutation: " + text);
      ++i;
      std::vector<int> cyc;
      skip_ws();
      while (i < text.size() && text[i] != ')') {
        size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) throw parse_error("expected integer in permutation: " + text);
        cyc.push_back(std::stoi(text.substr(i, j - i)));
        i = j;
        skip_ws();
      }
      if (i >= text.size()) throw parse_error("unterminated cycle in permutation: " + text);
      ++i;  // ')'
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      skip_ws();
    }
    try {
      return from_cycles(cycles);
    } catch (const validation_error& e) {
      // text that names an impossible permutation is a parse failure
      throw parse_error(std::string(e.what()) + " in " + text);
    }
  }

  // (a*b)(i) = a(b(i))
  friend Perm operator*(const Perm& a, const Perm& b) {
    std::map<int, int> m;
    std::set<int> pts;
    for (const auto& [k, v] : a.map_) pts.insert(k);
    for (const auto& [k, v] : b.map_) pts.insert(k);
    for (int p : pts) m[p] = a.apply(b.apply(p));
    return from_map(m);
  }

  bool operator==(const Perm& o) const { return map_ == o.map_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool operator<(const Perm& o) const { return map_ < o.map_; }

  const std::map<int, int>& moved() const { return map_; }

 private:
  std::map<int, int> map_;
};

}  // namespace wreath
