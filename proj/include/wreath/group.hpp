#pragma once

// Finite groups given by multiplication tables, and unitary representations
// stored extensionally (one matrix per element).  Tables are validated
// exhaustively at load, which is why the order is capped at 64.

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "wreath/cmatrix.hpp"

namespace wreath {

struct Group {
  int order = 1;
  std::vector<std::string> names{"e"};
  std::vector<std::vector<int>> mul{{0}};
  int identity = 0;
  std::vector<int> inv{0};

  int op(int x, int y) const { return mul[x][y]; }
  int invert(int x) const { return inv[x]; }

  int index_of(const std::string& name) const {
    for (int i = 0; i < order; ++i)
      if (names[i] == name) return i;
    throw parse_error("unknown group element name: " + name);
  }

  bool same_table(const Group& o) const {
    return order == o.order && names == o.names && mul == o.mul;
  }

  // Validates shape, closure, identity, inverses and associativity.
  static Group from_table(std::vector<std::string> names, std::vector<std::vector<int>> mul) {
    Group g;
    g.order = static_cast<int>(names.size());
    if (g.order < 1) throw validation_error("group: empty table");
    if (g.order > 64)
      throw validation_error("group: order " + std::to_string(g.order) +
                             " exceeds 64 (associativity is checked exhaustively)");
    if (static_cast<int>(mul.size()) != g.order)
      throw validation_error("group: table has wrong number of rows");
    for (const auto& row : mul) {
      if (static_cast<int>(row.size()) != g.order)
        throw validation_error("group: table row has wrong length");
      for (int v : row)
        if (v < 0 || v >= g.order) throw validation_error("group: table entry out of range");
    }
    g.names = std::move(names);
    g.mul = std::move(mul);

    int id = -1;
    for (int e = 0; e < g.order; ++e) {
      bool ok = true;
      for (int x = 0; x < g.order && ok; ++x) ok = g.mul[e][x] == x && g.mul[x][e] == x;
      if (ok) {
        id = e;
        break;
      }
    }
    if (id < 0) throw validation_error("group: no identity element");
    g.identity = id;

    for (int x = 0; x < g.order; ++x)
      for (int y = 0; y < g.order; ++y)
        for (int z = 0; z < g.order; ++z)
          if (g.mul[g.mul[x][y]][z] != g.mul[x][g.mul[y][z]])
            throw validation_error("group: associativity fails at triple (" + g.names[x] + "," +
                                   g.names[y] + "," + g.names[z] + ")");

    g.inv.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x) {
      for (int y = 0; y < g.order; ++y)
        if (g.mul[x][y] == id && g.mul[y][x] == id) {
          g.inv[x] = y;
          break;
        }
      if (g.inv[x] < 0)
        throw validation_error("group: element '" + g.names[x] + "' has no inverse");
    }
    return g;
  }

  static Group trivial() { return Group(); }

  static Group cyclic(int n) {
    if (n < 1) throw validation_error("cyclic: n must be >= 1");
    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = i == 0 ? "e" : (i == 1 ? "a" : "a" + std::to_string(i));
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
    return from_table(std::move(names), std::move(mul));
  }

  static Group symmetric3() {
    // elements as permutations of {0,1,2}: e, r=(012), r2, s=(01), sr, sr2
    const std::vector<std::array<int, 3>> el = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    const std::vector<std::string> names = {"e", "r", "r2", "s", "sr", "sr2"};
    auto compose = [&](int x, int y) {
      std::array<int, 3> c;
      for (int i = 0; i < 3; ++i) c[i] = el[x][el[y][i]];
      for (size_t k = 0; k < el.size(); ++k)
        if (el[k] == c) return static_cast<int>(k);
      return -1;
    };
    std::vector<std::vector<int>> mul(6, std::vector<int>(6));
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) mul[i][j] = compose(i, j);
    return from_table(names, mul);
  }

  // permutation of {0,1,2} for symmetric3 elements, used by the 2-dim irrep
  static const std::vector<std::array<int, 3>>& s3_points() {
    static const std::vector<std::array<int, 3>> el = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    return el;
  }
};

struct Rep {
  Group group;
  int dim = 0;
  std::vector<CMatrix> mats;  // one per group element
};

// Unitarity within 1e-10, multiplicativity within 1e-10, identity exact-ish.
inline void validate_rep(const Rep& r) {
  if (static_cast<int>(r.mats.size()) != r.group.order)
    throw validation_error("rep: expected one matrix per group element");
  const CMatrix id = CMatrix::identity(r.dim);
  for (int g = 0; g < r.group.order; ++g) {
    const CMatrix& m = r.mats[g];
    if (m.rows != r.dim || m.cols != r.dim) throw validation_error("rep: matrix dimension mismatch");
    if (max_abs_diff(m * adjoint(m), id) > 1e-10)
      throw validation_error("rep: matrix for '" + r.group.names[g] + "' is not unitary within 1e-10");
  }
  if (max_abs_diff(r.mats[r.group.identity], id) > 1e-10)
    throw validation_error("rep: matrix at the identity is not the identity");
  for (int g = 0; g < r.group.order; ++g)
    for (int h = 0; h < r.group.order; ++h)
      if (max_abs_diff(r.mats[g] * r.mats[h], r.mats[r.group.op(g, h)]) > 1e-10)
        throw validation_error("rep: homomorphism residual above 1e-10 at ('" + r.group.names[g] +
                               "','" + r.group.names[h] + "')");
}

inline Rep make_rep(Group g, std::vector<CMatrix> mats) {
  Rep r;
  r.group = std::move(g);
  r.mats = std::move(mats);
  r.dim = r.mats.empty() ? 0 : r.mats[0].rows;
  validate_rep(r);
  return r;
}

inline Rep trivial_rep(const Group& g) {
  std::vector<CMatrix> mats(g.order, CMatrix::identity(1));
  return make_rep(g, std::move(mats));
}

// Left translation permutation matrices; dimension = group order.
inline Rep regular_rep(const Group& g) {
  std::vector<CMatrix> mats;
  mats.reserve(g.order);
  for (int x = 0; x < g.order; ++x) {
    CMatrix m(g.order, g.order);
    for (int y = 0; y < g.order; ++y) m.at(g.op(x, y), y) = 1.0;
    mats.push_back(std::move(m));
  }
  return make_rep(g, std::move(mats));
}

// 1x1 representation of cyclic(n): element a^k maps to exp(2*pi*i*j*k/n).
inline Rep cyclic_irrep(int n, int j) {
  if (j < 0 || j >= n) throw validation_error("cyclic_irrep: index out of range");
  const Group g = Group::cyclic(n);
  std::vector<CMatrix> mats;
  for (int k = 0; k < n; ++k) {
    CMatrix m(1, 1);
    const double t = 2.0 * M_PI * double(j) * double(k) / double(n);
    m.at(0, 0) = cplx(std::cos(t), std::sin(t));
    mats.push_back(std::move(m));
  }
  return make_rep(g, std::move(mats));
}

// sign of the underlying permutation, as a 1-dim rep of symmetric3()
inline Rep symmetric3_sign_rep() {
  const Group g = Group::symmetric3();
  std::vector<CMatrix> mats;
  for (int x = 0; x < 6; ++x) {
    CMatrix m(1, 1);
    m.at(0, 0) = (x == 0 || x == 1 || x == 2) ? 1.0 : -1.0;
    mats.push_back(std::move(m));
  }
  return make_rep(g, std::move(mats));
}

// the 2-dim irrep of symmetric3(): permutation action on the plane sum(x_i)=0
inline Rep symmetric3_standard_rep() {
  const Group g = Group::symmetric3();
  const auto& pts = Group::s3_points();
  // orthonormal basis of {x in C^3 : x_0+x_1+x_2 = 0}
  const double s2 = 1.0 / std::sqrt(2.0), s6 = 1.0 / std::sqrt(6.0);
  const double b[2][3] = {{s2, -s2, 0.0}, {s6, s6, -2.0 * s6}};
  std::vector<CMatrix> mats;
  for (int x = 0; x < 6; ++x) {
    // permutation matrix P(e_i) = e_{pts[x][i]} restricted to the plane
    double p[3][3] = {};
    for (int i = 0; i < 3; ++i) p[pts[x][i]][i] = 1.0;
    CMatrix m(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        double v = 0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) v += b[r][i] * p[i][j] * b[c][j];
        m.at(r, c) = v;
      }
    mats.push_back(std::move(m));
  }
  return make_rep(g, std::move(mats));
}

inline Rep direct_sum(const Rep& r1, const Rep& r2) {
  if (!r1.group.same_table(r2.group)) throw validation_error("direct_sum: reps over different groups");
  std::vector<CMatrix> mats;
  for (int g = 0; g < r1.group.order; ++g) {
    CMatrix m(r1.dim + r2.dim, r1.dim + r2.dim);
    for (int i = 0; i < r1.dim; ++i)
      for (int j = 0; j < r1.dim; ++j) m.at(i, j) = r1.mats[g].at(i, j);
    for (int i = 0; i < r2.dim; ++i)
      for (int j = 0; j < r2.dim; ++j) m.at(r1.dim + i, r1.dim + j) = r2.mats[g].at(i, j);
    mats.push_back(std::move(m));
  }
  return make_rep(r1.group, std::move(mats));
}

inline cplx normalized_char(const Rep& r, int g) {
  if (g < 0 || g >= r.group.order) throw validation_error("normalized_char: element out of range");
  if (r.dim == 0) throw validation_error("normalized_char: zero-dimensional rep");
  return trace(r.mats[g]) / double(r.dim);
}

}  // namespace wreath
