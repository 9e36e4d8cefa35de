#pragma once

// Dense complex matrices: arithmetic, Kronecker products, traces, and a
// cyclic Jacobi eigensolver for Hermitian matrices.  Everything is plain
// value semantics; dimensions stay small (a few hundred at most).

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreath {

using cplx = std::complex<double>;

struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<cplx> a;  // row-major

  CMatrix() = default;
  CMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  cplx& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const cplx& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool empty() const { return rows == 0 || cols == 0; }

  static CMatrix identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }

  static CMatrix diag(const std::vector<double>& d) {
    CMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
    return m;
  }

  static CMatrix zero(int r, int c) { return CMatrix(r, c); }

  bool operator==(const CMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

inline void require_same_shape(const CMatrix& x, const CMatrix& y, const char* op) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw validation_error(std::string(op) + ": dimension mismatch");
}

inline CMatrix operator+(const CMatrix& x, const CMatrix& y) {
  require_same_shape(x, y, "add");
  CMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

inline CMatrix operator-(const CMatrix& x, const CMatrix& y) {
  require_same_shape(x, y, "sub");
  CMatrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

inline CMatrix operator*(const cplx& c, const CMatrix& x) {
  CMatrix r = x;
  for (auto& v : r.a) v *= c;
  return r;
}

inline CMatrix operator*(const CMatrix& x, const CMatrix& y) {
  if (x.cols != y.rows) throw validation_error("mul: dimension mismatch");
  CMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const cplx xv = x.at(i, k);
      if (xv == cplx{}) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += xv * y.at(k, j);
    }
  return r;
}

inline CMatrix adjoint(const CMatrix& x) {
  CMatrix r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = std::conj(x.at(i, j));
  return r;
}

inline cplx trace(const CMatrix& x) {
  if (x.rows != x.cols) throw validation_error("trace: matrix not square");
  cplx t = 0;
  for (int i = 0; i < x.rows; ++i) t += x.at(i, i);
  return t;
}

// kron(A,B): the left factor is the slow index, i.e. row (iA*rowsB + iB).
inline CMatrix kron(const CMatrix& x, const CMatrix& y) {
  CMatrix r(x.rows * y.rows, x.cols * y.cols);
  for (int ia = 0; ia < x.rows; ++ia)
    for (int ja = 0; ja < x.cols; ++ja) {
      const cplx xv = x.at(ia, ja);
      if (xv == cplx{}) continue;
      for (int ib = 0; ib < y.rows; ++ib)
        for (int jb = 0; jb < y.cols; ++jb)
          r.at(ia * y.rows + ib, ja * y.cols + jb) = xv * y.at(ib, jb);
    }
  return r;
}

inline double norm_max(const CMatrix& x) {
  double m = 0;
  for (const auto& v : x.a) m = std::max(m, std::abs(v));
  return m;
}

inline double norm_fro(const CMatrix& x) {
  double s = 0;
  for (const auto& v : x.a) s += std::norm(v);
  return std::sqrt(s);
}

inline double max_abs_diff(const CMatrix& x, const CMatrix& y) {
  require_same_shape(x, y, "diff");
  double m = 0;
  for (size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
  return m;
}

inline bool is_hermitian(const CMatrix& x, double tol = 1e-12) {
  if (x.rows != x.cols) return false;
  for (int i = 0; i < x.rows; ++i)
    for (int j = i; j < x.cols; ++j)
      if (std::abs(x.at(i, j) - std::conj(x.at(j, i))) > tol) return false;
  return true;
}

struct HermEig {
  std::vector<double> values;  // descending
  CMatrix vectors;             // unitary, column k is the eigenvector of values[k]
};

// Cyclic Jacobi diagonalization.  Stops when the off-diagonal Frobenius norm
// drops below 1e-13 * ||M||_F, hard cap of 100 sweeps.  Eigenvalues come out
// sorted descending; each eigenvector is phase-fixed so its first component
// of nonnegligible modulus is real positive.
inline HermEig hermitian_eig(const CMatrix& m) {
  if (m.rows != m.cols) throw validation_error("hermitian_eig: matrix not square");
  if (!is_hermitian(m, 1e-12)) throw validation_error("hermitian_eig: matrix not Hermitian within 1e-12");
  const int n = m.rows;
  CMatrix a = m;
  CMatrix v = CMatrix::identity(n);
  const double target = 1e-13 * std::max(norm_fro(m), 1e-300);

  auto offdiag = [&]() {
    double s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
  };

  for (int sweep = 0; sweep < 100 && offdiag() > target; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a.at(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        const cplx phase = apq / r;  // a_pq = r * phase
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        // small root of t^2 - 2 tau t - 1 = 0, so the rotation angle stays below pi/4
        const double t = (tau >= 0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // unitary rotation in the (p,q) plane: columns
        //   col_p <- c*col_p + s*conj(phase)*col_q
        //   col_q <- -s*phase*col_p + c*col_q
        for (int k = 0; k < n; ++k) {
          const cplx akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = c * akp + s * std::conj(phase) * akq;
          a.at(k, q) = -s * phase * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = c * apk + s * phase * aqk;
          a.at(q, k) = -s * std::conj(phase) * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const cplx vkp = v.at(k, p), vkq = v.at(k, q);
          v.at(k, p) = c * vkp + s * std::conj(phase) * vkq;
          v.at(k, q) = -s * phase * vkp + c * vkq;
        }
      }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a.at(i, i).real() > a.at(j, j).real(); });

  HermEig e;
  e.values.resize(n);
  e.vectors = CMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    const int src = order[k];
    e.values[k] = a.at(src, src).real();
    cplx phase = 1.0;
    for (int i = 0; i < n; ++i) {
      if (std::abs(v.at(i, src)) > 1e-12) {
        phase = std::conj(v.at(i, src)) / std::abs(v.at(i, src));
        break;
      }
    }
    for (int i = 0; i < n; ++i) e.vectors.at(i, k) = phase * v.at(i, src);
  }
  return e;
}

inline CMatrix abs_op(const CMatrix& m) {
  const HermEig e = hermitian_eig(m);
  CMatrix d(m.rows, m.rows);
  for (int i = 0; i < m.rows; ++i) d.at(i, i) = std::abs(e.values[i]);
  return e.vectors * d * adjoint(e.vectors);
}

inline bool is_psd(const CMatrix& m, double tol) {
  const HermEig e = hermitian_eig(m);
  for (double x : e.values)
    if (x < -tol) return false;
  return true;
}

// Sum of |v_k><v_k| over eigenvalue indices selected by pred.
template <typename Pred>
inline CMatrix spectral_projection(const HermEig& e, Pred pred) {
  const int n = e.vectors.rows;
  CMatrix p(n, n);
  for (int k = 0; k < n; ++k) {
    if (!pred(e.values[k])) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        p.at(i, j) += e.vectors.at(i, k) * std::conj(e.vectors.at(j, k));
  }
  return p;
}

// Rank of a set of column vectors via modified Gram-Schmidt.
inline int rank_of_vectors(const std::vector<std::vector<cplx>>& vecs, double tol = 1e-10) {
  std::vector<std::vector<cplx>> basis;
  for (auto v : vecs) {
    for (const auto& b : basis) {
      cplx proj = 0;
      for (size_t i = 0; i < v.size(); ++i) proj += std::conj(b[i]) * v[i];
      for (size_t i = 0; i < v.size(); ++i) v[i] -= proj * b[i];
    }
    double nrm = 0;
    for (const auto& x : v) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    if (nrm > tol) {
      for (auto& x : v) x /= nrm;
      basis.push_back(std::move(v));
    }
  }
  return static_cast<int>(basis.size());
}

inline std::vector<cplx> flatten(const CMatrix& m) { return m.a; }

}  // namespace wreath
