#pragma once

// Brute-force tensor model backing the closed-form state evaluator.
//
// A state parameter set is expanded into a slot space: the eigenbasis of the
// pm-block A (descending eigenvalues, each basis vector labeled plus or
// minus by the sign of its eigenvalue) followed by one copy of the regular
// block per slot.  Slot j carries the density
//     D_j = |A|  (+)  (1 - Tr|A|) |xi_j><xi_j|,   xi_j = xi in reg copy j,
// and the permutation action is the signed operator
//     U(s)|x> = eps(x,s) |s.x>,   (s.x)_j = x_{s^-1(j)},
// where eps is the sign of the permutation the slot move induces on the
// minus-labeled entries of the multi-index.  U is an exact homomorphism and
// carries the alternating sign of the fermionic part; densities are built
// from |A| only.  Values are ordinary traces, evaluated by direct
// contraction, so nothing here shares code with the closed forms it checks.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "wreath/element.hpp"
#include "wreath/state.hpp"

namespace wreath {

struct SlotLabel {
  enum Kind { Plus, Minus, Reg } kind = Plus;
  double eigenvalue = 0;  // 0 for reg indices
  int copy = 0;           // reg: which slot's copy (1-based)
  int kidx = 0;           // reg: index inside the rho11 space
};

struct SlotBasis {
  int dim = 0;
  std::vector<SlotLabel> labels;
  bool minus(int i) const { return labels[i].kind == SlotLabel::Minus; }
};

struct TensorModel {
  StateParams params;  // validated copy
  SlotBasis basis;
  int nslots = 0;
  double cap = 20000;
  long dim_pow = 0;                 // basis.dim ^ nslots
  std::vector<CMatrix> rho_full;    // per group element, on the slot space
  std::vector<CMatrix> dens;        // per slot (0-based), trace 1
  CMatrix a_slot;                   // A (+) 0 on the slot space, diagonal

  const CMatrix& rho(int g) const { return rho_full[g]; }
};

inline TensorModel make_model(StateParams p, int nslots, double cap = 20000) {
  validate_state(p);
  if (nslots < 1) throw validation_error("model: need at least one slot");
  TensorModel m;
  m.nslots = nslots;
  m.cap = cap;
  const int pm_dim = p.pm_dim();
  const int k_dim = p.reg_dim();
  const int dim = pm_dim + k_dim * nslots;
  if (dim < 1) throw validation_error("model: empty slot space");
  double pw = 1;
  for (int j = 0; j < nslots; ++j) {
    pw *= dim;
    if (pw > cap)
      throw validation_error("model: dim^N = " + std::to_string(pw) + " exceeds cap " +
                             std::to_string(cap));
  }
  m.dim_pow = static_cast<long>(pw);

  m.basis.dim = dim;
  m.basis.labels.resize(dim);
  for (int i = 0; i < pm_dim; ++i) {
    const double lam = p.eig.values[i];
    m.basis.labels[i].kind = lam < -kEigZeroTol ? SlotLabel::Minus : SlotLabel::Plus;
    m.basis.labels[i].eigenvalue = lam;
  }
  for (int c = 0; c < nslots; ++c)
    for (int k = 0; k < k_dim; ++k) {
      SlotLabel& l = m.basis.labels[pm_dim + c * k_dim + k];
      l.kind = SlotLabel::Reg;
      l.copy = c + 1;
      l.kidx = k;
    }

  // representation on the slot space: pm part in the eigenbasis of A,
  // one rho11 block per copy
  m.rho_full.reserve(p.group.order);
  for (int g = 0; g < p.group.order; ++g) {
    CMatrix r(dim, dim);
    if (p.pm) {
      const CMatrix t = adjoint(p.eig.vectors) * p.pm->rho.mats[g] * p.eig.vectors;
      for (int i = 0; i < pm_dim; ++i)
        for (int j = 0; j < pm_dim; ++j) r.at(i, j) = t.at(i, j);
    }
    if (p.reg)
      for (int c = 0; c < nslots; ++c) {
        const int off = pm_dim + c * k_dim;
        for (int i = 0; i < k_dim; ++i)
          for (int j = 0; j < k_dim; ++j) r.at(off + i, off + j) = p.reg->rho11.mats[g].at(i, j);
      }
    m.rho_full.push_back(std::move(r));
  }

  m.a_slot = CMatrix(dim, dim);
  for (int i = 0; i < pm_dim; ++i) m.a_slot.at(i, i) = p.eig.values[i];

  m.dens.reserve(nslots);
  const double reg_weight = 1.0 - p.trace_abs;
  for (int j = 0; j < nslots; ++j) {
    CMatrix d(dim, dim);
    for (int i = 0; i < pm_dim; ++i) d.at(i, i) = std::abs(p.eig.values[i]);
    if (p.reg) {
      const int off = pm_dim + j * k_dim;
      for (int i = 0; i < k_dim; ++i)
        for (int k = 0; k < k_dim; ++k)
          d.at(off + i, off + k) = reg_weight * p.reg->xi[i] * std::conj(p.reg->xi[k]);
    }
    m.dens.push_back(std::move(d));
  }
  m.params = std::move(p);
  return m;
}

// Sign of the permutation induced on the minus-labeled entries of x when the
// slots move by s: entry m sits at the m-th minus slot i_m and lands at
// s(i_m); the sign is the parity of the rank permutation of the targets.
// +1 when no entry is minus-labeled.
inline int cocycle_sign(const std::vector<int>& x, const Perm& s, const SlotBasis& basis) {
  std::vector<int> targets;
  for (size_t j = 0; j < x.size(); ++j)
    if (basis.minus(x[j])) targets.push_back(s.apply(static_cast<int>(j) + 1));
  int sg = 1;
  for (size_t i = 0; i < targets.size(); ++i)
    for (size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] > targets[j]) sg = -sg;
  return sg;
}

// Tr( U(s) * tensor_j mats[j] ) by direct contraction over multi-indices.
// mats[j] is the full slot-j factor; densities are the caller's business.
inline cplx signed_trace(const TensorModel& m, const Perm& s, const std::vector<CMatrix>& mats) {
  if (static_cast<int>(mats.size()) != m.nslots)
    throw validation_error("signed_trace: need one matrix per slot");
  if (s.max_point() > m.nslots)
    throw validation_error("signed_trace: permutation moves points beyond the slots");
  const int n = m.nslots;
  const int d = m.basis.dim;
  for (const auto& f : mats)
    if (f.rows != d || f.cols != d) throw validation_error("signed_trace: slot matrix dimension");
  std::vector<int> simg(n + 1);
  for (int j = 1; j <= n; ++j) simg[j] = s.apply(j);

  std::vector<int> x(n, 0), z(n);
  cplx total = 0;
  while (true) {
    for (int j = 0; j < n; ++j) z[j] = x[simg[j + 1] - 1];
    cplx term = 1;
    bool zero = false;
    for (int j = 0; j < n; ++j) {
      const cplx f = mats[j].at(z[j], x[j]);
      if (f == cplx{}) {
        zero = true;
        break;
      }
      term *= f;
    }
    if (!zero) total += double(cocycle_sign(z, s, m.basis)) * term;
    int j = n - 1;
    while (j >= 0 && ++x[j] == d) {
      x[j] = 0;
      --j;
    }
    if (j < 0) break;
  }
  return total;
}

// psi(g) = Tr( U(s) * tensor_j rho(gamma_j) D_j ).  Values are independent
// of the slot count beyond the support of g.
inline cplx oracle_eval(const StateParams& p, const Element& g, int nslots, double cap = 20000) {
  const int n = std::max(std::max(nslots, max_point(g)), 1);
  const TensorModel m = make_model(p, n, cap);
  std::vector<CMatrix> mats;
  mats.reserve(n);
  for (int j = 1; j <= n; ++j) mats.push_back(m.rho(color_at(g, j, p.group)) * m.dens[j - 1]);
  return signed_trace(m, g.s, mats);
}

// ---- explicit operators (dense, for the representation-relation tests) ----

struct SignedPerm {
  std::vector<long> dest;
  std::vector<int> sgn;

  // (a ∘ b)|x> = a(b|x>)
  static SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
    SignedPerm c;
    c.dest.resize(b.dest.size());
    c.sgn.resize(b.dest.size());
    for (size_t x = 0; x < b.dest.size(); ++x) {
      c.dest[x] = a.dest[b.dest[x]];
      c.sgn[x] = b.sgn[x] * a.sgn[b.dest[x]];
    }
    return c;
  }

  bool operator==(const SignedPerm& o) const { return dest == o.dest && sgn == o.sgn; }
};

inline long encode(const std::vector<int>& x, int dim) {
  long e = 0;
  for (int v : x) e = e * dim + v;  // slot 1 is the slow index, as in kron
  return e;
}

inline SignedPerm signed_perm_u(const TensorModel& m, const Perm& s) {
  if (s.max_point() > m.nslots)
    throw validation_error("signed_perm_u: permutation moves points beyond the slots");
  const int n = m.nslots, d = m.basis.dim;
  std::vector<int> sinv(n + 1);
  for (int j = 1; j <= n; ++j) sinv[j] = s.apply_inv(j);
  SignedPerm u;
  u.dest.resize(m.dim_pow);
  u.sgn.resize(m.dim_pow);
  std::vector<int> x(n, 0), y(n);
  long ix = 0;
  while (true) {
    for (int j = 0; j < n; ++j) y[j] = x[sinv[j + 1] - 1];
    u.dest[ix] = encode(y, d);
    u.sgn[ix] = cocycle_sign(x, s, m.basis);
    int j = n - 1;
    while (j >= 0 && ++x[j] == d) {
      x[j] = 0;
      --j;
    }
    if (j < 0) break;
    ++ix;
  }
  return u;
}

inline CMatrix dense_of(const SignedPerm& u) {
  const int n = static_cast<int>(u.dest.size());
  CMatrix m(n, n);
  for (int x = 0; x < n; ++x) m.at(static_cast<int>(u.dest[x]), x) = double(u.sgn[x]);
  return m;
}

inline CMatrix build_U(const TensorModel& m, const Perm& s) { return dense_of(signed_perm_u(m, s)); }

// conjugation by the signed permutation without forming dense products
inline CMatrix conj_by_u(const SignedPerm& u, const CMatrix& a) {
  const int n = a.rows;
  CMatrix r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r.at(static_cast<int>(u.dest[i]), static_cast<int>(u.dest[j])) =
          double(u.sgn[i] * u.sgn[j]) * a.at(i, j);
  return r;
}

inline CMatrix tensor_all(const std::vector<CMatrix>& mats) {
  CMatrix t = CMatrix::identity(1);
  for (const auto& m : mats) t = kron(t, m);
  return t;
}

// the slot-l asymptotic-transposition operator: multiply slot l by A
inline CMatrix build_O(const TensorModel& m, int l) {
  if (l < 1 || l > m.nslots) throw validation_error("build_O: slot out of range");
  std::vector<CMatrix> mats(m.nslots, CMatrix::identity(m.basis.dim));
  mats[l - 1] = m.a_slot;
  return tensor_all(mats);
}

inline CMatrix density_tensor(const TensorModel& m) { return tensor_all(m.dens); }

// <v, w> = 1-psi(w^* v) = Tr(w^* v D_1 (x) ... (x) D_N)
inline cplx pair_psi(const TensorModel& m, const CMatrix& v, const CMatrix& w) {
  return trace(adjoint(w) * v * density_tensor(m));
}

inline std::vector<Perm> all_perms(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  std::vector<Perm> out;
  do {
    std::map<int, int> mp;
    for (int i = 0; i < n; ++i) mp[i + 1] = img[i];
    out.push_back(Perm::from_map(mp));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Alt(n) = (1/n!) sum sign(s) U(s); with signed_u = false the plain
// permutation action is used instead of the cocycle-signed one.
inline CMatrix build_alt(const TensorModel& m, int n, bool signed_u = true) {
  if (n < 1 || n > m.nslots) throw validation_error("build_alt: n out of range");
  if (n > 6) throw validation_error("build_alt: n! budget is capped at 6! = 720");
  CMatrix acc(static_cast<int>(m.dim_pow), static_cast<int>(m.dim_pow));
  const auto perms = all_perms(n);
  const double w = 1.0 / double(perms.size());
  for (const auto& s : perms) {
    SignedPerm u = signed_perm_u(m, s);
    if (!signed_u) std::fill(u.sgn.begin(), u.sgn.end(), 1);
    const double c = w * s.sign();
    for (long x = 0; x < m.dim_pow; ++x)
      acc.at(static_cast<int>(u.dest[x]), static_cast<int>(x)) += c * u.sgn[x];
  }
  return acc;
}

inline CMatrix build_sym(const TensorModel& m, int n, bool signed_u = true) {
  if (n < 1 || n > m.nslots) throw validation_error("build_sym: n out of range");
  if (n > 6) throw validation_error("build_sym: n! budget is capped at 6! = 720");
  CMatrix acc(static_cast<int>(m.dim_pow), static_cast<int>(m.dim_pow));
  const auto perms = all_perms(n);
  const double w = 1.0 / double(perms.size());
  for (const auto& s : perms) {
    SignedPerm u = signed_perm_u(m, s);
    if (!signed_u) std::fill(u.sgn.begin(), u.sgn.end(), 1);
    for (long x = 0; x < m.dim_pow; ++x)
      acc.at(static_cast<int>(u.dest[x]), static_cast<int>(x)) += w * u.sgn[x];
  }
  return acc;
}

// Tr( Pi(g) * (A at slot l) * Pi(h) * D^(x)N ): the pairing that replaces a
// transposition (l, far) by the slot-l A insertion.  Requires the slot
// representation to preserve the plus/minus/reg blocks exactly, which every
// validated parameter set here does up to 1e-10.
inline cplx a_insertion_pairing(const TensorModel& m, const Element& g, int l, const Element& h) {
  if (l < 1 || l > m.nslots) throw validation_error("a_insertion_pairing: slot out of range");
  const Group& gr = m.params.group;
  std::vector<CMatrix> mats;
  mats.reserve(m.nslots);
  for (int j = 1; j <= m.nslots; ++j) {
    const int hj = h.s.apply(j);
    CMatrix f = m.rho(color_at(g, hj, gr));
    if (hj == l) f = f * m.a_slot;
    f = f * m.rho(color_at(h, j, gr)) * m.dens[j - 1];
    mats.push_back(std::move(f));
  }
  return signed_trace(m, g.s * h.s, mats);
}

// ---- packaged model checks ----------------------------------------------

struct QuantizationReport {
  double alpha = 0;
  double nu = 0;              // psi(P_alpha)/|alpha|, should be a multiplicity
  double nu_residual = 0;     // distance of nu from the nearest integer
  double star_residual = 0;   // worst over exhaustive S_2 and S_3
  double falling_residual = 0;
  double top_alt_value = 0;   // <Alt(nu+1) eta, eta> (Sym for alpha < 0)
  bool passed = false;
};

namespace detail {
inline long perm_cycle_count(const Perm& s, int n) {
  // cycles of s on {1..n}, counting fixed points
  long moved = 0, cycles = 0;
  for (const auto& c : s.cycles()) {
    moved += static_cast<long>(c.size());
    ++cycles;
  }
  return cycles + (n - moved);
}
}  // namespace detail

inline QuantizationReport quantization_check(const StateParams& p, double alpha, int n_max,
                                             double cap = 20000) {
  if (n_max < 1 || n_max > 6) throw validation_error("quantization_check: n out of budget");
  QuantizationReport rep;
  rep.alpha = alpha;

  auto value_of = [&](const TensorModel& m, const Perm& s, int n) {
    // <U(s) eta_n, eta_n>, eta_n = P_alpha on the first n slots
    CMatrix proj(m.basis.dim, m.basis.dim);
    for (int i = 0; i < m.basis.dim; ++i)
      if (m.basis.labels[i].kind != SlotLabel::Reg &&
          std::abs(m.basis.labels[i].eigenvalue - alpha) < 1e-9)
        proj.at(i, i) = 1.0;
    std::vector<CMatrix> mats;
    for (int j = 0; j < m.nslots; ++j)
      mats.push_back(j < n ? proj * m.dens[j] * proj : m.dens[j]);
    return signed_trace(m, s, mats);
  };

  {
    const TensorModel m1 = make_model(p, 1, cap);
    rep.nu = value_of(m1, Perm(), 1).real() / std::abs(alpha);
    rep.nu_residual = std::abs(rep.nu - std::round(rep.nu));
  }
  const long nu_int = static_cast<long>(std::round(rep.nu));

  // exhaustive check of <U(s) eta_n, eta_n> = alpha^n nu^{l(s)} over S_2, S_3
  // (times sign(s) when alpha < 0), fixed points counted as cycles
  for (int n = 2; n <= 3; ++n) {
    const TensorModel m = make_model(p, n, cap);
    for (const auto& s : all_perms(n)) {
      const cplx got = value_of(m, s, n);
      const long l = detail::perm_cycle_count(s, n);
      double expect = std::pow(std::abs(alpha), n) * std::pow(double(nu_int), double(l));
      if (alpha < 0) expect *= s.sign();
      rep.star_residual = std::max(rep.star_residual, std::abs(got - expect));
    }
  }

  // n! <Alt(n) eta, eta> = alpha^n nu(nu-1)...(nu-n+1) for alpha > 0,
  // with Sym in place of Alt (and |alpha|) for alpha < 0
  auto falling = [&](int n) {
    double f = 1;
    for (int i = 0; i < n; ++i) f *= double(nu_int - i);
    return f;
  };
  for (int n = 1; n <= n_max; ++n) {
    const TensorModel m = make_model(p, n, cap);
    cplx sum = 0;
    double fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (const auto& s : all_perms(n)) sum += (alpha > 0 ? double(s.sign()) : 1.0) * value_of(m, s, n);
    const double expect = std::pow(std::abs(alpha), n) * falling(n);
    rep.falling_residual = std::max(rep.falling_residual, std::abs(sum - expect));
    if (n == nu_int + 1) rep.top_alt_value = std::abs(sum) / fact;
  }

  rep.passed = rep.nu_residual <= 1e-9 && rep.star_residual <= 1e-8 && rep.falling_residual <= 1e-8;
  return rep;
}

struct TranspositionReport {
  double drift = 0;            // spread of the pairing across far transposition partners
  double insert_residual = 0;  // pairing vs the slot-l A insertion
  bool passed = false;
};

// <U((l k)) Pi(v) I, Pi(w) I> must not depend on k beyond the supports and
// must equal <O_l Pi(v) I, Pi(w) I>.
inline TranspositionReport transposition_stability_check(const StateParams& p, int l,
                                                         const Element& v, const Element& w,
                                                         const std::vector<int>& far_partners,
                                                         double cap = 20000) {
  TranspositionReport rep;
  if (far_partners.empty()) throw validation_error("transposition_stability_check: no partners");
  int n = std::max({l, max_point(v), max_point(w)});
  for (int k : far_partners) n = std::max(n, k);
  std::vector<cplx> vals;
  for (int k : far_partners) {
    Element t;
    t.s = Perm::transposition(l, k);
    const Element e = multiply(multiply(inverse(w, p.group), t, p.group), v, p.group);
    vals.push_back(oracle_eval(p, e, n, cap));
  }
  for (size_t i = 1; i < vals.size(); ++i)
    rep.drift = std::max(rep.drift, std::abs(vals[i] - vals[0]));

  const TensorModel m = make_model(p, n, cap);
  const cplx ins = a_insertion_pairing(m, inverse(w, p.group), l, v);
  rep.insert_residual = std::abs(ins - vals[0]);
  rep.passed = rep.drift <= 1e-12 && rep.insert_residual <= 1e-10;
  return rep;
}

struct SpectralReport {
  double psi_e = 0;
  double lhs = 0, rhs = 0;
  bool passed = false;
};

// psi(E_[a,b])^2 >= eps * psi(E_[a,b]) for spectral windows clear of zero
inline SpectralReport spectral_inequality_check(const StateParams& p, double a, double b,
                                                double eps) {
  if (!(a <= b)) throw validation_error("spectral_inequality_check: malformed interval");
  if (a <= 0 && b >= 0) throw validation_error("spectral_inequality_check: interval touches zero");
  if (std::min(std::abs(a), std::abs(b)) < eps)
    throw validation_error("spectral_inequality_check: eps must sit below the interval");
  SpectralReport rep;
  if (p.pm)
    for (double lam : p.eig.values)
      if (lam >= a && lam <= b) rep.psi_e += std::abs(lam);
  rep.lhs = rep.psi_e * rep.psi_e;
  rep.rhs = eps * rep.psi_e;
  rep.passed = rep.lhs >= rep.rhs - 1e-10;
  return rep;
}

struct OrthogonalityReport {
  double worst_kernel_pairing = 0;  // || P_pm X P_0 xi ||
  double worst_mixed_sign = 0;      // P_alpha X P_beta with alpha*beta < 0
  bool passed = false;
};

// Slot-level orthogonality: the algebra generated by A and rho cannot map
// the kernel of A into its complement with nonzero psi-weight, and cannot
// connect spectral blocks of opposite sign.
inline OrthogonalityReport orthogonality_checks(const StateParams& p, double cap = 20000) {
  OrthogonalityReport rep;
  const TensorModel m = make_model(p, 1, cap);
  const int d = m.basis.dim;
  CMatrix pz(d, d), ppm(d, d);
  for (int i = 0; i < d; ++i) {
    const bool zero = m.basis.labels[i].kind == SlotLabel::Reg ||
                      std::abs(m.basis.labels[i].eigenvalue) < kEigZeroTol;
    (zero ? pz : ppm).at(i, i) = 1.0;
  }
  std::vector<CMatrix> monomials;
  for (int g = 0; g < p.group.order; ++g) {
    monomials.push_back(m.rho(g));
    monomials.push_back(m.rho(g) * m.a_slot);
    for (int h = 0; h < p.group.order; ++h) monomials.push_back(m.rho(g) * m.a_slot * m.rho(h));
  }
  for (const auto& x : monomials) {
    const CMatrix v = ppm * x * pz;
    const cplx nrm2 = trace(adjoint(v) * v * m.dens[0]);
    rep.worst_kernel_pairing = std::max(rep.worst_kernel_pairing, std::sqrt(std::abs(nrm2)));
  }
  if (p.pm) {
    const auto& vals = p.eig.values;
    for (size_t i = 0; i < vals.size(); ++i)
      for (size_t j = 0; j < vals.size(); ++j) {
        if (!(vals[i] > kEigZeroTol && vals[j] < -kEigZeroTol)) continue;
        CMatrix pa(d, d), pb(d, d);
        for (size_t k = 0; k < vals.size(); ++k) {
          if (std::abs(vals[k] - vals[i]) < 1e-12) pa.at(int(k), int(k)) = 1.0;
          if (std::abs(vals[k] - vals[j]) < 1e-12) pb.at(int(k), int(k)) = 1.0;
        }
        for (const auto& x : monomials) {
          const CMatrix v = pa * x * pb;
          rep.worst_mixed_sign = std::max(rep.worst_mixed_sign, norm_max(v));
          rep.worst_mixed_sign =
              std::max(rep.worst_mixed_sign, std::abs(trace(v * m.dens[0])));
        }
      }
  }
  rep.passed = rep.worst_kernel_pairing <= 1e-10 && rep.worst_mixed_sign <= 1e-10;
  return rep;
}

}  // namespace wreath
