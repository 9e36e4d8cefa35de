#pragma once

// Central states parametrized by a self-adjoint trace-class contraction A
// together with a unitary representation rho on the same space, plus an
// optional truncated "regular" block (rho11, xi_hat, copies) that carries the
// missing trace weight 1 - Tr|A|.
//
// Closed forms evaluated here:
//   singleton:   Tr(rho(c)|A|) + (1 - Tr|A|) <rho11(c) xi, xi>
//   cycle l>=2:  Tr_+(M) + (-1)^(l-1) Tr_-(M),
//                M = prod over the cycle, starting at the orbit minimum and
//                stepping backwards, of rho(color)*|A|,
// multiplied over generalized cycles.  The tensor oracle is the ground truth
// these forms are tested against; see oracle.hpp.

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wreath/characters.hpp"
#include "wreath/element.hpp"
#include "wreath/group.hpp"

namespace wreath {

struct PmBlock {
  CMatrix A;  // Hermitian, no kernel unless allow_pm_kernel
  Rep rho;
};

struct RegBlock {
  Rep rho11;
  std::vector<cplx> xi;  // unit vector in the rho11 space
  int copies = 1;        // declared truncation width; evaluation is width-independent
};

struct StateParams {
  Group group;
  std::optional<PmBlock> pm;
  std::optional<RegBlock> reg;
  bool allow_pm_kernel = false;  // set by phi_sp_params; switches the kernel
                                 // invariant to a cyclicity test

  // derived by validate_state
  HermEig eig;          // of pm->A
  CMatrix abs_a;        // |A| in the original basis
  CMatrix proj_plus;    // spectral projection onto eigenvalues > 0
  CMatrix proj_minus;   // spectral projection onto eigenvalues < 0
  double trace_abs = 0;

  int pm_dim() const { return pm ? pm->A.rows : 0; }
  int reg_dim() const { return reg ? reg->rho11.dim : 0; }
};

inline constexpr double kEigZeroTol = 1e-12;

inline cplx xi_pairing(const RegBlock& r, int g) {
  // <rho11(g) xi, xi>
  cplx v = 0;
  for (int i = 0; i < r.rho11.dim; ++i)
    for (int j = 0; j < r.rho11.dim; ++j) v += std::conj(r.xi[i]) * r.rho11.mats[g].at(i, j) * r.xi[j];
  return v;
}

// Orthonormal basis of the space the algebra generated by A and rho(Gamma)
// reaches from the seed vectors; used for the kernel-side conditions.
inline std::vector<std::vector<cplx>> algebra_orbit_basis(const PmBlock& pm,
                                                          const std::vector<std::vector<cplx>>& seeds) {
  const int n = pm.A.rows;
  std::vector<std::vector<cplx>> basis;
  auto add = [&](std::vector<cplx> v) {
    for (const auto& b : basis) {
      cplx proj = 0;
      for (int i = 0; i < n; ++i) proj += std::conj(b[i]) * v[i];
      for (int i = 0; i < n; ++i) v[i] -= proj * b[i];
    }
    double nrm = 0;
    for (const auto& x : v) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    if (nrm <= 1e-10) return false;
    for (auto& x : v) x /= nrm;
    basis.push_back(std::move(v));
    return true;
  };
  for (const auto& s : seeds) add(s);
  size_t frontier_begin = 0;
  while (frontier_begin < basis.size()) {
    const size_t frontier_end = basis.size();
    for (size_t v = frontier_begin; v < frontier_end; ++v) {
      std::vector<const CMatrix*> gens;
      gens.push_back(&pm.A);
      for (const auto& m : pm.rho.mats) gens.push_back(&m);
      for (const CMatrix* g : gens) {
        std::vector<cplx> w(n, 0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) w[i] += g->at(i, j) * basis[v][j];
        add(std::move(w));
      }
      if (static_cast<int>(basis.size()) == n) return basis;
    }
    frontier_begin = frontier_end;
  }
  return basis;
}

inline void validate_state(StateParams& p) {
  p.trace_abs = 0;
  if (p.pm) {
    const PmBlock& b = *p.pm;
    if (b.A.rows != b.A.cols) throw validation_error("state: A must be square");
    if (!is_hermitian(b.A, 1e-12)) throw validation_error("state: A is not Hermitian within 1e-12");
    if (!b.rho.group.same_table(p.group)) throw validation_error("state: rho over a different group");
    validate_rep(b.rho);
    if (b.rho.dim != b.A.rows) throw validation_error("state: rho dimension differs from A");
    p.eig = hermitian_eig(b.A);
    for (double lam : p.eig.values) {
      if (std::abs(lam) > 1.0 + 1e-12)
        throw validation_error("state: A has an eigenvalue of modulus " + std::to_string(std::abs(lam)) +
                               " > 1");
      p.trace_abs += std::abs(lam);
    }
    if (p.trace_abs > 1.0 + 1e-12)
      throw validation_error("state: Tr|A| = " + std::to_string(p.trace_abs) +
                             " exceeds 1 (trace-class mass bound)");
    p.proj_plus = spectral_projection(p.eig, [](double l) { return l > kEigZeroTol; });
    p.proj_minus = spectral_projection(p.eig, [](double l) { return l < -kEigZeroTol; });
    p.abs_a = abs_op(b.A);
    auto eigvec = [&](size_t k) {
      std::vector<cplx> v(b.A.rows);
      for (int i = 0; i < b.A.rows; ++i) v[i] = p.eig.vectors.at(i, int(k));
      return v;
    };
    const bool has_kernel =
        std::any_of(p.eig.values.begin(), p.eig.values.end(),
                    [](double l) { return std::abs(l) < kEigZeroTol; });
    if (!p.allow_pm_kernel) {
      if (has_kernel)
        throw validation_error(
            "state: A has a zero eigenvalue; the kernel must live in the regular block");
      for (int g = 0; g < p.group.order; ++g) {
        const CMatrix& m = b.rho.mats[g];
        if (norm_max(m * p.proj_plus - p.proj_plus * m) > 1e-10 ||
            norm_max(m * p.proj_minus - p.proj_minus * m) > 1e-10)
          throw validation_error(
              "state: rho('" + p.group.names[g] +
              "') does not commute with the spectral projections of A (positive and negative "
              "parts must be invariant)");
      }
    } else {
      // product-state reading: the algebra orbit of the kernel complement
      // must span the block, and the orbits of the positive and negative
      // parts must stay orthogonal
      std::vector<std::vector<cplx>> nonzero, plus, minus;
      for (size_t k = 0; k < p.eig.values.size(); ++k) {
        if (std::abs(p.eig.values[k]) < kEigZeroTol) continue;
        nonzero.push_back(eigvec(k));
        (p.eig.values[k] > 0 ? plus : minus).push_back(eigvec(k));
      }
      if (static_cast<int>(algebra_orbit_basis(b, nonzero).size()) != b.A.rows)
        throw validation_error(
            "state: the orbit of the kernel complement under {A, rho} does not span the block "
            "(cyclicity fails)");
      const auto oplus = algebra_orbit_basis(b, plus);
      const auto ominus = algebra_orbit_basis(b, minus);
      for (const auto& u : oplus)
        for (const auto& v : ominus) {
          cplx ip = 0;
          for (int i = 0; i < b.A.rows; ++i) ip += std::conj(u[i]) * v[i];
          if (std::abs(ip) > 1e-10)
            throw validation_error(
                "state: the algebra orbits of the positive and negative parts of A overlap");
        }
    }
  }

  const bool full_mass = p.trace_abs >= 1.0 - 1e-12;
  if (!full_mass) {
    if (!p.reg)
      throw validation_error("state: Tr|A| = " + std::to_string(p.trace_abs) +
                             " < 1 requires a regular block to carry the remaining weight");
  } else if (p.reg) {
    throw validation_error("state: Tr|A| = 1 leaves no weight for a regular block; drop it");
  }
  if (p.reg) {
    RegBlock& r = *p.reg;
    if (!r.rho11.group.same_table(p.group)) throw validation_error("state: rho11 over a different group");
    validate_rep(r.rho11);
    if (static_cast<int>(r.xi.size()) != r.rho11.dim)
      throw validation_error("state: xi dimension differs from rho11");
    double nrm = 0;
    for (const auto& x : r.xi) nrm += std::norm(x);
    nrm = std::sqrt(nrm);
    if (std::abs(nrm - 1.0) > 1e-10)
      throw validation_error("state: xi must be a unit vector (norm = " + std::to_string(nrm) + ")");
    if (r.copies < 1) throw validation_error("state: copies must be >= 1");
  }
}

inline cplx eval_singleton(const StateParams& p, int gamma) {
  cplx v = 0;
  if (p.pm) v += trace(p.pm->rho.mats[gamma] * p.abs_a);
  if (p.reg) v += (1.0 - p.trace_abs) * xi_pairing(*p.reg, gamma);
  return v;
}

inline cplx eval_cycle(const StateParams& p, const GenCycle& c) {
  const int l = c.length();
  if (l < 2) throw validation_error("eval_cycle: singleton orbits go through eval_singleton");
  if (!p.pm) return 0.0;
  CMatrix m = CMatrix::identity(p.pm_dim());
  int pos = c.orbit[0];
  for (int step = 0; step < l; ++step) {
    auto it = c.colors.find(pos);
    if (it != c.colors.end()) m = m * p.pm->rho.mats[it->second];
    m = m * p.abs_a;
    pos = c.cycle.apply_inv(pos);
  }
  const double sg = (l % 2 == 0) ? -1.0 : 1.0;
  return trace(p.proj_plus * m) + sg * trace(p.proj_minus * m);
}

inline cplx eval(const StateParams& p, const Element& g) {
  cplx v = 1.0;
  for (const auto& c : generalized_cycles(g))
    v *= (c.length() == 1) ? eval_singleton(p, c.colors.begin()->second) : eval_cycle(p, c);
  return v;
}

struct KmsResult {
  bool kms = false;
  std::string diagnosis;
};

// KMS holds iff the kernel of A is exactly the regular block and xi is both
// cyclic and separating for rho11.  With ranks: r_v = dim span{rho11(g) xi},
// r_m = dim span{rho11(g)}; cyclic <=> r_v = dim, separating <=> r_v = r_m.
inline KmsResult check_kms(const StateParams& p) {
  KmsResult res;
  if (p.pm) {
    for (double lam : p.eig.values)
      if (std::abs(lam) < 1e-10) {
        res.kms = false;
        res.diagnosis = "A has kernel outside the regular block";
        return res;
      }
  }
  if (!p.reg) {
    res.kms = true;
    res.diagnosis = "A invertible, no regular block";
    return res;
  }
  const RegBlock& r = *p.reg;
  std::vector<std::vector<cplx>> images, mats;
  for (int g = 0; g < p.group.order; ++g) {
    std::vector<cplx> v(r.rho11.dim, 0);
    for (int i = 0; i < r.rho11.dim; ++i)
      for (int j = 0; j < r.rho11.dim; ++j) v[i] += r.rho11.mats[g].at(i, j) * r.xi[j];
    images.push_back(std::move(v));
    mats.push_back(flatten(r.rho11.mats[g]));
  }
  const int rv = rank_of_vectors(images);
  const int rm = rank_of_vectors(mats);
  const bool cyclic = rv == r.rho11.dim;
  const bool separating = rv == rm;
  res.kms = cyclic && separating;
  std::ostringstream os;
  os << "xi " << (cyclic ? "cyclic" : "not cyclic") << " (orbit rank " << rv << " of " << r.rho11.dim
     << "), " << (separating ? "separating" : "not separating") << " (algebra rank " << rm << ")";
  res.diagnosis = os.str();
  return res;
}

// New parameters (V_pm A V_pm*, V_pm rho V_pm*, V_k rho11 V_k*, V_k xi);
// evaluation must be unchanged, which the verify suite tests rather than
// assumes.  Pass empty matrices for blocks that are absent.
inline StateParams conjugate_params(const StateParams& p, const CMatrix& v_pm, const CMatrix& v_k) {
  auto check_unitary = [](const CMatrix& v, const char* which) {
    if (v.empty()) return;
    if (max_abs_diff(v * adjoint(v), CMatrix::identity(v.rows)) > 1e-10)
      throw validation_error(std::string("conjugate_params: ") + which + " is not unitary");
  };
  check_unitary(v_pm, "pm block map");
  check_unitary(v_k, "regular block map");
  StateParams q;
  q.group = p.group;
  q.allow_pm_kernel = p.allow_pm_kernel;
  if (p.pm) {
    if (v_pm.rows != p.pm_dim()) throw validation_error("conjugate_params: pm dimension mismatch");
    PmBlock b;
    b.A = v_pm * p.pm->A * adjoint(v_pm);
    std::vector<CMatrix> mats;
    for (const auto& m : p.pm->rho.mats) mats.push_back(v_pm * m * adjoint(v_pm));
    b.rho = make_rep(p.group, std::move(mats));
    q.pm = std::move(b);
  }
  if (p.reg) {
    if (v_k.rows != p.reg_dim()) throw validation_error("conjugate_params: regular dimension mismatch");
    RegBlock r;
    std::vector<CMatrix> mats;
    for (const auto& m : p.reg->rho11.mats) mats.push_back(v_k * m * adjoint(v_k));
    r.rho11 = make_rep(p.group, std::move(mats));
    r.xi.assign(p.reg_dim(), 0);
    for (int i = 0; i < p.reg_dim(); ++i)
      for (int j = 0; j < p.reg_dim(); ++j) r.xi[i] += v_k.at(i, j) * p.reg->xi[j];
    r.copies = p.reg->copies;
    q.reg = std::move(r);
  }
  validate_state(q);
  return q;
}

// Product-state parameters: A is the rank-one projection onto xi, restricted
// to the subspace spanned by rho(Gamma) xi so the cyclicity condition holds.
inline StateParams phi_sp_params(const Rep& rho, const std::vector<cplx>& xi) {
  if (static_cast<int>(xi.size()) != rho.dim) throw validation_error("phi_sp: xi dimension mismatch");
  double nrm = 0;
  for (const auto& x : xi) nrm += std::norm(x);
  if (std::abs(std::sqrt(nrm) - 1.0) > 1e-10) throw validation_error("phi_sp: xi must be a unit vector");

  // orthonormal basis of span{rho(g) xi}, xi first
  std::vector<std::vector<cplx>> basis;
  auto add = [&](std::vector<cplx> v) {
    for (const auto& b : basis) {
      cplx proj = 0;
      for (size_t i = 0; i < v.size(); ++i) proj += std::conj(b[i]) * v[i];
      for (size_t i = 0; i < v.size(); ++i) v[i] -= proj * b[i];
    }
    double n2 = 0;
    for (const auto& x : v) n2 += std::norm(x);
    if (std::sqrt(n2) > 1e-10) {
      for (auto& x : v) x /= std::sqrt(n2);
      basis.push_back(std::move(v));
    }
  };
  add(xi);
  for (int g = 0; g < rho.group.order; ++g) {
    std::vector<cplx> v(rho.dim, 0);
    for (int i = 0; i < rho.dim; ++i)
      for (int j = 0; j < rho.dim; ++j) v[i] += rho.mats[g].at(i, j) * xi[j];
    add(std::move(v));
  }
  const int d = static_cast<int>(basis.size());

  StateParams p;
  p.group = rho.group;
  p.allow_pm_kernel = true;
  PmBlock b;
  b.A = CMatrix(d, d);
  b.A.at(0, 0) = 1.0;  // projection onto xi in the restricted basis
  std::vector<CMatrix> mats;
  for (int g = 0; g < rho.group.order; ++g) {
    CMatrix m(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        cplx v = 0;
        for (int i = 0; i < rho.dim; ++i)
          for (int j = 0; j < rho.dim; ++j)
            v += std::conj(basis[r][i]) * rho.mats[g].at(i, j) * basis[c][j];
        m.at(r, c) = v;
      }
    mats.push_back(std::move(m));
  }
  b.rho = make_rep(rho.group, std::move(mats));
  p.pm = std::move(b);
  validate_state(p);
  return p;
}

// Regular-state parameters: no pm block, all weight on (rho11, xi).
inline StateParams phi_reg_params(const Rep& rho11, const std::vector<cplx>& xi, int copies = 1) {
  StateParams p;
  p.group = rho11.group;
  RegBlock r;
  r.rho11 = rho11;
  r.xi = xi;
  r.copies = copies;
  p.reg = std::move(r);
  validate_state(p);
  return p;
}

// Thoma side-by-side: character parameters with one-dimensional
// representations realized as state parameters (diagonal A with the alpha
// weights positive and the beta weights negated).
inline StateParams character_params_to_state(const CharacterParams& cp, int reg_copies = 1) {
  std::vector<double> diag;
  std::vector<CMatrix> mats(cp.group.order);
  int dim = 0;
  for (const auto& wr : cp.alphas) {
    if (wr.rep.dim != 1) throw validation_error("character_params_to_state: needs 1-dim reps");
    diag.push_back(wr.weight);
    ++dim;
  }
  for (const auto& wr : cp.betas) {
    if (wr.rep.dim != 1) throw validation_error("character_params_to_state: needs 1-dim reps");
    diag.push_back(-wr.weight);
    ++dim;
  }
  StateParams p;
  p.group = cp.group;
  if (dim > 0) {
    for (int g = 0; g < cp.group.order; ++g) {
      CMatrix m(dim, dim);
      int k = 0;
      for (const auto& wr : cp.alphas) m.at(k, k) = wr.rep.mats[g].at(0, 0), ++k;
      for (const auto& wr : cp.betas) m.at(k, k) = wr.rep.mats[g].at(0, 0), ++k;
      mats[g] = std::move(m);
    }
    PmBlock b;
    b.A = CMatrix::diag(diag);
    b.rho = make_rep(cp.group, std::move(mats));
    p.pm = std::move(b);
  }
  if (cp.delta > 1e-12) {
    // realize delta * tr(tau) through the trace vector of tau (x) I
    const Rep& tau = *cp.tau;
    const int d = tau.dim;
    std::vector<CMatrix> mats;
    for (int g = 0; g < cp.group.order; ++g) mats.push_back(kron(tau.mats[g], CMatrix::identity(d)));
    RegBlock r;
    r.rho11 = make_rep(cp.group, std::move(mats));
    r.xi.assign(static_cast<size_t>(d) * d, 0);
    for (int i = 0; i < d; ++i) r.xi[static_cast<size_t>(i) * d + i] = 1.0 / std::sqrt(double(d));
    r.copies = reg_copies;
    p.reg = std::move(r);
  }
  validate_state(p);
  return p;
}

}  // namespace wreath
