#pragma once

// Seeded, reproducible property checks over an evaluator (character or
// state).  Every check produces a CheckReport; full_suite aggregates the
// checks that apply to the given parameter kind.  Failing sample elements
// are serialized in the element grammar so a run can be replayed.

#include <functional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "wreath/characters.hpp"
#include "wreath/element.hpp"
#include "wreath/oracle.hpp"
#include "wreath/state.hpp"

namespace wreath {

struct CheckReport {
  std::string name;
  std::string property;  // the identity being exercised, in formula form
  bool passed = false;
  double worst_residual = 0;
  double tolerance = 0;
  int samples = 0;
  uint64_t seed = 0;
  std::vector<std::string> details;  // failing instances, replayable
};

using Evaluator = std::function<cplx(const Element&)>;

// ---- samplers -------------------------------------------------------------

inline Perm random_perm(std::mt19937_64& rng, int lo, int hi) {
  std::vector<int> pts;
  for (int i = lo; i <= hi; ++i)
    if (rng() % 2 == 0) pts.push_back(i);
  std::shuffle(pts.begin(), pts.end(), rng);
  std::map<int, int> m;
  std::vector<int> sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < pts.size(); ++i) m[sorted[i]] = pts[i];
  return Perm::from_map(m);
}

inline Element random_element(std::mt19937_64& rng, const Group& g, int lo, int hi) {
  Element e;
  e.s = random_perm(rng, lo, hi);
  if (g.order > 1)
    for (int i = lo; i <= hi; ++i)
      if (rng() % 3 == 0) {
        const int c = static_cast<int>(rng() % g.order);
        if (c != g.identity) e.colors[i] = c;
      }
  return e;
}

inline CMatrix random_unitary(std::mt19937_64& rng, int n) {
  if (n == 0) return CMatrix();
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const cplx v(gauss(rng), i == j ? 0.0 : gauss(rng));
      h.at(i, j) = v;
      h.at(j, i) = std::conj(v);
    }
  return hermitian_eig(h).vectors;
}

// ---- generic checks -------------------------------------------------------

inline CheckReport gram_check(const std::string& name, const Evaluator& phi,
                              const std::vector<Element>& elements, const Group& g, double tol) {
  CheckReport rep;
  rep.name = name;
  rep.property = "[phi(e_i^-1 e_j)] is Hermitian PSD, diagonal 1";
  rep.tolerance = tol;
  rep.samples = static_cast<int>(elements.size());
  if (elements.size() > 12) throw validation_error("gram_check: at most 12 elements");
  const int n = static_cast<int>(elements.size());
  CMatrix gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      gram.at(i, j) = phi(multiply(inverse(elements[i], g), elements[j], g));
  double herm = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      herm = std::max(herm, std::abs(gram.at(i, j) - std::conj(gram.at(j, i))));
  // symmetrize before the eigensolver; the asymmetry itself is part of the residual
  CMatrix sym = 0.5 * (gram + adjoint(gram));
  const auto eig = hermitian_eig(sym);
  const double min_eig = eig.values.empty() ? 0.0 : eig.values.back();
  rep.worst_residual = std::max(herm, std::max(0.0, -min_eig));
  rep.passed = rep.worst_residual <= tol;
  if (!rep.passed)
    for (const auto& e : elements) rep.details.push_back(format_element(e, g));
  return rep;
}

inline CheckReport centrality_check(const std::string& name, const Evaluator& phi, const Group& g,
                                    int trials, uint64_t seed, int max_support, double tol = 1e-9) {
  CheckReport rep;
  rep.name = name;
  rep.property = "phi(h g h^-1) = phi(g) for finite permutations h";
  rep.tolerance = tol;
  rep.samples = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Element e = random_element(rng, g, 1, max_support);
    const Perm h = random_perm(rng, 1, max_support);
    const double r = std::abs(phi(conjugate(e, h, g)) - phi(e));
    if (r > rep.worst_residual) rep.worst_residual = r;
    if (r > tol) rep.details.push_back(format_element(e, g) + " conj " + h.str());
  }
  rep.passed = rep.worst_residual <= tol;
  return rep;
}

inline CheckReport multiplicativity_check(const std::string& name, const Evaluator& phi,
                                          const Group& g, int trials, uint64_t seed,
                                          int half_support, double tol = 1e-9) {
  CheckReport rep;
  rep.name = name;
  rep.property = "phi(g g') = phi(g) phi(g') for disjoint supports";
  rep.tolerance = tol;
  rep.samples = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    // disjoint by construction: supports offset into [1,h] and [h+1,2h]
    const Element a = random_element(rng, g, 1, half_support);
    const Element b = random_element(rng, g, half_support + 1, 2 * half_support);
    const double r = std::abs(phi(multiply(a, b, g)) - phi(a) * phi(b));
    if (r > rep.worst_residual) rep.worst_residual = r;
    if (r > tol) rep.details.push_back(format_element(a, g) + " * " + format_element(b, g));
  }
  rep.passed = rep.worst_residual <= tol;
  return rep;
}

// Values on a generalized cycle agree with the values on its normal form,
// the cycle conjugated onto {1..n} with sigma_n as permutation part.
inline CheckReport sigma_reduction_check(const std::string& name, const Evaluator& phi,
                                         const Group& g, int trials, uint64_t seed, int max_support,
                                         double tol = 1e-9) {
  CheckReport rep;
  rep.name = name;
  rep.property = "phi on a generalized cycle = phi on its sigma_n normal form";
  rep.tolerance = tol;
  rep.samples = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Element e = random_element(rng, g, 1, max_support);
    for (const auto& c : generalized_cycles(e)) {
      // map the orbit walk onto 1,2,...,n
      std::map<int, int> relabel;
      int pos = c.orbit[0];
      for (int i = 0; i < c.length(); ++i) {
        relabel[pos] = i + 1;
        pos = c.cycle.apply(pos);
      }
      Perm h;
      {
        // extend to a finite permutation: send the orbit to 1..n and 1..n back
        std::map<int, int> hm;
        std::vector<int> orbit_sorted = c.orbit;
        std::sort(orbit_sorted.begin(), orbit_sorted.end());
        std::vector<int> targets;
        for (const auto& [from, to] : relabel) targets.push_back(to);
        std::sort(targets.begin(), targets.end());
        std::set<int> orbit_set(orbit_sorted.begin(), orbit_sorted.end());
        std::vector<int> displaced;  // targets not in the orbit need somewhere to go
        for (int tgt : targets)
          if (!orbit_set.count(tgt)) displaced.push_back(tgt);
        std::vector<int> holes;  // orbit points not hit by 1..n
        std::set<int> target_set(targets.begin(), targets.end());
        for (int o : orbit_sorted)
          if (!target_set.count(o)) holes.push_back(o);
        for (const auto& [from, to] : relabel) hm[from] = to;
        for (size_t i = 0; i < displaced.size(); ++i) hm[displaced[i]] = holes[i];
        h = Perm::from_map(hm);
      }
      const Element part = cycle_to_element(c);
      const Element normal = conjugate(part, h, g);
      const double r = std::abs(phi(part) - phi(normal));
      if (r > rep.worst_residual) rep.worst_residual = r;
      if (r > tol) rep.details.push_back(format_element(part, g));
    }
  }
  rep.passed = rep.worst_residual <= tol;
  return rep;
}

// ---- state-specific checks ------------------------------------------------

// Largest support <= want whose slot space fits the oracle cap; the samplers
// stay inside it so every sampled element can be oracle-verified.
inline int oracle_support_bound(const StateParams& p, int want, double cap) {
  for (int n = want; n >= 1; --n) {
    const double dim = p.pm_dim() + double(p.reg_dim()) * n;
    double pw = 1;
    bool fits = dim >= 1;
    for (int j = 0; j < n && fits; ++j) {
      pw *= dim;
      fits = pw <= cap;
    }
    if (fits) return n;
  }
  throw validation_error("oracle cap too small for even one slot");
}

inline CheckReport oracle_agreement_check(const std::string& name, const StateParams& p, int trials,
                                          uint64_t seed, int max_support, double cap = 20000,
                                          double tol = 1e-9) {
  CheckReport rep;
  rep.name = name;
  rep.property = "closed-form eval = tensor-model trace";
  rep.tolerance = tol;
  rep.samples = trials;
  rep.seed = seed;
  const int support = oracle_support_bound(p, max_support, cap);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const Element e = random_element(rng, p.group, 1, support);
    const double r = std::abs(eval(p, e) - oracle_eval(p, e, support, cap));
    if (r > rep.worst_residual) rep.worst_residual = r;
    if (r > tol) rep.details.push_back(format_element(e, p.group));
  }
  rep.passed = rep.worst_residual <= tol;
  return rep;
}

inline CheckReport uniqueness_check(const std::string& name, const StateParams& p, int trials,
                                    uint64_t seed, int max_support, double tol = 1e-10) {
  CheckReport rep;
  rep.name = name;
  rep.property = "eval is invariant under block-unitary conjugation of (A, rho, xi)";
  rep.tolerance = tol;
  rep.samples = trials;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  const CMatrix v_pm = random_unitary(rng, p.pm_dim());
  const CMatrix v_k = random_unitary(rng, p.reg_dim());
  const StateParams q = conjugate_params(p, v_pm, v_k);
  for (int t = 0; t < trials; ++t) {
    const Element e = random_element(rng, p.group, 1, max_support);
    const double r = std::abs(eval(p, e) - eval(q, e));
    if (r > rep.worst_residual) rep.worst_residual = r;
    if (r > tol) rep.details.push_back(format_element(e, p.group));
  }
  rep.passed = rep.worst_residual <= tol;
  return rep;
}

// For a trivial color group the cycle values must be the two-sided power
// sums of the eigenvalues of A.
inline CheckReport thoma_reduction_check(const std::string& name, const StateParams& p,
                                         double tol = 1e-12) {
  CheckReport rep;
  rep.name = name;
  rep.property = "l-cycle value = sum(alpha^l) + (-1)^(l-1) sum(beta^l)";
  rep.tolerance = tol;
  if (p.group.order != 1) throw validation_error("thoma_reduction_check: color group must be trivial");
  for (int l = 1; l <= 6; ++l) {
    double expect = 0;
    if (l == 1) {
      expect = 1.0;  // sigma_1 is the identity
    } else if (p.pm) {
      for (double lam : p.eig.values)
        expect += (lam > 0) ? std::pow(lam, l)
                            : ((l % 2 == 0) ? -1.0 : 1.0) * std::pow(-lam, l);
    }
    Element e;
    e.s = Perm::sigma(l);
    const double r = std::abs(eval(p, e) - expect);
    if (r > rep.worst_residual) rep.worst_residual = r;
    ++rep.samples;
  }
  rep.passed = rep.worst_residual <= tol;
  return rep;
}

inline CheckReport kms_report(const std::string& name, const StateParams& p) {
  CheckReport rep;
  rep.name = name;
  rep.property = "kernel of A confined to the regular block; xi cyclic and separating";
  const KmsResult r = check_kms(p);
  rep.passed = true;  // informational: records the decision and its diagnosis
  rep.details.push_back(std::string("KMS: ") + (r.kms ? "true" : "false") + " (" + r.diagnosis + ")");
  return rep;
}

// ---- aggregation ------------------------------------------------------------

struct SuiteBudget {
  int trials_centrality = 200;
  int trials_multiplicativity = 100;
  int trials_oracle = 60;
  int trials_uniqueness = 50;
  int max_support = 5;
  double oracle_cap = 200000;
  int gram_size = 8;
};

inline std::vector<Element> sample_gram_elements(const Group& g, int count, int max_support,
                                                 uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Element> out;
  out.push_back(Element{});  // identity normalizes the Gram diagonal
  while (static_cast<int>(out.size()) < count) {
    const Element e = random_element(rng, g, 1, max_support);
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

inline std::vector<CheckReport> full_suite(const CharacterParams& p, uint64_t seed,
                                           const SuiteBudget& budget = {}) {
  const Group& g = p.group;
  Evaluator phi = [&p](const Element& e) { return eval(p, e); };
  std::vector<CheckReport> out;
  out.push_back(gram_check("gram_psd", phi, sample_gram_elements(g, budget.gram_size, 4, seed), g,
                           1e-8));
  out.push_back(centrality_check("centrality", phi, g, budget.trials_centrality, seed + 1,
                                 budget.max_support));
  out.push_back(multiplicativity_check("disjoint_multiplicativity", phi, g,
                                       budget.trials_multiplicativity, seed + 2,
                                       budget.max_support));
  out.push_back(sigma_reduction_check("sigma_normal_form", phi, g, 40, seed + 3,
                                      budget.max_support));
  return out;
}

inline std::vector<CheckReport> full_suite(const StateParams& p, uint64_t seed,
                                           const SuiteBudget& budget = {}) {
  const Group& g = p.group;
  Evaluator phi = [&p](const Element& e) { return eval(p, e); };
  std::vector<CheckReport> out;
  out.push_back(gram_check("gram_psd", phi, sample_gram_elements(g, budget.gram_size, 4, seed), g,
                           1e-8));
  out.push_back(centrality_check("centrality", phi, g, budget.trials_centrality, seed + 1,
                                 budget.max_support));
  out.push_back(multiplicativity_check("disjoint_multiplicativity", phi, g,
                                       budget.trials_multiplicativity, seed + 2,
                                       budget.max_support));
  out.push_back(sigma_reduction_check("sigma_normal_form", phi, g, 40, seed + 3,
                                      budget.max_support));
  out.push_back(oracle_agreement_check("oracle_agreement", p, budget.trials_oracle, seed + 4,
                                       budget.max_support, budget.oracle_cap));
  out.push_back(uniqueness_check("conjugation_uniqueness", p, budget.trials_uniqueness, seed + 5,
                                 budget.max_support));
  if (g.order == 1) out.push_back(thoma_reduction_check("thoma_cycle_values", p));
  if (p.pm) {
    // quantization of every distinct nonzero eigenvalue
    std::vector<double> done;
    for (double lam : p.eig.values) {
      if (std::abs(lam) < kEigZeroTol) continue;
      bool seen = false;
      for (double d : done) seen = seen || std::abs(d - lam) < 1e-9;
      if (seen) continue;
      done.push_back(lam);
      CheckReport rep;
      rep.name = "eigenvalue_quantization";
      rep.property = "psi(P_alpha)/|alpha| integral; falling-factorial pairing values";
      // nu can grow with multiplicity; keep the Alt order within budget
      const QuantizationReport q = quantization_check(p, lam, 3, budget.oracle_cap);
      rep.worst_residual = std::max({q.nu_residual, q.star_residual, q.falling_residual});
      rep.tolerance = 1e-8;
      rep.passed = q.passed;
      rep.samples = 1;
      rep.details.push_back("alpha=" + std::to_string(lam) + " nu=" + std::to_string(q.nu));
      out.push_back(std::move(rep));
    }
    {
      CheckReport rep;
      rep.name = "asymptotic_transposition";
      rep.property = "<U((l,k)) v, w> constant beyond supports and equal to the slot-l A insertion";
      const int bound = oracle_support_bound(p, 5, budget.oracle_cap);
      Element v, w;
      std::vector<int> partners;
      if (bound >= 5) {
        v.s = Perm::transposition(1, 2);
        partners = {3, 4, 5};
      } else {
        // tighter slot budget: pair the plain vectors instead
        for (int k = 2; k <= std::max(3, bound); ++k) partners.push_back(k);
      }
      const TranspositionReport t =
          transposition_stability_check(p, 1, v, w, partners, budget.oracle_cap);
      rep.worst_residual = std::max(t.drift, t.insert_residual);
      rep.tolerance = 1e-10;
      rep.passed = t.passed;
      rep.samples = static_cast<int>(partners.size());
      out.push_back(std::move(rep));
    }
  }
  out.push_back(kms_report("kms_decision", p));
  return out;
}

}  // namespace wreath
