#pragma once

// Evaluator for the indecomposable central characters of the infinite wreath
// product: weighted families of representations (alpha_k, rho_k) and
// (beta_k, varrho_k), a residual weight delta carried by a representation
// tau, values assembled multiplicatively over generalized cycles.  With a
// trivial color group this reduces to the Thoma character formula.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "wreath/element.hpp"
#include "wreath/group.hpp"

namespace wreath {

struct WeightedRep {
  double weight = 0;
  Rep rep;
};

struct CharacterParams {
  Group group;
  std::vector<WeightedRep> alphas;
  std::vector<WeightedRep> betas;
  std::optional<Rep> tau;
  double delta = 0;  // derived by validate_character
};

inline void validate_character(CharacterParams& p) {
  auto check_list = [&](const std::vector<WeightedRep>& list, const char* which) {
    double prev = 2.0;
    for (const auto& wr : list) {
      if (wr.weight <= 0 || wr.weight > 1.0 + 1e-12)
        throw validation_error(std::string("character: ") + which + " weights must lie in (0,1]");
      if (wr.weight > prev + 1e-12)
        throw validation_error(std::string("character: ") + which + " weights must be non-increasing");
      prev = wr.weight;
      if (!wr.rep.group.same_table(p.group))
        throw validation_error("character: representation over a different group");
      validate_rep(wr.rep);
      if (wr.rep.dim == 0) throw validation_error("character: zero-dimensional representation");
    }
  };
  check_list(p.alphas, "alpha");
  check_list(p.betas, "beta");

  double mass = 0;
  for (const auto& wr : p.alphas) mass += wr.weight * wr.rep.dim;
  for (const auto& wr : p.betas) mass += wr.weight * wr.rep.dim;
  p.delta = 1.0 - mass;
  if (p.delta < -1e-12)
    throw validation_error("character: total mass sum(alpha_k dim) + sum(beta_k dim) = " +
                           std::to_string(mass) + " exceeds 1 (delta = " + std::to_string(p.delta) +
                           " < 0)");
  if (p.delta > 1e-12) {
    if (!p.tau) throw validation_error("character: delta = " + std::to_string(p.delta) +
                                       " > 0 requires a representation tau for the residual weight");
    if (!p.tau->group.same_table(p.group))
      throw validation_error("character: tau over a different group");
    validate_rep(*p.tau);
  }
}

// Value on one generalized cycle.  Singleton {n}:
//   sum_k alpha_k tr(rho_k(gamma_n)) + sum_k beta_k tr(varrho_k(gamma_n))
//     + delta * tr(tau(gamma_n));
// cycle of length l > 1, with gt the ordered color product of the cycle:
//   sum_k alpha_k^l tr(rho_k(gt)) + (-1)^(l-1) sum_k beta_k^l tr(varrho_k(gt)).
// tr is the normalized matrix trace throughout.
inline cplx eval_cycle(const CharacterParams& p, const GenCycle& c) {
  const int l = c.length();
  const int gt = cycle_invariant(c, p.group);
  cplx v = 0;
  if (l == 1) {
    for (const auto& wr : p.alphas) v += wr.weight * normalized_char(wr.rep, gt);
    for (const auto& wr : p.betas) v += wr.weight * normalized_char(wr.rep, gt);
    if (p.delta > 1e-12) v += p.delta * normalized_char(*p.tau, gt);
    return v;
  }
  const double sg = (l % 2 == 0) ? -1.0 : 1.0;  // (-1)^(l-1)
  for (const auto& wr : p.alphas) v += std::pow(wr.weight, l) * normalized_char(wr.rep, gt);
  for (const auto& wr : p.betas) v += sg * std::pow(wr.weight, l) * normalized_char(wr.rep, gt);
  return v;
}

inline cplx eval(const CharacterParams& p, const Element& g) {
  cplx v = 1.0;
  for (const auto& c : generalized_cycles(g)) v *= eval_cycle(p, c);
  return v;
}

}  // namespace wreath
