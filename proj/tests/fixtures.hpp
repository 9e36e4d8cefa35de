#pragma once

// Parameter sets shared by the unit, property and acceptance suites.

#include <vector>

#include "wreath/characters.hpp"
#include "wreath/state.hpp"

namespace fixtures {

using namespace wreath;

inline Rep diag_rep(const Group& g, const std::vector<Rep>& one_dims) {
  Rep acc = one_dims.at(0);
  for (size_t i = 1; i < one_dims.size(); ++i) acc = direct_sum(acc, one_dims[i]);
  (void)g;
  return acc;
}

inline StateParams with_pm(const Group& g, const CMatrix& a, const Rep& rho) {
  StateParams p;
  p.group = g;
  p.pm = PmBlock{a, rho};
  validate_state(p);
  return p;
}

inline StateParams with_pm_reg(const Group& g, const CMatrix& a, const Rep& rho, const Rep& rho11,
                               std::vector<cplx> xi) {
  StateParams p;
  p.group = g;
  p.pm = PmBlock{a, rho};
  p.reg = RegBlock{rho11, std::move(xi), 1};
  validate_state(p);
  return p;
}

// S1: trivial colors, full trace, mixed signs, no regular block
inline StateParams s1_thoma_full() {
  const Group g = Group::trivial();
  return with_pm(g, CMatrix::diag({0.5, 0.25, -0.25}),
                 diag_rep(g, {trivial_rep(g), trivial_rep(g), trivial_rep(g)}));
}

// S2: trivial colors, deficit mass, negative eigenvalue, regular block
inline StateParams s2_thoma_reg() {
  const Group g = Group::trivial();
  return with_pm_reg(g, CMatrix::diag({0.5, -0.125}), diag_rep(g, {trivial_rep(g), trivial_rep(g)}),
                     trivial_rep(g), {1.0});
}

// S3: order 2, sign representation on a single positive eigenvalue
inline StateParams s3_c2_sign() {
  const Group g = Group::cyclic(2);
  return with_pm_reg(g, CMatrix::diag({0.6}), cyclic_irrep(2, 1), trivial_rep(g), {1.0});
}

// S4: order 3, two characters, complex values
inline StateParams s4_c3() {
  const Group g = Group::cyclic(3);
  return with_pm_reg(g, CMatrix::diag({0.5, 0.3}), diag_rep(g, {cyclic_irrep(3, 1), cyclic_irrep(3, 2)}),
                     cyclic_irrep(3, 0), {1.0});
}

// S5: order 6, one-dimensional characters on a mixed-sign A
inline StateParams s5_s3_chars() {
  const Group g = Group::symmetric3();
  return with_pm_reg(g, CMatrix::diag({0.7, -0.2}), diag_rep(g, {trivial_rep(g), symmetric3_sign_rep()}),
                     trivial_rep(g), {1.0});
}

// S6: order 6, the 2-dim irrep on a degenerate eigenvalue
inline StateParams s6_s3_standard() {
  const Group g = Group::symmetric3();
  CMatrix a(2, 2);
  a.at(0, 0) = 0.3;
  a.at(1, 1) = 0.3;
  return with_pm_reg(g, a, symmetric3_standard_rep(), trivial_rep(g), {1.0});
}

// S7: order 6, full trace on the 2-dim irrep (small slot space, no reg)
inline StateParams s7_s3_full() {
  const Group g = Group::symmetric3();
  CMatrix a(2, 2);
  a.at(0, 0) = 0.5;
  a.at(1, 1) = 0.5;
  return with_pm(g, a, symmetric3_standard_rep());
}

// S8: S4 conjugated by a fixed unitary, so A is a dense Hermitian matrix and
// the evaluators must work through the eigenbasis rather than read diagonals
inline StateParams s8_c3_rotated() {
  CMatrix h(2, 2);
  h.at(0, 0) = 0.4;
  h.at(1, 1) = -0.7;
  h.at(0, 1) = cplx(0.3, 0.2);
  h.at(1, 0) = cplx(0.3, -0.2);
  const CMatrix v = hermitian_eig(h).vectors;
  return conjugate_params(s4_c3(), v, CMatrix::identity(1));
}

// S9: two-dimensional regular block with a complex unit vector
inline StateParams s9_c2_complex_xi() {
  const Group g = Group::cyclic(2);
  StateParams p;
  p.group = g;
  p.pm = PmBlock{CMatrix::diag({0.5}), cyclic_irrep(2, 1)};
  const double c = std::sqrt(0.5);
  p.reg = RegBlock{regular_rep(g), {cplx(c, 0.0), cplx(0.0, c)}, 1};
  validate_state(p);
  return p;
}

inline std::vector<StateParams> all_state_sets() {
  return {s1_thoma_full(), s2_thoma_reg(),    s3_c2_sign(),      s4_c3(),  s5_s3_chars(),
          s6_s3_standard(), s7_s3_full(),      s8_c3_rotated(),   s9_c2_complex_xi()};
}

// C1: Thoma parameters alpha=(0.5,0.25), beta=(0.125)
inline CharacterParams c1_thoma() {
  const Group g = Group::trivial();
  CharacterParams p;
  p.group = g;
  p.alphas.push_back({0.5, trivial_rep(g)});
  p.alphas.push_back({0.25, trivial_rep(g)});
  p.betas.push_back({0.125, trivial_rep(g)});
  p.tau = trivial_rep(g);
  validate_character(p);
  return p;
}

// C2: order 2, sign irrep with half mass, regular tau
inline CharacterParams c2_c2_sign() {
  const Group g = Group::cyclic(2);
  CharacterParams p;
  p.group = g;
  p.alphas.push_back({0.5, cyclic_irrep(2, 1)});
  p.tau = regular_rep(g);
  validate_character(p);
  return p;
}

// C3: order 6, a 2-dim alpha and a sign beta
inline CharacterParams c3_s3() {
  const Group g = Group::symmetric3();
  CharacterParams p;
  p.group = g;
  p.alphas.push_back({0.3, symmetric3_standard_rep()});
  p.betas.push_back({0.2, symmetric3_sign_rep()});
  p.tau = regular_rep(g);
  validate_character(p);
  return p;
}

inline std::vector<CharacterParams> all_character_sets() {
  return {c1_thoma(), c2_c2_sign(), c3_s3()};
}

}  // namespace fixtures
