#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "wreath/state.hpp"

using namespace wreath;
using namespace fixtures;

TEST_CASE("validate: accepted and rejected parameter sets") {
  CHECK_NOTHROW(s3_c2_sign());

  // Tr|A| > 1
  {
    const Group g = Group::trivial();
    StateParams p;
    p.group = g;
    p.pm = PmBlock{CMatrix::diag({0.7, 0.7}), diag_rep(g, {trivial_rep(g), trivial_rep(g)})};
    try {
      validate_state(p);
      CHECK(false);
    } catch (const validation_error& e) {
      const std::string msg = e.what();
      CHECK(msg.find("Tr|A|") != std::string::npos);
      CHECK(msg.find("exceeds 1") != std::string::npos);
    }
  }

  // deficit mass with no regular block
  {
    const Group g = Group::trivial();
    StateParams p;
    p.group = g;
    p.pm = PmBlock{CMatrix::diag({0.5}), trivial_rep(g)};
    CHECK_THROWS_WITH_AS(validate_state(p), doctest::Contains("requires a regular block"),
                         validation_error);
  }

  // full mass plus a regular block is ambiguous and rejected
  {
    const Group g = Group::trivial();
    StateParams p;
    p.group = g;
    p.pm = PmBlock{CMatrix::diag({1.0}), trivial_rep(g)};
    p.reg = RegBlock{trivial_rep(g), {1.0}, 1};
    CHECK_THROWS_AS(validate_state(p), validation_error);
  }

  // kernel in the pm block without the product-state flag
  {
    const Group g = Group::trivial();
    StateParams p;
    p.group = g;
    p.pm = PmBlock{CMatrix::diag({1.0, 0.0}), diag_rep(g, {trivial_rep(g), trivial_rep(g)})};
    CHECK_THROWS_AS(validate_state(p), validation_error);
  }

  // eigenvalue beyond 1
  {
    const Group g = Group::trivial();
    StateParams p;
    p.group = g;
    p.pm = PmBlock{CMatrix::diag({1.2}), trivial_rep(g)};
    CHECK_THROWS_AS(validate_state(p), validation_error);
  }

  // rho must preserve the spectral blocks of A
  {
    const Group g = Group::cyclic(2);
    CMatrix a(2, 2);
    a.at(0, 0) = 0.5;
    a.at(1, 1) = -0.5;
    CMatrix swap(2, 2);
    swap.at(0, 1) = 1.0;
    swap.at(1, 0) = 1.0;
    StateParams p;
    p.group = g;
    p.pm = PmBlock{a, make_rep(g, {CMatrix::identity(2), swap})};
    CHECK_THROWS_AS(validate_state(p), validation_error);
  }

  // xi must be a unit vector
  {
    const Group g = Group::trivial();
    StateParams p;
    p.group = g;
    p.reg = RegBlock{trivial_rep(g), {0.5}, 1};
    CHECK_THROWS_AS(validate_state(p), validation_error);
  }

  // copies must be at least 1
  {
    const Group g = Group::trivial();
    StateParams p;
    p.group = g;
    p.reg = RegBlock{trivial_rep(g), {1.0}, 0};
    CHECK_THROWS_AS(validate_state(p), validation_error);
  }
}

TEST_CASE("singleton values") {
  const StateParams p = s3_c2_sign();
  CHECK(std::abs(eval_singleton(p, 1) - cplx(-0.2)) <= 1e-14);  // -(0.6) + 0.4
  CHECK(std::abs(eval_singleton(p, 0) - cplx(1.0)) <= 1e-14);
  CHECK(std::abs(eval(p, Element{}) - cplx(1.0)) <= 1e-14);

  // full mass: only the trace term remains
  const Group c2 = Group::cyclic(2);
  const StateParams q = with_pm(c2, CMatrix::diag({1.0}), cyclic_irrep(2, 1));
  CHECK(std::abs(eval_singleton(q, 1) - cplx(-1.0)) <= 1e-14);
}

TEST_CASE("cycle values against hand-derived constants") {
  const Group t = Group::trivial();
  const StateParams neg = with_pm_reg(t, CMatrix::diag({-0.5}), trivial_rep(t), trivial_rep(t), {1.0});
  Element two;
  two.s = Perm::transposition(1, 2);
  CHECK(std::abs(eval(neg, two) - cplx(-0.25)) <= 1e-14);

  const StateParams p = s3_c2_sign();
  const Element colored = parse_element("(1 2)[a@1]", p.group);
  CHECK(std::abs(eval(p, colored) - cplx(-0.36)) <= 1e-14);

  const StateParams two_eigs =
      with_pm_reg(t, CMatrix::diag({0.5, 0.25}), diag_rep(t, {trivial_rep(t), trivial_rep(t)}),
                  trivial_rep(t), {1.0});
  Element four;
  four.s = Perm::sigma(4);
  CHECK(std::abs(eval(two_eigs, four) - cplx(0.06640625)) <= 1e-14);

  const StateParams half = with_pm_reg(t, CMatrix::diag({0.5}), trivial_rep(t), trivial_rep(t), {1.0});
  Element pairperm;
  pairperm.s = Perm::from_cycles({{1, 2}, {3, 4}});
  CHECK(std::abs(eval(half, pairperm) - cplx(0.0625)) <= 1e-14);
}

TEST_CASE("regular-state parameters vanish off the color subgroup") {
  const Group c2 = Group::cyclic(2);
  const StateParams reg = phi_reg_params(regular_rep(c2), {1.0, 0.0});
  Element two;
  two.s = Perm::transposition(1, 2);
  CHECK(std::abs(eval(reg, two)) <= 1e-15);
  const Element moved = parse_element("(2 5)[a@1]", c2);
  CHECK(std::abs(eval(reg, moved)) <= 1e-15);
  // on pure colors: product of <L_gamma d_e, d_e>, which vanishes off e
  const Element colors = parse_element("()[a@2,a@6]", c2);
  CHECK(std::abs(eval(reg, colors)) <= 1e-15);
  CHECK(std::abs(eval(reg, Element{}) - cplx(1.0)) <= 1e-15);
}

TEST_CASE("product-state parameters reproduce the pointwise product") {
  const Group c2 = Group::cyclic(2);
  // trivial character: everything evaluates to 1
  const StateParams triv = phi_sp_params(trivial_rep(c2), {1.0});
  for (const char* txt : {"()", "(1 2)", "(1 4 3)[a@1,a@4]", "()[a@7]"}) {
    const Element e = parse_element(txt, c2);
    CHECK(std::abs(eval(triv, e) - cplx(1.0)) <= 1e-12);
  }
  // sign character: product of the color characters, permutation part invisible
  const StateParams sgn = phi_sp_params(cyclic_irrep(2, 1), {1.0});
  CHECK(std::abs(eval(sgn, parse_element("()[a@9]", c2)) - cplx(-1.0)) <= 1e-12);
  CHECK(std::abs(eval(sgn, parse_element("(1 2)[a@1,a@2]", c2)) - cplx(1.0)) <= 1e-12);
  CHECK(std::abs(eval(sgn, parse_element("(1 2 3)[a@2]", c2)) - cplx(-1.0)) <= 1e-12);

  // a 2-dim representation with a cyclic vector: still the pointwise product
  const Rep r = regular_rep(c2);
  const std::vector<cplx> xi = {std::sqrt(0.5), std::sqrt(0.5)};
  const StateParams sp = phi_sp_params(r, xi);
  auto phi = [&](int g) {
    cplx v = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) v += std::conj(xi[i]) * r.mats[g].at(i, j) * xi[j];
    return v;
  };
  const Element e = parse_element("(1 3)[a@1,a@5]", c2);
  CHECK(std::abs(eval(sp, e) - phi(1) * phi(1)) <= 1e-12);
}

TEST_CASE("kms decision") {
  // regular vector of the regular representation: cyclic and separating
  const Group c2 = Group::cyclic(2);
  const StateParams reg = phi_reg_params(regular_rep(c2), {1.0, 0.0});
  CHECK(check_kms(reg).kms);

  // trivial (+) sign with xi on the first summand: the complement is killed
  const Rep ts = direct_sum(trivial_rep(c2), cyclic_irrep(2, 1));
  const StateParams bad = phi_reg_params(ts, {1.0, 0.0});
  CHECK_FALSE(check_kms(bad).kms);

  // full mass, invertible A, no regular block
  const Group t = Group::trivial();
  const StateParams full =
      with_pm(t, CMatrix::diag({0.5, 0.5}), diag_rep(t, {trivial_rep(t), trivial_rep(t)}));
  CHECK(check_kms(full).kms);

  // product state with a kernel in the pm block is not KMS
  const StateParams sp = phi_sp_params(regular_rep(c2), {1.0, 0.0});
  REQUIRE(sp.pm_dim() == 2);
  CHECK_FALSE(check_kms(sp).kms);
}

TEST_CASE("conjugation of parameters") {
  const StateParams p = s4_c3();
  const StateParams same = conjugate_params(p, CMatrix::identity(2), CMatrix::identity(1));
  CHECK(max_abs_diff(same.pm->A, p.pm->A) <= 1e-14);

  // a unitary mixing the two equal-weight directions leaves eval unchanged
  const StateParams q = s6_s3_standard();
  CMatrix v(2, 2);
  const double c = std::sqrt(0.5);
  v.at(0, 0) = c;
  v.at(0, 1) = c;
  v.at(1, 0) = -c;
  v.at(1, 1) = c;
  const StateParams qc = conjugate_params(q, v, CMatrix::identity(1));
  std::mt19937_64 rng(4);
  for (int tcase = 0; tcase < 25; ++tcase) {
    Element e;
    e.s = Perm::transposition(1 + int(rng() % 3), 4);
    const int col = int(rng() % 6);
    if (col != 0) e.colors[1 + int(rng() % 4)] = col;
    CHECK(std::abs(eval(q, e) - eval(qc, e)) <= 1e-10);
  }

  CMatrix notu(2, 2);
  notu.at(0, 0) = 2.0;
  CHECK_THROWS_AS(conjugate_params(q, notu, CMatrix::identity(1)), validation_error);
}

TEST_CASE("character parameters realized as state parameters, 1-dim case") {
  // Thoma data, permutations only
  const CharacterParams cp = c1_thoma();
  const StateParams spm = character_params_to_state(cp);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    std::vector<int> pts = {1, 2, 3, 4, 5};
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(rng() % 5);
    std::vector<int> img = pts;
    std::shuffle(img.begin(), img.end(), rng);
    std::map<int, int> m;
    for (size_t i = 0; i < pts.size(); ++i) m[pts[i]] = img[i];
    Element e;
    e.s = Perm::from_map(m);
    CHECK(std::abs(eval(cp, e) - eval(spm, e)) <= 1e-12);
  }

  // colored case over cyclic(2), sign irrep, regular tau
  const CharacterParams cc = c2_c2_sign();
  const StateParams sc = character_params_to_state(cc);
  for (const char* txt :
       {"()", "(1 2)", "(1 2)[a@1]", "(1 2 3)[a@2,a@3]", "()[a@4]", "(2 4)(1 5)[a@1]"}) {
    const Element e = parse_element(txt, cc.group);
    CHECK(std::abs(eval(cc, e) - eval(sc, e)) <= 1e-12);
  }
}
