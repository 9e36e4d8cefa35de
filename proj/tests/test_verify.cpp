#include <doctest.h>

#include "fixtures.hpp"
#include "wreath/verify.hpp"

using namespace wreath;
using namespace fixtures;

TEST_CASE("gram on hand-checked evaluators") {
  const Group t = Group::trivial();
  // alpha = (1): the constant-1 character, all-ones Gram matrix
  CharacterParams ones;
  ones.group = t;
  ones.alphas.push_back({1.0, trivial_rep(t)});
  validate_character(ones);
  Evaluator phi1 = [&](const Element& e) { return eval(ones, e); };
  std::vector<Element> els;
  els.push_back(Element{});
  els.push_back(parse_element("(1 2)", t));
  els.push_back(parse_element("(1 2 3)", t));
  CHECK(gram_check("gram_psd", phi1, els, t, 1e-8).passed);

  // regular-state parameters over {e, (1 2)}: the identity Gram matrix
  const Group c2 = Group::cyclic(2);
  const StateParams reg = phi_reg_params(regular_rep(c2), {1.0, 0.0});
  Evaluator phir = [&](const Element& e) { return eval(reg, e); };
  std::vector<Element> pair = {Element{}, parse_element("(1 2)", c2)};
  const CheckReport r = gram_check("gram_psd", phir, pair, c2, 1e-8);
  CHECK(r.passed);
  CHECK(r.worst_residual <= 1e-14);

  CHECK_THROWS_AS(gram_check("gram_psd", phi1, std::vector<Element>(13), t, 1e-8),
                  validation_error);
}

TEST_CASE("centrality and multiplicativity on both evaluator kinds") {
  const CharacterParams cp = c3_s3();
  Evaluator phic = [&](const Element& e) { return eval(cp, e); };
  CHECK(centrality_check("centrality", phic, cp.group, 200, 1, 5).passed);
  CHECK(multiplicativity_check("mult", phic, cp.group, 100, 2, 4).passed);

  const StateParams sp = s4_c3();
  Evaluator phis = [&](const Element& e) { return eval(sp, e); };
  CHECK(centrality_check("centrality", phis, sp.group, 200, 3, 5).passed);
  CHECK(multiplicativity_check("mult", phis, sp.group, 100, 4, 4).passed);
}

TEST_CASE("sigma normal form") {
  for (const CharacterParams& cp : all_character_sets()) {
    Evaluator phi = [&](const Element& e) { return eval(cp, e); };
    CHECK(sigma_reduction_check("sigma", phi, cp.group, 30, 7, 6).passed);
  }
  const StateParams sp = s5_s3_chars();
  Evaluator phi = [&](const Element& e) { return eval(sp, e); };
  CHECK(sigma_reduction_check("sigma", phi, sp.group, 30, 7, 6).passed);
}

TEST_CASE("uniqueness under conjugation") {
  CHECK(uniqueness_check("uniq", s4_c3(), 50, 11, 5).passed);
  CHECK(uniqueness_check("uniq", s6_s3_standard(), 50, 12, 5).passed);
  // identity conjugation: exact agreement
  const StateParams p = s3_c2_sign();
  const StateParams q = conjugate_params(p, CMatrix::identity(1), CMatrix::identity(1));
  const Element e = parse_element("(1 2)[a@1]", p.group);
  CHECK(eval(p, e) == eval(q, e));
}

TEST_CASE("thoma reduction check") {
  CHECK(thoma_reduction_check("thoma", s1_thoma_full()).passed);
  CHECK(thoma_reduction_check("thoma", s2_thoma_reg()).passed);
  CHECK_THROWS_AS(thoma_reduction_check("thoma", s3_c2_sign()), validation_error);
}

TEST_CASE("reports are deterministic in the seed") {
  const StateParams p = s2_thoma_reg();
  Evaluator phi = [&](const Element& e) { return eval(p, e); };
  const CheckReport a = centrality_check("c", phi, p.group, 50, 42, 5);
  const CheckReport b = centrality_check("c", phi, p.group, 50, 42, 5);
  CHECK(a.worst_residual == b.worst_residual);
  const CheckReport c = centrality_check("c", phi, p.group, 50, 43, 5);
  CHECK(a.samples == c.samples);
}

TEST_CASE("full suite passes on fixture parameters") {
  SuiteBudget small;
  small.trials_centrality = 60;
  small.trials_multiplicativity = 40;
  small.trials_oracle = 20;
  small.trials_uniqueness = 20;
  small.max_support = 4;

  for (const auto& rep : full_suite(c2_c2_sign(), 5, small)) {
    INFO(rep.name);
    CHECK(rep.passed);
  }
  for (const auto& rep : full_suite(s2_thoma_reg(), 5, small)) {
    INFO(rep.name);
    CHECK(rep.passed);
  }
  for (const auto& rep : full_suite(s3_c2_sign(), 5, small)) {
    INFO(rep.name);
    CHECK(rep.passed);
  }

  // regular-state parameters: everything applicable passes and KMS holds
  const StateParams reg = phi_reg_params(regular_rep(Group::cyclic(2)), {1.0, 0.0});
  for (const auto& rep : full_suite(reg, 5, small)) {
    INFO(rep.name);
    CHECK(rep.passed);
    if (rep.name == "kms_decision") {
      REQUIRE(!rep.details.empty());
      CHECK(rep.details.front().find("KMS: true") != std::string::npos);
    }
  }

  // a 4-dim regular block: the oracle check bounds its own support to the cap
  const StateParams tau4 = character_params_to_state(c2_c2_sign());
  CHECK(oracle_support_bound(tau4, 5, 2e5) == 4);
  for (const auto& rep : full_suite(tau4, 5, small)) {
    INFO(rep.name);
    CHECK(rep.passed);
  }
}

TEST_CASE("a failing evaluator is caught and serialized for replay") {
  const Group t = Group::trivial();
  // deliberately non-central: depends on the support minimum
  Evaluator broken = [&](const Element& e) {
    const auto s = support(e);
    return cplx(s.empty() ? 1.0 : 1.0 / double(*s.begin()));
  };
  const CheckReport r = centrality_check("broken", broken, t, 100, 9, 5);
  CHECK_FALSE(r.passed);
  CHECK(r.worst_residual > 1e-3);
  CHECK_FALSE(r.details.empty());
  // replay: the detail line starts with a parseable element
  const std::string& line = r.details.front();
  const std::string text = line.substr(0, line.find(" conj "));
  CHECK_NOTHROW(parse_element(text, t));
}
