#include <doctest.h>

#include <random>

#include "wreath/perm.hpp"

using namespace wreath;

namespace {
Perm random_perm(std::mt19937_64& rng, int hi) {
  std::vector<int> pts;
  for (int i = 1; i <= hi; ++i)
    if (rng() % 2) pts.push_back(i);
  std::vector<int> img = pts;
  std::shuffle(img.begin(), img.end(), rng);
  std::map<int, int> m;
  for (size_t i = 0; i < pts.size(); ++i) m[pts[i]] = img[i];
  return Perm::from_map(m);
}
}  // namespace

TEST_CASE("from_cycles") {
  const Perm p = Perm::from_cycles({{1, 2}, {3, 4, 5}});
  CHECK(p.apply(1) == 2);
  CHECK(p.apply(2) == 1);
  CHECK(p.apply(3) == 4);
  CHECK(p.apply(4) == 5);
  CHECK(p.apply(5) == 3);
  CHECK(p.support() == std::set<int>{1, 2, 3, 4, 5});
  CHECK(Perm::from_cycles({}).is_identity());
  CHECK_THROWS_AS(Perm::from_cycles({{1, 2}, {2, 3}}), validation_error);
  CHECK_THROWS_AS(Perm::from_cycles({{0, 1}}), validation_error);
}

TEST_CASE("compose") {
  const Perm t12 = Perm::transposition(1, 2);
  CHECK((t12 * t12).is_identity());
  const Perm t23 = Perm::transposition(2, 3);
  CHECK(t12 * t23 == Perm::from_cycles({{1, 2, 3}}));
  const Perm s3 = Perm::sigma(3);
  CHECK((s3 * s3.inverse()).is_identity());
}

TEST_CASE("apply rejects non-positive points") {
  CHECK_THROWS_AS(Perm().apply(0), validation_error);
  CHECK_THROWS_AS(Perm().apply(-3), validation_error);
}

TEST_CASE("sign and inverse") {
  CHECK(Perm::from_cycles({{1, 2, 3}}).sign() == 1);
  CHECK(Perm::transposition(1, 2).sign() == -1);
  CHECK(Perm::from_cycles({{1, 2, 3}}).inverse() == Perm::from_cycles({{1, 3, 2}}));
}

TEST_CASE("omega and sigma") {
  const Perm w2 = Perm::omega(2);
  CHECK(w2.apply(1) == 3);
  CHECK(w2.apply(2) == 4);
  CHECK(w2.apply(3) == 1);
  CHECK(w2.apply(4) == 2);
  CHECK(w2.support() == std::set<int>{1, 2, 3, 4});
  CHECK(Perm::sigma(1).is_identity());
  const Perm s3 = Perm::sigma(3);
  CHECK(s3.apply(1) == 2);
  CHECK(s3.apply(2) == 3);
  CHECK(s3.apply(3) == 1);
  CHECK_THROWS_AS(Perm::omega(0), validation_error);
  CHECK_THROWS_AS(Perm::sigma(0), validation_error);
}

TEST_CASE("cycles are canonical") {
  const Perm p = Perm::from_cycles({{3, 4, 5}, {1, 2}});
  CHECK(p.cycles() == std::vector<std::vector<int>>{{1, 2}, {3, 4, 5}});
  CHECK(Perm().cycles().empty());
  CHECK(Perm::omega(2).cycles() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
  CHECK(p.str() == "(1 2)(3 4 5)");
  CHECK(Perm().str() == "()");
}

TEST_CASE("parse round-trips canonical forms") {
  for (const char* text : {"()", "(1 2)", "(1 2)(3 4 5)", "(2 7 4)"}) {
    const Perm p = Perm::parse(text);
    CHECK(p.str() == text);
  }
  CHECK_THROWS_AS(Perm::parse("(1 2"), parse_error);
  CHECK_THROWS_AS(Perm::parse("1 2"), parse_error);
}

TEST_CASE("properties on random permutations") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Perm a = random_perm(rng, 9), b = random_perm(rng, 9);
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.sign() * b.sign() == (a * b).sign());
    // orbit factorization: the single-orbit parts commute and multiply back
    Perm prod;
    std::vector<Perm> parts;
    for (const auto& orbit : a.cycles()) parts.push_back(Perm::from_cycles({orbit}));
    for (const auto& part : parts) prod = prod * part;
    CHECK(prod == a);
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = i + 1; j < parts.size(); ++j)
        CHECK(parts[i] * parts[j] == parts[j] * parts[i]);
  }
  for (int n = 1; n <= 6; ++n) CHECK((Perm::omega(n) * Perm::omega(n)).is_identity());
}
