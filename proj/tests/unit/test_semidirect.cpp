#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include <random>

#include "ringkt/semidirect.hpp"

using namespace ringkt;

namespace {

OrderPtr field(IntVector poly, RatVector zeta, int m) {
  FieldSpec s;
  s.name = "t";
  s.degree = static_cast<int>(poly.size()) - 1;
  s.poly = std::move(poly);
  s.integral_basis.assign(s.degree, RatVector(s.degree, 0));
  for (int i = 0; i < s.degree; ++i) s.integral_basis[i][i] = 1;
  s.zeta = std::move(zeta);
  s.m = m;
  return load_field(s);
}

OrderPtr gaussian() { return field({1, 0, 1}, {0, 1}, 4); }

}  // namespace

TEST_CASE("group law") {
  SemidirectGroup g(gaussian());
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> co(-5, 5), rot(0, 3);
  auto rnd = [&] { return SemidirectElement{{co(rng), co(rng)}, rot(rng)}; };
  for (int t = 0; t < 50; ++t) {
    auto x = rnd(), y = rnd(), z = rnd();
    CHECK(g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z)));
    CHECK(g.multiply(x, g.inverse(x)) == g.identity());
    CHECK(g.power(x, 3) == g.multiply(x, g.multiply(x, x)));
    CHECK(g.element_order(g.conjugate(x, y)) == g.element_order(x));
  }
}

TEST_CASE("element orders") {
  SemidirectGroup g(gaussian());
  CHECK(g.element_order({{1, 0}, 1}) == 4);
  CHECK_FALSE(g.element_order({{1, 0}, 0}).has_value());
  CHECK(g.element_order({{0, 0}, 1}) == 4);
  CHECK(g.element_order({{0, 0}, 2}) == 2);
  CHECK(g.element_order(g.identity()) == 1);
}

TEST_CASE("conjugacy labels") {
  SemidirectGroup g(gaussian());
  CHECK(g.conjugacy_label({1, 1}, 1) == g.mu_label());
  CHECK_FALSE(g.conjugacy_label({1, 0}, 1) == g.mu_label());
  // conjugation does not change the label
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<int> co(-4, 4), rot(0, 3);
  for (int t = 0; t < 40; ++t) {
    SemidirectElement x{{co(rng), co(rng)}, 1 + t % 3};
    SemidirectElement y{{co(rng), co(rng)}, rot(rng)};
    SemidirectElement z = g.conjugate(x, y);
    CHECK(g.conjugacy_label(x.b, x.i) == g.conjugacy_label(z.b, z.i));
  }
}

TEST_CASE("maximal classes") {
  SemidirectGroup q(field({-1, 1}, {-1}, 2));
  CHECK(q.maximal_classes().size() == 2);
  for (const auto& l : q.maximal_classes()) CHECK(q.is_maximal(l));

  SemidirectGroup g(gaussian());
  const auto& mx = g.maximal_classes();
  REQUIRE(mx.size() == 3);
  CHECK(mx[0] == g.mu_label());
  CHECK(g.is_maximal(g.mu_label()));
  // (1+i, -1) squares from (i, i): not maximal
  CHECK_FALSE(g.is_maximal(g.conjugacy_label({1, 1}, 2)));
  CHECK(g.is_maximal(g.conjugacy_label({1, 0}, 2)));
  CHECK(enumerate_maximal_classes(g) == mx);

  SemidirectGroup e(field({1, 1, 1}, {1, 1}, 6));
  CHECK(e.maximal_classes().front() == e.mu_label());
}

TEST_CASE("normalization keeps the subgroup") {
  SemidirectGroup g(gaussian());
  SemidirectElement x{{1, 0}, 3};
  auto n = g.normalize(x);
  CHECK(n.label.i == 1);
  CHECK(n.exponent == 3);
  CHECK(n.label == g.conjugacy_label({1, 0}, 1));
}

TEST_CASE("restriction of characters") {
  SemidirectGroup g(gaussian());
  // <zeta^2> inside mu = Z/4: the trivial character lifts to chi_0 and chi_2
  auto loc = g.locate_in_maximal(g.conjugacy_label({0, 0}, 2));
  CHECK(loc.maximal == 0);
  CHECK(loc.power == 2);
  CHECK(g.restricting_characters(loc, 0) == std::vector<long>{0, 2});
  CHECK(g.restricting_characters(loc, 1) == std::vector<long>{1, 3});
  K0Vector v = g.expand_character(loc, 0);
  K0Vector expected;
  expected.add(K0Label::unit(), 1);
  expected.add(K0Label::mu(1), -1);
  expected.add(K0Label::mu(3), -1);
  CHECK(v == expected);
  // M' = M: the single class
  auto self = g.locate_in_maximal(g.mu_label());
  K0Vector one;
  one.add(K0Label::mu(3), 1);
  CHECK(g.expand_character(self, 3) == one);
}

TEST_CASE("inverse mod") {
  CHECK(inverse_mod(3, 4) == 3);
  CHECK(inverse_mod(2, 5) == 3);
  CHECK(inverse_mod(1, 1) == 0);
}
