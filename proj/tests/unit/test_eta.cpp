#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ringkt/eta.hpp"

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
OrderPtr rationals() { return field({-1, 1}, {-1}, 2); }
OrderPtr eisenstein() { return field({1, 1, 1}, {1, 1}, 6); }
OrderPtr zeta5() { return field({1, 1, 1, 1, 1}, {0, -1, 0, 0}, 10); }

}  // namespace

TEST_CASE("invariant ranks") {
  CHECK(inf_ranks(*gaussian()) == IntVector{1, 1});
  CHECK(inf_ranks(*rationals()) == IntVector{1});
  CHECK(inf_ranks(*eisenstein()) == IntVector{1, 1});
  CHECK(invariant_dimensions(*gaussian()) == IntVector{1, 0, 1});
  CHECK(molien_alternating(*gaussian()) == 2);
  CHECK(delta(*gaussian()) == 1);
  CHECK(delta(*rationals()) == 0);
  CHECK(delta(*zeta5()) == 1);
}

TEST_CASE("affine permutations") {
  OrderPtr g = gaussian();
  AffinePermutation id(g, 4, g->zero(), 0);
  CHECK(id.is_bijection());
  CHECK(id.census() == CycleCensus{{1, 16}});

  AffinePermutation p(g, 4, g->zero(), 1);
  CHECK(p.is_bijection());
  CHECK(p.census() == CycleCensus{{1, 2}, {2, 1}, {4, 3}});
  // the 4-cycle through 1 is (1, 3i, 3, i)
  QuotientRing q(g, 4);
  const std::vector<std::uint64_t> want{q.index({1, 0}), q.index({0, 3}), q.index({3, 0}), q.index({0, 1})};
  bool found = false;
  for (const auto& cyc : p.cycles()) {
    auto it = std::find(cyc.begin(), cyc.end(), want[0]);
    if (it == cyc.end()) continue;
    found = true;
    REQUIRE(cyc.size() == 4);
    std::vector<std::uint64_t> rotated(it, cyc.end());
    rotated.insert(rotated.end(), cyc.begin(), it);
    CHECK(rotated == want);
    CHECK(cyc.front() == *std::min_element(cyc.begin(), cyc.end()));
  }
  CHECK(found);
  // cycle lengths sum to c^n
  for (long i = 0; i < 4; ++i) {
    AffinePermutation a(g, 8, {1, 2}, i);
    std::uint64_t total = 0;
    for (const auto& [len, count] : a.census()) total += len * count;
    CHECK(total == 64);
  }
}

TEST_CASE("eta columns") {
  SemidirectGroup g(gaussian());
  EtaMatrix e = eta_matrix(g, 4);
  const std::size_t unit = e.index_of(K0Label::unit());
  CHECK(e.finite_block(unit, unit) == 16);
  for (std::size_t j = 0; j < e.basis.size(); ++j) {
    const K0Label& l = e.basis[j];
    if (l.kind == K0Label::Kind::Mu) CHECK(e.finite_block(j, j) == 1);
    if (l.kind == K0Label::Kind::Fin) {
      K0Vector expected;
      expected.add(K0Label::unit(), Rational(16 * l.group.i) / 4);
      CHECK(e.column(j) == expected);
    }
  }
  CHECK(e.inf_exponents == std::vector<int>{0});
}

TEST_CASE("sign character") {
  for (OrderPtr o : {rationals(), field({-2, 0, 1}, {-1, 0}, 2)}) {
    SemidirectGroup g(o);
    for (long c : {2L, 4L, 6L}) {
      EtaMatrix e = eta_matrix(g, c);
      const std::size_t j = e.index_of(K0Label::mu(1));
      CHECK(e.finite_block(j, j) == 1);
      AffinePermutation p(o, c, o->zero(), 1);
      // fixed points of x -> -x on (Z/c)^n
      CHECK(p.census().at(1) == static_cast<std::uint64_t>(std::pow(std::gcd(2L, c), o->n())));
    }
  }
}

TEST_CASE("cycle classes of Fin generators") {
  SemidirectGroup g(eisenstein());
  for (const auto& l : g.maximal_classes()) {
    if (l == g.mu_label()) continue;
    for (long chi = 1; chi < 6 / l.i; ++chi) {
      K0Vector v = cycle_classes(g, 12, l.b, l.i, chi);
      K0Vector expected;
      expected.add(K0Label::unit(), Rational(144 * l.i) / 6);
      CHECK(v == expected);
    }
  }
}

TEST_CASE("errors") {
  SemidirectGroup g(gaussian());
  CHECK_THROWS_AS(eta_matrix(g, 2), Error);
  try {
    eta_matrix(g, 6);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAdmissible);
  }
  try {
    cycle_classes(g, 4, {1, 0}, 0, 1);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InfiniteOrderGenerator);
  }
}

TEST_CASE("multiplicativity on a few moduli") {
  SemidirectGroup g(eisenstein());
  EtaMatrix a = eta_matrix(g, 6), b = eta_matrix(g, 12), ab = eta_matrix(g, 72);
  CHECK(a.finite_block * b.finite_block == ab.finite_block);
  CHECK(b.finite_block * a.finite_block == ab.finite_block);
}
