#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include <algorithm>
#include <set>

#include "ringkt/number_field.hpp"
#include "ringkt/polynomial.hpp"

using namespace ringkt;

namespace {

FieldSpec make(std::string name, IntVector poly, std::vector<RatVector> basis, RatVector zeta, int m) {
  FieldSpec s;
  s.name = std::move(name);
  s.degree = static_cast<int>(poly.size()) - 1;
  s.poly = std::move(poly);
  s.integral_basis = std::move(basis);
  s.zeta = std::move(zeta);
  s.m = m;
  return s;
}

std::vector<RatVector> power_basis(int n) {
  std::vector<RatVector> b(n, RatVector(n, 0));
  for (int i = 0; i < n; ++i) b[i][i] = 1;
  return b;
}

FieldSpec gaussian() { return make("gaussian", {1, 0, 1}, power_basis(2), {0, 1}, 4); }
FieldSpec eisenstein() { return make("eisenstein", {1, 1, 1}, power_basis(2), {1, 1}, 6); }
FieldSpec rationals() { return make("rationals", {-1, 1}, power_basis(1), {-1}, 2); }

ErrorKind kind_of(const FieldSpec& s) {
  try {
    load_field(s);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST_CASE("zeta matrices") {
  CHECK(load_field(gaussian())->Z() == IntMatrix{{0, -1}, {1, 0}});
  OrderPtr s2 = load_field(make("sqrt2", {-2, 0, 1}, power_basis(2), {-1, 0}, 2));
  CHECK(s2->Z() == IntMatrix{{-1, 0}, {0, -1}});
}

TEST_CASE("spec validation errors") {
  CHECK(kind_of(make("g8", {1, 0, 1}, power_basis(2), {0, 1}, 8)) == ErrorKind::ZetaOrderWrong);
  CHECK(kind_of(make("g2", {1, 0, 1}, power_basis(2), {0, 1}, 2)) == ErrorKind::ZetaOrderWrong);
  CHECK(kind_of(make("nm", {1, 0, 2}, power_basis(2), {-1, 0}, 2)) == ErrorKind::NotMonic);
  CHECK(kind_of(make("sq", {0, 0, 1}, power_basis(2), {-1, 0}, 2)) == ErrorKind::NotSquarefree);
  CHECK(kind_of(make("half", {1, 0, 1}, {{1, 0}, {0, Rational(1, 2)}}, {0, 1}, 4)) == ErrorKind::BasisNotClosed);
  CHECK(kind_of(make("zni", {1, 0, 1}, power_basis(2), {Rational(1, 2), 0}, 2)) == ErrorKind::ZetaNotIntegral);
  // x^2 - 1 splits: 1 - x is a zero divisor
  CHECK(kind_of(make("split", {-1, 0, 1}, power_basis(2), {0, 1}, 2)) == ErrorKind::ZetaActionNotFree);
  CHECK(kind_of(make("short", {1, 0, 1}, power_basis(1), {0, 1}, 4)) == ErrorKind::MalformedSpec);
}

TEST_CASE("non-power integral basis") {
  // Z[(1+sqrt(-3))/2]
  OrderPtr o = load_field(make("e", {3, 0, 1}, {{1, 0}, {Rational(1, 2), Rational(1, 2)}}, {Rational(1, 2), Rational(1, 2)}, 6));
  CHECK(o->zeta() == OrderElement{0, 1});
  CHECK(o->discriminant() == -3);
  CHECK(verify_mu_maximality(*o).verdict == MuVerdict::Verified);
}

TEST_CASE("element arithmetic") {
  OrderPtr o = load_field(gaussian());
  const OrderElement i = o->zeta();
  CHECK(o->mul(i, i) == o->from_integer(-1));
  CHECK(o->norm({3, 4}) == 25);
  CHECK(o->trace({3, 4}) == 6);
  CHECK(o->discriminant() == -4);
  CHECK(o->divide({2, 0}, {1, -1}) == OrderElement{1, 1});
  CHECK_FALSE(o->divide({1, 0}, {1, -1}).has_value());
  CHECK_THROWS_AS(o->divide({1, 0}, {0, 0}), Error);
  CHECK(o->zeta_times(3, {1, 0}) == OrderElement{0, -1});
}

TEST_CASE("mu maximality") {
  CHECK(verify_mu_maximality(*load_field(gaussian())).verdict == MuVerdict::Verified);
  CHECK(verify_mu_maximality(*load_field(rationals())).verdict == MuVerdict::Verified);
  OrderPtr short_mu = load_field(make("e2", {1, 1, 1}, power_basis(2), {-1, 0}, 2));
  CHECK(verify_mu_maximality(*short_mu).verdict == MuVerdict::Failed);
  CHECK(verify_mu_maximality(*load_field(eisenstein())).verdict == MuVerdict::Verified);
}

TEST_CASE("real places") {
  CHECK(real_places({1, 0, 1}) == 0);
  CHECK(real_places({-2, 0, 1}) == 2);
  CHECK(real_places({-2, 0, 0, 1}) == 1);
  CHECK(real_places({1, 1, 1, 1, 1}) == 0);
  CHECK(real_places({-1, 1}) == 1);
}

TEST_CASE("admissibility modulus") {
  CHECK(admissibility_modulus(*load_field(gaussian())) == OrderElement{2, -2});
  CHECK(admissibility_modulus(*load_field(rationals())) == OrderElement{2});
  OrderPtr e = load_field(eisenstein());
  // (1 - z)(1 - z^2)(1 - z^3) for z = 1 + x
  OrderElement d = e->one();
  for (int k = 1; k <= 3; ++k) d = e->mul(d, e->sub(e->one(), e->zeta_times(k, e->one())));
  CHECK(admissibility_modulus(*e) == d);
  CHECK(abs(e->norm(d)) == 12);
}

TEST_CASE("admissible moduli") {
  OrderPtr g = load_field(gaussian()), e = load_field(eisenstein());
  CHECK(is_admissible(*g, 4));
  CHECK_FALSE(is_admissible(*g, 2));
  CHECK(is_admissible(*e, 6));
  CHECK_FALSE(is_admissible(*e, 3));
  for (int c = 2; c < 40; ++c) {
    CHECK(is_admissible(*g, c) == (c % 4 == 0));
    CHECK(is_admissible(*e, c) == (c % 6 == 0));
  }
}

TEST_CASE("quotient rings") {
  OrderPtr g = load_field(gaussian());
  QuotientRing q2(g, 2);
  std::vector<OrderElement> reps = q2.representatives();
  std::set<OrderElement> got(reps.begin(), reps.end());
  CHECK(got == std::set<OrderElement>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  QuotientRing q(load_field(rationals()), 2);
  CHECK(q.size() == 2);
  QuotientRing q4(g, 4);
  CHECK(q4.size() == 16);
  CHECK(q4.reduce({0, -1}) == OrderElement{0, 3});
  for (std::uint64_t k = 0; k < q4.size(); ++k) CHECK(q4.index(q4.element(k)) == k);
  CHECK_THROWS_AS(QuotientRing(g, 100000), Error);
}

TEST_CASE("ideal membership") {
  OrderPtr g = load_field(gaussian());
  const OrderElement a{1, -1};
  CHECK(ideal_membership(*g, {0, 0}, a));
  CHECK_FALSE(ideal_membership(*g, {1, 0}, a));
  CHECK(ideal_membership(*g, {2, 0}, a));
  CHECK(ideal_membership(*g, {1, 1}, a));
  IdealQuotient iq(*g, a);
  CHECK(iq.size() == 2);
}

TEST_CASE("spec files") {
  const std::string toml = R"(
name = "gaussian"
degree = 2
poly = [1, 0, 1]
integral_basis = [["1", "0"], ["0", "1"]]
zeta = ["0", "1"]
m = 4
)";
  const std::string json = R"({"name": "gaussian", "degree": 2, "poly": [1, 0, 1],
    "integral_basis": [["1", "0"], ["0", "1"]], "zeta": ["0", "1"], "m": 4})";
  FieldSpec a = parse_field_spec(toml), b = parse_field_spec(json);
  CHECK(a.poly == b.poly);
  CHECK(a.integral_basis == b.integral_basis);
  CHECK(a.zeta == b.zeta);
  CHECK(a.m == 4);
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2") == -2);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_field_spec("{\"name\": 1}"), Error);
  CHECK_THROWS_AS(parse_field_spec("name = \"x\"\ndegree = 1.5"), Error);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(poly::cyclotomic(1) == IntVector{-1, 1});
  CHECK(poly::cyclotomic(4) == IntVector{1, 0, 1});
  CHECK(poly::cyclotomic(6) == IntVector{1, -1, 1});
  CHECK(poly::cyclotomic(5) == IntVector{1, 1, 1, 1, 1});
}
