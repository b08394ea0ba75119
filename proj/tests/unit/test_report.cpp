#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include "ringkt/report.hpp"

using namespace ringkt;

namespace {

OrderPtr gaussian() {
  FieldSpec s;
  s.name = "gaussian";
  s.degree = 2;
  s.poly = {1, 0, 1};
  s.integral_basis = {{1, 0}, {0, 1}};
  s.zeta = {0, 1};
  s.m = 4;
  return load_field(s);
}

}  // namespace

TEST_CASE("report round trip") {
  SemidirectGroup g(gaussian());
  Report r = make_report(g, full_k_theory(g, 4, 2));
  CHECK(r.checks.at("tower_matches_formula"));
  CHECK(r.checks.at("branches_agree"));
  CHECK(r.final_formula.text == "Z^4 ⊗ Λ(Γ)");
  const std::string text = to_json(r);
  CHECK(report_from_json(text) == r);
  CHECK(to_json(report_from_json(text)) == text);
}

TEST_CASE("identical inputs give identical bytes") {
  SemidirectGroup a(gaussian()), b(gaussian());
  CHECK(to_json(make_report(a, full_k_theory(a, 4, 1))) == to_json(make_report(b, full_k_theory(b, 4, 1))));
  CHECK(to_json(field_report(a)) == to_json(field_report(b)));
  CHECK(to_json(eta_report(eta_matrix(a, 4))) == to_json(eta_report(eta_matrix(b, 4))));
}

TEST_CASE("field summary") {
  SemidirectGroup g(gaussian());
  FieldReport f = field_report(g);
  CHECK(f.n == 2);
  CHECK(f.m == 4);
  CHECK(f.real_places == 0);
  CHECK(f.delta == 1);
  CHECK(f.discriminant == -4);
  CHECK(summary_text(f).find("gaussian") != std::string::npos);
}

TEST_CASE("matrix input") {
  MatrixInput a = parse_matrix_input(R"({"rows": [[2, 0], [0, "1"]], "parameter": 2})");
  CHECK(a.a == IntMatrix{{2, 0}, {0, 1}});
  REQUIRE(a.parameter.has_value());
  CHECK(*a.parameter == 2);
  MatrixInput b = parse_matrix_input("[[1]]");
  CHECK_FALSE(b.parameter.has_value());
  CHECK_THROWS_AS(parse_matrix_input("[[1, 2]]"), Error);
  CHECK_THROWS_AS(parse_matrix_input("{"), Error);
}
