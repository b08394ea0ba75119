#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest/doctest.h>

#include <random>

#include "ringkt/linalg.hpp"

using namespace ringkt;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t r) {
  IntMatrix u = IntMatrix::identity(r);
  std::uniform_int_distribution<std::size_t> idx(0, r - 1);
  std::uniform_int_distribution<int> k(-3, 3);
  for (int s = 0; s < 12 && r > 1; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Integer f = k(rng);
    for (std::size_t col = 0; col < r; ++col) u(i, col) += f * u(j, col);
  }
  return u;
}

// cofactor expansion, deliberately naive
Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = 0, bb = 0; b < n; ++b)
        if (b != j) minor(a - 1, bb++) = m(a, b);
    total += (j % 2 ? -1 : 1) * m(0, j) * cofactor_det(minor);
  }
  return total;
}

bool is_hnf(const HermiteForm& f) {
  const IntMatrix& h = f.h;
  std::size_t row = 0;
  for (std::size_t j = 0; j < f.rank; ++j) {
    // pivot row of column j
    while (row < h.rows() && h(row, j) == 0) ++row;
    if (row == h.rows() || h(row, j) <= 0) return false;
    for (std::size_t i = 0; i < row; ++i)
      if (h(i, j) != 0) return false;
    for (std::size_t k = 0; k < j; ++k)
      if (h(row, k) < 0 || h(row, k) >= h(row, j)) return false;
    ++row;
  }
  for (std::size_t j = f.rank; j < h.cols(); ++j)
    for (std::size_t i = 0; i < h.rows(); ++i)
      if (h(i, j) != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("hnf examples") {
  IntMatrix a{{2, 0}, {0, 3}};
  HermiteForm f = hnf(a);
  CHECK(f.h == a);
  CHECK(f.u == IntMatrix::identity(2));

  HermiteForm z = hnf(IntMatrix{{0}});
  CHECK(z.h == IntMatrix{{0}});
  CHECK(z.u == IntMatrix{{1}});
  CHECK(z.rank == 0);

  IntMatrix b{{4, 6}, {2, 4}};
  HermiteForm g = hnf(b);
  CHECK(abs(determinant(g.h)) == 4);
  CHECK(b * g.u == g.h);
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + t % 5, c = 1 + (t / 5) % 5;
    IntMatrix m = random_matrix(rng, r, c);
    if (t % 7 == 0) m.set_column(0, IntVector(r, 0));
    HermiteForm f = hnf(m);
    CHECK(m * f.u == f.h);
    CHECK(is_unimodular(f.u));
    CHECK(is_hnf(f));
    CHECK(f.rank == rank(m));
  }
}

TEST_CASE("snf examples") {
  CHECK(smith_diagonal(IntMatrix::identity(3)) == IntVector{1, 1, 1});
  CHECK(smith_diagonal(IntMatrix{{2, 4}, {6, 8}}) == IntVector{2, 4});
  CHECK(smith_diagonal(IntMatrix{{6, 0}, {0, 10}}) == IntVector{2, 30});
}

TEST_CASE("snf properties") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + t % 4, c = 1 + (t / 4) % 4;
    IntMatrix m = random_matrix(rng, r, c);
    SmithForm s = snf(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    IntVector diag = smith_diagonal(m);
    for (std::size_t i = 0; i < diag.size(); ++i) {
      CHECK(diag[i] >= 0);
      if (i + 1 < diag.size() && diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
      if (diag[i] == 0 && i + 1 < diag.size()) CHECK(diag[i + 1] == 0);
    }
    IntMatrix p = random_unimodular(rng, r), q = random_unimodular(rng, c);
    CHECK(smith_diagonal(p * m * q) == diag);
  }
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    IntMatrix m = random_matrix(rng, 1 + t % 5, 1 + t % 5);
    CHECK(determinant(m) == cofactor_det(m));
    CHECK(determinant(to_rational(m)) == Rational(cofactor_det(m)));
  }
}

TEST_CASE("characteristic polynomial") {
  // x^2 + 1 for the rotation by i
  RatVector p = characteristic_polynomial(IntMatrix{{0, -1}, {1, 0}});
  CHECK(p == RatVector{1, 0, 1});
  std::mt19937_64 rng(4);
  IntMatrix m = random_matrix(rng, 4, 4);
  RatVector q = characteristic_polynomial(m);
  CHECK(q.back() == 1);
  CHECK(q[0] == Rational(determinant(m)));  // (-1)^4 det
}

TEST_CASE("kernel and inverse") {
  IntMatrix m{{1, 2, 3}, {2, 4, 6}};
  IntMatrix k = integer_kernel(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
  IntMatrix u{{2, 1}, {1, 1}};
  CHECK(unimodular_inverse(u) * u == IntMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}), Error);
  RatMatrix r{{Rational(1, 2), 0}, {0, 2}};
  CHECK(inverse(r) * r == RatMatrix::identity(2));
}

TEST_CASE("lattice membership") {
  Lattice l = Lattice::from_basis(IntMatrix{{1, 1}, {1, -1}});
  CHECK(lattice_membership({0, 0}, l) == IntVector{0, 0});
  CHECK_FALSE(lattice_membership({1, 0}, l).has_value());
  CHECK(lattice_membership({2, 0}, l) == IntVector{1, 1});
  CHECK_THROWS_AS(lattice_membership({1, 2, 3}, l), Error);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    IntMatrix b = random_matrix(rng, 3, 2);
    if (rank(b) < 2) continue;
    Lattice lb = Lattice::from_basis(b);
    IntVector x = b * IntVector{Integer(t - 15), Integer(3)};
    auto c = lattice_membership(x, lb);
    REQUIRE(c.has_value());
    CHECK(b * *c == x);
  }
}

TEST_CASE("saturation") {
  Lattice a = saturate(Lattice::from_generators(2, IntMatrix{{2}, {0}}));
  CHECK(a.basis() == IntMatrix{{1}, {0}});
  Lattice b = saturate(Lattice::from_generators(2, IntMatrix{{2}, {4}}));
  CHECK(b.basis() == IntMatrix{{1}, {2}});
  Lattice full = Lattice::full(3);
  CHECK(saturate(full).basis() == full.basis());

  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    IntMatrix g = random_matrix(rng, 4, 2);
    if (rank(g) < 2) continue;
    Lattice l = Lattice::from_generators(4, g);
    Lattice s = saturate(l);
    CHECK(saturate(s).basis() == s.basis());
    // [S : L] equals the product of the nonzero invariant factors of the inclusion
    IntMatrix incl(s.rank(), l.rank());
    for (std::size_t j = 0; j < l.rank(); ++j) incl.set_column(j, *lattice_membership(l.basis().column(j), s));
    Integer prod = 1;
    for (const auto& d : smith_diagonal(incl))
      if (d != 0) prod *= d;
    CHECK(lattice_index(s, l) == prod);
  }
}

TEST_CASE("cokernel presentations") {
  AbelianGroupPresentation z2 = cokernel(IntMatrix(2, 2));
  CHECK(z2.free_rank() == 2);
  CHECK(z2.torsion().empty());
  AbelianGroupPresentation z3 = cokernel(IntMatrix{{1, 0}, {0, 3}});
  CHECK(z3.free_rank() == 0);
  CHECK(z3.torsion() == IntVector{3});
  AbelianGroupPresentation mixed = cokernel(IntMatrix{{2, 0}, {0, 0}});
  CHECK(mixed.free_rank() == 1);
  CHECK(mixed.torsion() == IntVector{2});
  CHECK(mixed.to_string() == "Z + Z/2");
}

TEST_CASE("dimension mismatches throw") {
  CHECK_THROWS_AS(IntMatrix(2, 3) * IntMatrix(2, 3), Error);
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), Error);
}
