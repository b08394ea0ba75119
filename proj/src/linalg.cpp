#include "ringkt/linalg.hpp"

#include <algorithm>
#include <utility>

namespace ringkt {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(ErrorKind::ZeroDivisor, "floor_div by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(ErrorKind::ZeroDivisor, "mod_floor by zero");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r < 0) r += abs(b);
  return r;
}

namespace {

// col[dst] -= q * col[src]
void col_sub(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) -= q * m(r, src);
}
void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}
void col_neg(IntMatrix& m, std::size_t c) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = -m(r, c);
}
void row_sub(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}
void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}
void row_neg(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

template <class T>
void require_square(const Matrix<T>& m, const char* what) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, std::string(what) + " needs a square matrix");
}

}  // namespace

IntMatrix power(const IntMatrix& m, unsigned long k) {
  require_square(m, "power");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).get_den() != 1) return std::nullopt;
      out(r, c) = m(r, c).get_num();
    }
  return out;
}

Integer determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      row_swap(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational determinant(const RatMatrix& m) {
  require_square(m, "determinant");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
    }
  }
  return det;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return abs(determinant(m)) == 1;
}

RatMatrix inverse(const RatMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw Error(ErrorKind::InvariantViolation, "inverse of a singular matrix");
    for (std::size_t c = 0; c < n; ++c) {
      std::swap(a(p, c), a(k, c));
      std::swap(inv(p, c), inv(k, c));
    }
    Rational piv = a(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      a(k, c) /= piv;
      inv(k, c) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k);
      for (std::size_t c = 0; c < n; ++c) {
        a(i, c) -= f * a(k, c);
        inv(i, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!is_unimodular(m)) throw Error(ErrorKind::InvariantViolation, "matrix is not unimodular");
  auto inv = to_integer(inverse(to_rational(m)));
  ensure(inv.has_value(), "unimodular inverse is integral");
  return *inv;
}

RatVector characteristic_polynomial(const IntMatrix& a) {
  require_square(a, "characteristic_polynomial");
  // Faddeev-LeVerrier; every division below is exact over Z.
  const std::size_t n = a.rows();
  IntVector c(n + 1);
  c[n] = 1;
  IntMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = a * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    IntMatrix am = a * mk;
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    Integer q;
    mpz_divexact_ui(q.get_mpz_t(), tr.get_mpz_t(), k);
    c[n - k] = -q;
  }
  RatVector out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out[i] = Rational(c[i]);
  return out;
}

HermiteForm hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  const std::size_t cols = m.cols();
  std::size_t k = 0;
  for (std::size_t r = 0; r < m.rows() && k < cols; ++r) {
    while (true) {
      std::size_t best = cols;
      for (std::size_t j = k; j < cols; ++j)
        if (h(r, j) != 0 && (best == cols || abs(h(r, j)) < abs(h(r, best)))) best = j;
      if (best == cols) break;
      col_swap(h, k, best);
      col_swap(u, k, best);
      bool clean = true;
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (h(r, j) == 0) continue;
        Integer q = floor_div(h(r, j), h(r, k));
        col_sub(h, j, k, q);
        col_sub(u, j, k, q);
        if (h(r, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, k) == 0) continue;
    if (h(r, k) < 0) {
      col_neg(h, k);
      col_neg(u, k);
    }
    for (std::size_t j = 0; j < k; ++j) {
      Integer q = floor_div(h(r, j), h(r, k));
      col_sub(h, j, k, q);
      col_sub(u, j, k, q);
    }
    ++k;
  }
  return {std::move(h), std::move(u), k};
}

SmithForm snf(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t lim = std::min(rows, cols);
  for (std::size_t t = 0; t < lim; ++t) {
    bool done_all = false;
    while (true) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (bi == rows || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) {
        done_all = true;
        break;
      }
      row_swap(d, t, bi);
      row_swap(u, t, bi);
      col_swap(d, t, bj);
      col_swap(v, t, bj);
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = floor_div(d(i, t), d(t, t));
        row_sub(d, i, t, q);
        row_sub(u, i, t, q);
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = floor_div(d(t, j), d(t, t));
        col_sub(d, j, t, q);
        col_sub(v, j, t, q);
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      // row_t += row_bad, then the next pass pulls in a smaller remainder
      row_sub(d, t, bad, -1);
      row_sub(u, t, bad, -1);
    }
    if (done_all) break;
    if (d(t, t) < 0) {
      row_neg(d, t);
      row_neg(u, t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

IntVector smith_diagonal(const IntMatrix& m) {
  SmithForm s = snf(m);
  const std::size_t lim = std::min(m.rows(), m.cols());
  IntVector out(lim);
  for (std::size_t i = 0; i < lim; ++i) out[i] = s.d(i, i);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  HermiteForm hf = hnf(m);
  return hf.u.columns(hf.rank, m.cols() - hf.rank);
}

Lattice Lattice::from_basis(const IntMatrix& basis) {
  if (ringkt::rank(basis) != basis.cols())
    throw Error(ErrorKind::DimensionMismatch, "lattice basis columns are linearly dependent");
  return Lattice(basis);
}

Lattice Lattice::from_generators(std::size_t ambient, const IntMatrix& generators) {
  if (generators.cols() == 0) return Lattice(IntMatrix(ambient, 0));
  if (generators.rows() != ambient) throw Error(ErrorKind::DimensionMismatch, "generator length");
  HermiteForm hf = hnf(generators);
  return Lattice(hf.h.columns(0, hf.rank));
}

Lattice Lattice::full(std::size_t ambient) { return Lattice(IntMatrix::identity(ambient)); }

std::optional<IntVector> lattice_membership(const IntVector& x, const Lattice& l) {
  if (x.size() != l.ambient_rank()) throw Error(ErrorKind::DimensionMismatch, "vector length vs lattice ambient rank");
  const std::size_t k = l.rank();
  if (k == 0) {
    for (const auto& e : x)
      if (e != 0) return std::nullopt;
    return IntVector{};
  }
  HermiteForm hf = hnf(l.basis());
  const IntMatrix& h = hf.h;
  IntVector y(k);
  std::size_t row = 0;
  for (std::size_t j = 0; j < k; ++j) {
    while (row < h.rows() && h(row, j) == 0) ++row;
    ensure(row < h.rows(), "hnf pivot");
    Integer rhs = x[row];
    for (std::size_t l2 = 0; l2 < j; ++l2) rhs -= h(row, l2) * y[l2];
    if (rhs % h(row, j) != 0) return std::nullopt;
    y[j] = rhs / h(row, j);
    ++row;
  }
  IntVector hy = h * y;
  if (hy != x) return std::nullopt;
  return hf.u * y;
}

Lattice saturate(const Lattice& l) {
  const std::size_t k = l.rank();
  if (k == 0) return l;
  SmithForm s = snf(l.basis());
  IntMatrix uinv = unimodular_inverse(s.u);
  return Lattice::from_generators(l.ambient_rank(), uinv.columns(0, k));
}

std::optional<Integer> lattice_index(const Lattice& outer, const Lattice& inner) {
  if (outer.rank() != inner.rank() || outer.ambient_rank() != inner.ambient_rank()) return std::nullopt;
  const std::size_t k = inner.rank();
  IntMatrix coeffs(k, k);
  for (std::size_t j = 0; j < k; ++j) {
    auto c = lattice_membership(inner.basis().column(j), outer);
    if (!c) return std::nullopt;
    coeffs.set_column(j, *c);
  }
  return abs(determinant(coeffs));
}

AbelianGroupPresentation::AbelianGroupPresentation(std::size_t generators, IntMatrix relations)
    : generators_(generators), relations_(std::move(relations)) {
  if (relations_.cols() > 0 && relations_.rows() != generators_)
    throw Error(ErrorKind::DimensionMismatch, "relation length vs generator count");
  if (relations_.cols() == 0) relations_ = IntMatrix(generators_, 0);
  factors_.assign(generators_, Integer(0));
  if (relations_.cols() > 0) {
    IntVector diag = smith_diagonal(relations_);
    for (std::size_t i = 0; i < diag.size(); ++i) factors_[i] = abs(diag[i]);
  }
}

std::size_t AbelianGroupPresentation::free_rank() const {
  return static_cast<std::size_t>(std::count(factors_.begin(), factors_.end(), Integer(0)));
}

IntVector AbelianGroupPresentation::torsion() const {
  IntVector out;
  for (const auto& f : factors_)
    if (f > 1) out.push_back(f);
  return out;
}

Integer AbelianGroupPresentation::exponent() const {
  if (free_rank() > 0) return 0;
  Integer e = 1;
  for (const auto& f : factors_)
    if (f > 1) e = lcm(e, f);
  return e;
}

std::string AbelianGroupPresentation::to_string() const {
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += " + ";
    out += s;
  };
  std::size_t r = free_rank();
  if (r == 1) append("Z");
  if (r > 1) append("Z^" + std::to_string(r));
  for (const auto& t : torsion()) append("Z/" + t.get_str());
  return out.empty() ? "0" : out;
}

AbelianGroupPresentation cokernel(const IntMatrix& m) { return AbelianGroupPresentation(m.rows(), m); }

}  // namespace ringkt
