#include "ringkt/eta.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace ringkt {

IntVector invariant_dimensions(const Order& o) {
  const int n = o.n();
  const long m = o.m();
  std::vector<Rational> sums(n + 1);
  for (long j = 0; j < m; ++j) {
    RatVector cp = characteristic_polynomial(o.zeta_power(j));
    for (int k = 0; k <= n; ++k) sums[k] += (k % 2 == 0 ? 1 : -1) * cp[n - k];
  }
  IntVector out(n + 1);
  for (int k = 0; k <= n; ++k) {
    Rational d = sums[k] / m;
    ensure(d.get_den() == 1 && d >= 0, "invariant dimension is a nonnegative integer");
    out[k] = d.get_num();
  }
  return out;
}

IntVector inf_ranks(const Order& o) {
  IntVector all = invariant_dimensions(o);
  IntVector out;
  for (std::size_t k = 0; k < all.size(); k += 2) out.push_back(all[k]);
  return out;
}

Rational molien_alternating(const Order& o) {
  Rational s = 0;
  const IntMatrix id = IntMatrix::identity(o.n());
  for (long j = 0; j < o.m(); ++j) s += Rational(determinant(id - o.zeta_power(j)));
  return s / o.m();
}

int delta(const Order& o) { return o.n() % 2 == 0 ? 1 : 0; }

namespace {

std::vector<std::int64_t> to_i64(const IntMatrix& a) {
  std::vector<std::int64_t> out;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      ensure(a(r, k).fits_slong_p(), "small matrix entries");
      out.push_back(a(r, k).get_si());
    }
  return out;
}

// Fixed-width evaluation of d -> (W (d - b)) mod c on box coordinates.
// N = 0 means the width is only known at run time (at most kMaxWidth).
constexpr int kMaxWidth = 16;

struct AffineStep {
  int n;
  std::int64_t c;
  std::vector<std::int64_t> w;
  std::vector<std::int64_t> b;

  template <int N>
  void apply(const std::int64_t* d, std::int64_t* out) const {
    const int nn = N ? N : n;
    for (int r = 0; r < nn; ++r) {
      std::int64_t s = 0;
      for (int k = 0; k < nn; ++k) s += w[r * nn + k] * (d[k] - b[k]);
      if (s < 0) {
        s += c;
        if (s < 0) s = ((s % c) + c) % c;
      } else if (s >= c) {
        s -= c;
        if (s >= c) s %= c;
      }
      out[r] = s;
    }
  }

  template <int N>
  std::uint64_t encode(const std::int64_t* d) const {
    const int nn = N ? N : n;
    std::uint64_t idx = 0;
    for (int k = 0; k < nn; ++k) idx = idx * static_cast<std::uint64_t>(c) + static_cast<std::uint64_t>(d[k]);
    return idx;
  }

  void decode(std::uint64_t idx, std::int64_t* d) const {
    for (int k = n - 1; k >= 0; --k) {
      d[k] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(c));
      idx /= static_cast<std::uint64_t>(c);
    }
  }
};

AffineStep make_step(const Order& o, std::int64_t c, const OrderElement& b, long i) {
  if (o.n() > kMaxWidth) throw Error(ErrorKind::TooLarge, "degree exceeds the cycle walker width");
  AffineStep st{o.n(), c, to_i64(o.zeta_power(-i)), {}};
  for (const auto& x : b) st.b.push_back(mod_floor(x, c).get_si());
  return st;
}

// Calls visit(start, length) for each cycle, in order of least point.
template <int N, class Visit>
void walk_cycles_fixed(const AffineStep& st, std::uint64_t size, Visit&& visit) {
  std::vector<std::uint8_t> seen(size, 0);
  std::array<std::int64_t, kMaxWidth> cur{}, nxt{};
  for (std::uint64_t start = 0; start < size; ++start) {
    if (seen[start]) continue;
    st.decode(start, cur.data());
    std::uint64_t idx = start, len = 0;
    do {
      seen[idx] = 1;
      st.apply<N>(cur.data(), nxt.data());
      std::swap(cur, nxt);
      idx = st.encode<N>(cur.data());
      ++len;
      if (len > size) throw Error(ErrorKind::InvariantViolation, "affine map is not a permutation");
    } while (idx != start);
    visit(start, len);
  }
}

template <class Visit>
void walk_cycles(const AffineStep& st, std::uint64_t size, Visit&& visit) {
  switch (st.n) {
    case 1: walk_cycles_fixed<1>(st, size, visit); break;
    case 2: walk_cycles_fixed<2>(st, size, visit); break;
    case 3: walk_cycles_fixed<3>(st, size, visit); break;
    case 4: walk_cycles_fixed<4>(st, size, visit); break;
    default: walk_cycles_fixed<0>(st, size, visit); break;
  }
}

}  // namespace

AffinePermutation::AffinePermutation(OrderPtr o, std::int64_t c, const OrderElement& b, long i)
    : quotient_(o, c) {
  AffineStep st = make_step(*o, c, b, i);
  image_.resize(quotient_.size());
  std::array<std::int64_t, kMaxWidth> cur{}, nxt{};
  for (std::uint64_t idx = 0; idx < image_.size(); ++idx) {
    st.decode(idx, cur.data());
    st.apply<0>(cur.data(), nxt.data());
    image_[idx] = static_cast<std::uint32_t>(st.encode<0>(nxt.data()));
  }
}

bool AffinePermutation::is_bijection() const {
  std::vector<std::uint8_t> hit(image_.size(), 0);
  for (auto v : image_) {
    if (v >= image_.size() || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

std::vector<std::vector<std::uint64_t>> AffinePermutation::cycles() const {
  std::vector<std::uint8_t> seen(image_.size(), 0);
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t s = 0; s < image_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::uint64_t> cyc;
    std::uint64_t x = s;
    do {
      seen[x] = 1;
      cyc.push_back(x);
      x = image_[x];
    } while (x != s);
    out.push_back(std::move(cyc));
  }
  return out;
}

CycleCensus AffinePermutation::census() const {
  CycleCensus out;
  for (const auto& cyc : cycles()) ++out[cyc.size()];
  return out;
}

AffinePermutation affine_permutation(OrderPtr o, std::int64_t c, const OrderElement& b, long i) {
  return AffinePermutation(std::move(o), c, b, i);
}

CycleAnalysis analyze_cycles(const SemidirectGroup& g, std::int64_t c, const SemidirectElement& gen) {
  const Order& o = g.order();
  auto ord = g.element_order(gen);
  if (!ord) throw Error(ErrorKind::InfiniteOrderGenerator, "generator is a pure translation");
  if (gen.i % o.m() == 0) throw Error(ErrorKind::InfiniteOrderGenerator, "generator has trivial rotation part");

  QuotientRing q(g.order_ptr(), c);
  CycleAnalysis a;
  a.c = c;
  a.generator = gen;
  a.generator_order = *ord;
  const long m = o.m();
  const IntMatrix id = IntMatrix::identity(o.n());
  const AffineStep st = make_step(o, c, gen.b, gen.i);

  walk_cycles(st, q.size(), [&](std::uint64_t start, std::uint64_t len) {
    ++a.census[len];
    const long rot = static_cast<long>((static_cast<std::uint64_t>(gen.i) * len) % static_cast<std::uint64_t>(m));
    if (rot == 0) {
      ++a.unit_cycles;
      return;
    }
    OrderElement d = q.element(start);
    OrderElement num = (o.zeta_power(rot) - id) * d;
    OrderElement sb = o.geometric_sum(gen.i, static_cast<long>(len)) * gen.b;
    OrderElement bt(o.n());
    for (int k = 0; k < o.n(); ++k) {
      Integer v = num[k] + sb[k];
      if (v % c != 0) throw Error(ErrorKind::InvariantViolation, "cycle translation is not divisible by c");
      bt[k] = v / c;
    }
    CycleAnalysis::Landing l{start, len, {bt, rot}, {}, {}};
    l.normalized = g.normalize(l.diagonal);
    l.location = g.locate_in_maximal(l.normalized.label);
    a.landings.push_back(std::move(l));
  });
  return a;
}

K0Vector classes_from_cycles(const SemidirectGroup& g, const CycleAnalysis& a, long chi) {
  const long big = a.generator_order;
  K0Vector out;
  out.add(K0Label::unit(), Rational(Integer(static_cast<unsigned long>(a.unit_cycles))));
  for (const auto& l : a.landings) {
    const long len = static_cast<long>(l.length);
    ensure(big % len == 0, "cycle length divides the generator order");
    const long small = big / len;
    ensure(small == g.m() / std::gcd(l.diagonal.i, g.m()), "order of the diagonal entry");
    long t = (chi % small + small) % small;
    t = (t * l.normalized.exponent) % small;
    out.add(g.expand_character(l.location, t));
  }
  return out;
}

K0Vector cycle_classes(const SemidirectGroup& g, std::int64_t c, const OrderElement& b, long i, long chi) {
  if (!is_admissible(g.order(), c)) throw Error(ErrorKind::NotAdmissible, "c = " + std::to_string(c));
  CycleAnalysis a = analyze_cycles(g, c, {b, ((i % g.m()) + g.m()) % g.m()});
  if (chi <= 0 || chi >= a.generator_order)
    throw Error(ErrorKind::ShapeMismatch, "character index must be nontrivial and below the group order");
  return classes_from_cycles(g, a, chi);
}

std::size_t EtaMatrix::index_of(const K0Label& l) const {
  auto it = std::find(basis.begin(), basis.end(), l);
  if (it == basis.end()) throw Error(ErrorKind::InvariantViolation, "label " + to_string(l) + " outside the finite basis");
  return static_cast<std::size_t>(it - basis.begin());
}

K0Vector EtaMatrix::column(std::size_t j) const {
  K0Vector v;
  for (std::size_t r = 0; r < basis.size(); ++r) v.add(basis[r], Rational(finite_block(r, j)));
  return v;
}

std::vector<K0Label> finite_basis(const SemidirectGroup& g) {
  std::vector<K0Label> out{K0Label::unit()};
  const auto& mx = g.maximal_classes();
  for (std::size_t h = 1; h < mx.size(); ++h)
    for (long s = 1; s < g.subgroup_order(mx[h]); ++s) out.push_back(K0Label::fin(mx[h], s));
  for (long s = 1; s < g.m(); ++s) out.push_back(K0Label::mu(s));
  return out;
}

EtaMatrix eta_matrix(const SemidirectGroup& g, std::int64_t c) {
  const Order& o = g.order();
  if (!is_admissible(o, c)) throw Error(ErrorKind::NotAdmissible, "c = " + std::to_string(c));
  EtaMatrix e;
  e.c = c;
  e.n = o.n();
  e.basis = finite_basis(g);
  const std::size_t B = e.basis.size();
  e.finite_block = IntMatrix(B, B);
  Integer cn;
  mpz_ui_pow_ui(cn.get_mpz_t(), static_cast<unsigned long>(c), static_cast<unsigned long>(o.n()));
  e.finite_block(0, 0) = cn;

  auto store = [&](std::size_t col, const K0Vector& v) {
    for (const auto& [l, coef] : v.terms()) {
      ensure(coef.get_den() == 1, "finite block is integral");
      e.finite_block(e.index_of(l), col) = coef.get_num();
    }
  };

  const auto& mx = g.maximal_classes();
  std::size_t col = 1;
  for (std::size_t h = 1; h < mx.size(); ++h) {
    CycleAnalysis a = analyze_cycles(g, c, {mx[h].b, mx[h].i});
    const long len = g.subgroup_order(mx[h]);
    // every cycle of a non-mu generator has full length
    ensure(a.census.size() == 1 && a.census.begin()->first == static_cast<std::uint64_t>(len),
           "cycles of " + to_string(mx[h]) + " all have length m/i");
    for (long s = 1; s < len; ++s, ++col) {
      K0Vector v = classes_from_cycles(g, a, s);
      ensure(v.terms().size() == 1 && v.coefficient(K0Label::unit()) * len == Rational(cn),
             "Fin column is (c^n i/m)[1]");
      store(col, v);
    }
  }
  if (g.m() > 1) {
    CycleAnalysis a = analyze_cycles(g, c, {o.zero(), 1});
    for (long s = 1; s < g.m(); ++s, ++col) {
      K0Vector v = classes_from_cycles(g, a, s);
      for (long t = 1; t < g.m(); ++t)
        ensure(v.coefficient(K0Label::mu(t)) == (s == t ? 1 : 0), "Mu block of eta is the identity");
      store(col, v);
    }
  }
  ensure(col == B, "every basis column filled");

  IntVector d = invariant_dimensions(o);
  int zero_exponents = 0;
  for (int k = 2; k <= o.n(); k += 2)
    for (long idx = 0; idx < d[k].get_si(); ++idx) {
      e.inf_labels.push_back(K0Label::inf(k, idx));
      e.inf_exponents.push_back(o.n() - k);
      if (o.n() == k) ++zero_exponents;
    }
  ensure(zero_exponents == delta(o), "c^0 occurs on the infinite diagonal exactly when the degree is even");
  return e;
}

}  // namespace ringkt
