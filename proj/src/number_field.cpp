#include "ringkt/number_field.hpp"

#include <numeric>
#include <sstream>

#include "ringkt/polynomial.hpp"

namespace ringkt {

namespace {

bool is_identity(const IntMatrix& a) { return a == IntMatrix::identity(a.rows()); }

std::vector<long> primes_up_to(long bound) {
  std::vector<char> sieve(static_cast<std::size_t>(bound) + 1, 1);
  std::vector<long> out;
  for (long p = 2; p <= bound; ++p) {
    if (!sieve[p]) continue;
    out.push_back(p);
    for (long q = p * p; q <= bound; q += p) sieve[q] = 0;
  }
  return out;
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

std::shared_ptr<const Order> Order::from_spec(const FieldSpec& spec) {
  const int n = spec.degree;
  if (n < 1) throw Error(ErrorKind::MalformedSpec, "degree must be positive");
  if (static_cast<int>(spec.poly.size()) != n + 1)
    throw Error(ErrorKind::MalformedSpec, "poly must have degree+1 coefficients");
  if (static_cast<int>(spec.integral_basis.size()) != n)
    throw Error(ErrorKind::MalformedSpec, "integral_basis must have degree rows");
  for (const auto& row : spec.integral_basis)
    if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::MalformedSpec, "integral_basis rows must have degree entries");
  if (static_cast<int>(spec.zeta.size()) > n) throw Error(ErrorKind::MalformedSpec, "zeta has too many coordinates");
  if (spec.m < 1) throw Error(ErrorKind::MalformedSpec, "m must be positive");
  if (spec.poly.back() != 1) throw Error(ErrorKind::NotMonic, "leading coefficient is " + spec.poly.back().get_str());

  const poly::Poly f = poly::from_integers(spec.poly);
  if (poly::degree(poly::gcd(f, poly::derivative(f))) > 0)
    throw Error(ErrorKind::NotSquarefree, "gcd(f, f') is not constant");

  std::shared_ptr<Order> o(new Order());
  o->spec_ = spec;
  o->n_ = n;
  o->m_ = spec.m;
  o->basis_ = RatMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) o->basis_(i, j) = spec.integral_basis[i][j];
  if (rank(o->basis_) != static_cast<std::size_t>(n))
    throw Error(ErrorKind::MalformedSpec, "integral basis is linearly dependent");
  for (int j = 0; j < n; ++j)
    if (o->basis_(0, j) != (j == 0 ? 1 : 0)) throw Error(ErrorKind::MalformedSpec, "first basis element must be 1");
  o->basis_inv_ = inverse(o->basis_);

  o->structure_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      poly::Poly prod = poly::mod(poly::mul(o->basis_.row(i), o->basis_.row(j)), f);
      prod.resize(n);
      auto coords = o->from_power_basis(prod);
      if (!coords) throw Error(ErrorKind::BasisNotClosed, "w" + std::to_string(i + 1) + "*w" + std::to_string(j + 1) + " is not integral");
      o->structure_[i * n + j] = *coords;
    }

  // Commutativity and associativity on basis triples.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ensure(o->structure(i, j) == o->structure(j, i), "structure constants commute");
      for (int k = 0; k < n; ++k) {
        OrderElement ei(n), ek(n);
        ei[i] = 1;
        ek[k] = 1;
        ensure(o->mul(o->structure(i, j), ek) == o->mul(ei, o->structure(j, k)), "structure constants associate");
      }
    }

  RatVector zp = spec.zeta;
  zp.resize(n);
  auto zc = o->from_power_basis(zp);
  if (!zc) throw Error(ErrorKind::ZetaNotIntegral, "zeta is not in the order");

  IntMatrix z = o->mul_matrix(*zc);
  o->zeta_powers_.push_back(IntMatrix::identity(n));
  for (int k = 1; k <= spec.m; ++k) o->zeta_powers_.push_back(o->zeta_powers_.back() * z);
  if (!is_identity(o->zeta_powers_[spec.m]))
    throw Error(ErrorKind::ZetaOrderWrong, "zeta^" + std::to_string(spec.m) + " != 1");
  for (int k = 1; k < spec.m; ++k)
    if (spec.m % k == 0 && is_identity(o->zeta_powers_[k]))
      throw Error(ErrorKind::ZetaOrderWrong, "zeta already has order dividing " + std::to_string(k));
  o->zeta_powers_.pop_back();
  for (int i = 1; i < spec.m; ++i)
    if (determinant(IntMatrix::identity(n) - o->zeta_powers_[i]) == 0)
      throw Error(ErrorKind::ZetaActionNotFree, "1 - zeta^" + std::to_string(i) + " is singular");
  return o;
}

OrderPtr load_field(const FieldSpec& spec) { return Order::from_spec(spec); }

const IntMatrix& Order::zeta_power(long k) const {
  long r = k % m_;
  if (r < 0) r += m_;
  return zeta_powers_[static_cast<std::size_t>(r)];
}

IntMatrix Order::geometric_sum(long i, long j) const {
  IntMatrix s(n_, n_);
  for (long l = 0; l < j; ++l) s = s + zeta_power(i * l);
  return s;
}

OrderElement Order::one() const {
  OrderElement e(n_);
  e[0] = 1;
  return e;
}

OrderElement Order::from_integer(const Integer& a) const {
  OrderElement e(n_);
  e[0] = a;
  return e;
}

OrderElement Order::zeta() const { return zeta_power(1).column(0); }

OrderElement Order::add(const OrderElement& x, const OrderElement& y) const {
  OrderElement out(n_);
  for (int i = 0; i < n_; ++i) out[i] = x[i] + y[i];
  return out;
}

OrderElement Order::sub(const OrderElement& x, const OrderElement& y) const {
  OrderElement out(n_);
  for (int i = 0; i < n_; ++i) out[i] = x[i] - y[i];
  return out;
}

OrderElement Order::neg(const OrderElement& x) const {
  OrderElement out(n_);
  for (int i = 0; i < n_; ++i) out[i] = -x[i];
  return out;
}

OrderElement Order::mul(const OrderElement& x, const OrderElement& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
    throw Error(ErrorKind::DimensionMismatch, "element length");
  OrderElement out(n_);
  for (int i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (y[j] == 0) continue;
      Integer f = x[i] * y[j];
      const auto& s = structure(i, j);
      for (int k = 0; k < n_; ++k) out[k] += f * s[k];
    }
  }
  return out;
}

OrderElement Order::zeta_times(long k, const OrderElement& x) const { return zeta_power(k) * x; }

bool Order::is_zero(const OrderElement& x) const {
  for (const auto& e : x)
    if (e != 0) return false;
  return true;
}

IntMatrix Order::mul_matrix(const OrderElement& a) const {
  IntMatrix out(n_, n_);
  for (int j = 0; j < n_; ++j) {
    OrderElement e(n_);
    e[j] = 1;
    out.set_column(j, mul(a, e));
  }
  return out;
}

Integer Order::norm(const OrderElement& a) const { return determinant(mul_matrix(a)); }

Integer Order::trace(const OrderElement& a) const {
  IntMatrix t = mul_matrix(a);
  Integer tr = 0;
  for (int i = 0; i < n_; ++i) tr += t(i, i);
  return tr;
}

Integer Order::discriminant() const {
  IntMatrix t(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) t(i, j) = trace(structure(i, j));
  return determinant(t);
}

RatVector Order::to_power_basis(const OrderElement& x) const {
  RatVector out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) out[k] += Rational(x[i]) * basis_(i, k);
  return out;
}

std::optional<OrderElement> Order::from_power_basis(const RatVector& v) const {
  if (static_cast<int>(v.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "power-basis vector length");
  OrderElement out(n_);
  for (int j = 0; j < n_; ++j) {
    Rational a = 0;
    for (int k = 0; k < n_; ++k) a += v[k] * basis_inv_(k, j);
    if (a.get_den() != 1) return std::nullopt;
    out[j] = a.get_num();
  }
  return out;
}

std::optional<OrderElement> Order::divide(const OrderElement& x, const OrderElement& a) const {
  if (is_zero(a)) throw Error(ErrorKind::ZeroDivisor, "division by zero element");
  RatMatrix inv = inverse(to_rational(mul_matrix(a)));
  OrderElement out(n_);
  for (int i = 0; i < n_; ++i) {
    Rational s = 0;
    for (int j = 0; j < n_; ++j) s += inv(i, j) * Rational(x[j]);
    if (s.get_den() != 1) return std::nullopt;
    out[i] = s.get_num();
  }
  return out;
}

std::string Order::format(const OrderElement& x) const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i].get_str();
  os << ')';
  return os.str();
}

const char* to_string(MuVerdict v) {
  switch (v) {
    case MuVerdict::Verified: return "Verified";
    case MuVerdict::NecessaryConditionsPass: return "NecessaryConditionsPass";
    case MuVerdict::Failed: return "Failed";
  }
  return "Unknown";
}

namespace {

constexpr long kProbeCount = 10;
constexpr long kProbeBudget = 200'000;  // largest q^n enumerated per probe

// Does Phi have a root in R/qR? Brute force over the coordinate box.
bool has_root_mod(const Order& o, const IntVector& phi, long q) {
  const int n = o.n();
  std::vector<long> st(static_cast<std::size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) st[(i * n + j) * n + k] = mod_floor(o.structure(i, j)[k], q).get_si();
  std::vector<long> coef(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) coef[i] = mod_floor(phi[i], q).get_si();

  auto mul = [&](const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> out(n, 0);
    for (int i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (b[j] == 0) continue;
        const long f = a[i] * b[j] % q;
        for (int k = 0; k < n; ++k) out[k] = (out[k] + f * st[(i * n + j) * n + k]) % q;
      }
    }
    return out;
  };

  std::vector<long> x(n, 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  for (long idx = 0; idx < total; ++idx) {
    long t = idx;
    for (int i = n - 1; i >= 0; --i) {
      x[i] = t % q;
      t /= q;
    }
    std::vector<long> acc(n, 0);
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) {
      acc = mul(acc, x);
      acc[0] = (acc[0] + *it) % q;
    }
    bool zero = true;
    for (long v : acc)
      if (v != 0) zero = false;
    if (zero) return true;
  }
  return false;
}

}  // namespace

MuReport verify_mu_maximality(const Order& o) {
  MuReport rep{MuVerdict::Verified, {}, {}, ""};
  const long n = o.n(), m = o.m();
  const Integer bad = abs(Integer(m) * o.discriminant());
  for (long q : primes_up_to(10'000)) {
    if (static_cast<long>(rep.probe_primes.size()) == kProbeCount) break;
    if (bad % q != 0) rep.probe_primes.push_back(q);
  }
  for (long p : primes_up_to(n + 1))
    if (n % euler_phi(p * m) == 0) rep.candidate_primes.push_back(p);

  bool any_unresolved = false;
  std::ostringstream detail;
  for (long p : rep.candidate_primes) {
    const IntVector phi = poly::cyclotomic(static_cast<unsigned>(p * m));
    bool excluded = false;
    long tested = 0;
    for (long q : rep.probe_primes) {
      if ((p * m) % q == 0) continue;
      Integer size;
      mpz_ui_pow_ui(size.get_mpz_t(), q, n);
      if (size > kProbeBudget) continue;
      ++tested;
      if (!has_root_mod(o, phi, q)) {
        excluded = true;
        detail << "Phi_" << p * m << " has no root mod " << q << "; ";
        break;
      }
    }
    if (excluded) continue;
    if (tested > 0) {
      detail << "Phi_" << p * m << " has a root modulo every probe prime; ";
      rep.verdict = MuVerdict::Failed;
    } else {
      detail << "Phi_" << p * m << " could not be probed; ";
      any_unresolved = true;
    }
  }
  if (rep.verdict != MuVerdict::Failed && any_unresolved) rep.verdict = MuVerdict::NecessaryConditionsPass;
  rep.detail = detail.str();
  return rep;
}

std::size_t real_places(const IntVector& f) { return poly::count_real_roots(poly::from_integers(f)); }

OrderElement admissibility_modulus(const Order& o) {
  OrderElement d = o.one();
  for (int i = 1; i < o.m(); ++i) {
    if (o.m() % i != 0) continue;
    d = o.mul(d, o.sub(o.one(), o.zeta_power(i).column(0)));
  }
  return d;
}

bool ideal_membership(const Order& o, const OrderElement& x, const OrderElement& a) {
  if (o.is_zero(a)) throw Error(ErrorKind::ZeroDivisor, "ideal generated by zero");
  Lattice l = Lattice::from_basis(o.mul_matrix(a));
  return lattice_membership(x, l).has_value();
}

bool is_admissible(const Order& o, const Integer& c) {
  if (c <= 1) return false;
  return ideal_membership(o, o.from_integer(c), admissibility_modulus(o));
}

QuotientRing::QuotientRing(OrderPtr o, std::int64_t c) : order_(std::move(o)), c_(c) {
  if (c_ < 2) throw Error(ErrorKind::DimensionMismatch, "quotient modulus must exceed 1");
  Integer size;
  mpz_ui_pow_ui(size.get_mpz_t(), static_cast<unsigned long>(c_), static_cast<unsigned long>(order_->n()));
  if (size > kMaxQuotientSize) throw Error(ErrorKind::TooLarge, "R/cR has " + size.get_str() + " elements");
  size_ = size.get_ui();
}

OrderElement QuotientRing::reduce(const OrderElement& x) const {
  OrderElement out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mod_floor(x[i], c_);
  return out;
}

std::uint64_t QuotientRing::index(const OrderElement& r) const {
  std::uint64_t idx = 0;
  for (const auto& a : r) {
    if (a < 0 || a >= c_) throw Error(ErrorKind::DimensionMismatch, "element is not a box representative");
    idx = idx * static_cast<std::uint64_t>(c_) + a.get_ui();
  }
  return idx;
}

OrderElement QuotientRing::element(std::uint64_t idx) const {
  const int n = order_->n();
  OrderElement out(n);
  for (int i = n - 1; i >= 0; --i) {
    out[i] = static_cast<unsigned long>(idx % static_cast<std::uint64_t>(c_));
    idx /= static_cast<std::uint64_t>(c_);
  }
  return out;
}

std::vector<OrderElement> QuotientRing::representatives() const {
  std::vector<OrderElement> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(element(i));
  return out;
}

QuotientRing quotient(OrderPtr o, std::int64_t c) { return QuotientRing(std::move(o), c); }

IdealQuotient::IdealQuotient(const Order& o, const OrderElement& a) : n_(o.n()) {
  if (o.is_zero(a)) throw Error(ErrorKind::ZeroDivisor, "quotient by zero");
  init(o.mul_matrix(a));
}

IdealQuotient::IdealQuotient(int n, const IntMatrix& generators) : n_(n) { init(generators); }

void IdealQuotient::init(const IntMatrix& generators) {
  if (static_cast<int>(generators.rows()) != n_) throw Error(ErrorKind::DimensionMismatch, "generator length");
  HermiteForm hf = hnf(generators);
  if (hf.rank != static_cast<std::size_t>(n_)) throw Error(ErrorKind::ZeroDivisor, "ideal lattice is not of full rank");
  h_ = hf.h.columns(0, n_);
  Integer total = 1;
  for (int k = 0; k < n_; ++k) total *= h_(k, k);
  if (total > kMaxQuotientSize) throw Error(ErrorKind::TooLarge, "quotient has " + total.get_str() + " elements");
  size_ = total.get_ui();
  diag_.resize(n_);
  for (int k = 0; k < n_; ++k) diag_[k] = h_(k, k).get_ui();
}

OrderElement IdealQuotient::reduce(const OrderElement& x) const {
  if (static_cast<int>(x.size()) != n_) throw Error(ErrorKind::DimensionMismatch, "element length");
  OrderElement r = x;
  for (int k = 0; k < n_; ++k) {
    Integer q = floor_div(r[k], h_(k, k));
    if (q == 0) continue;
    for (int i = k; i < n_; ++i) r[i] -= q * h_(i, k);
  }
  return r;
}

bool IdealQuotient::contains(const OrderElement& x) const {
  for (const auto& e : reduce(x))
    if (e != 0) return false;
  return true;
}

std::uint64_t IdealQuotient::index(const OrderElement& r) const {
  std::uint64_t idx = 0;
  for (int k = 0; k < n_; ++k) idx = idx * diag_[k] + r[k].get_ui();
  return idx;
}

OrderElement IdealQuotient::element(std::uint64_t idx) const {
  OrderElement out(n_);
  for (int k = n_ - 1; k >= 0; --k) {
    out[k] = static_cast<unsigned long>(idx % diag_[k]);
    idx /= diag_[k];
  }
  return out;
}

}  // namespace ringkt
