#include "ringkt/semidirect.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ringkt {

namespace {
constexpr std::uint64_t kMaxLabels = 2'000'000;

long mod_pos(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}
}  // namespace

long inverse_mod(long a, long n) {
  if (n == 1) return 0;
  Integer inv;
  Integer aa = mod_pos(a, n), nn = n;
  if (mpz_invert(inv.get_mpz_t(), aa.get_mpz_t(), nn.get_mpz_t()) == 0)
    throw Error(ErrorKind::InvariantViolation, std::to_string(a) + " is not invertible mod " + std::to_string(n));
  return inv.get_si();
}

std::string to_string(const FiniteSubgroupLabel& l) {
  std::ostringstream os;
  os << '(' << l.i << ",[";
  for (std::size_t k = 0; k < l.b.size(); ++k) os << (k ? "," : "") << l.b[k].get_str();
  os << "])";
  return os.str();
}

bool operator<(const K0Label& x, const K0Label& y) {
  if (x.kind != y.kind) return x.kind < y.kind;
  switch (x.kind) {
    case K0Label::Kind::Unit: return false;
    case K0Label::Kind::Inf:
      if (x.k != y.k) return x.k < y.k;
      return x.idx < y.idx;
    case K0Label::Kind::Fin:
      if (!(x.group == y.group)) return x.group < y.group;
      return x.chi < y.chi;
    case K0Label::Kind::Mu: return x.chi < y.chi;
  }
  return false;
}

std::string to_string(const K0Label& l) {
  switch (l.kind) {
    case K0Label::Kind::Unit: return "[1]";
    case K0Label::Kind::Inf: return "Inf(" + std::to_string(l.k) + "," + std::to_string(l.idx) + ")";
    case K0Label::Kind::Fin: return "Fin(" + to_string(l.group) + "," + std::to_string(l.chi) + ")";
    case K0Label::Kind::Mu: return "Mu(" + std::to_string(l.chi) + ")";
  }
  return "?";
}

void K0Vector::add(const K0Label& l, const Rational& coef) {
  if (coef == 0) return;
  auto [it, inserted] = terms_.emplace(l, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  }
}

void K0Vector::add(const K0Vector& v, const Rational& scale) {
  for (const auto& [l, c] : v.terms_) add(l, c * scale);
}

Rational K0Vector::coefficient(const K0Label& l) const {
  auto it = terms_.find(l);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string to_string(const K0Vector& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : v.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << to_string(l);
  }
  return os.str();
}

SemidirectGroup::SemidirectGroup(OrderPtr o) : order_(std::move(o)) {
  const long m = order_->m();
  const int n = order_->n();
  for (long r = 1; r < m; ++r)
    if (m % r == 0) divisors_.push_back(r);
  std::uint64_t total = 0;
  for (long r : divisors_) {
    IntMatrix gens = IntMatrix::identity(n) - order_->zeta_power(r);
    auto [it, ok] = quotients_.emplace(r, IdealQuotient(n, gens));
    total += it->second.size();
  }
  if (total > kMaxLabels) throw Error(ErrorKind::TooLarge, "too many finite-subgroup candidates");

  std::set<FiniteSubgroupLabel> seen;
  for (long r : divisors_) {
    const IdealQuotient& q = quotients_.at(r);
    for (std::uint64_t idx = 0; idx < q.size(); ++idx) seen.insert(canonical(r, q.element(idx)));
  }
  labels_.assign(seen.begin(), seen.end());
  for (const auto& l : labels_)
    if (is_maximal(l)) maximal_.push_back(l);
  if (!divisors_.empty()) ensure(!maximal_.empty() && maximal_.front() == mu_label(), "mu is maximal and listed first");

  for (std::size_t h = 0; h < maximal_.size(); ++h) {
    const auto& top = maximal_[h];
    const SemidirectElement gen{top.b, top.i};
    for (long r : divisors_) {
      if (r % top.i != 0) continue;
      const long k = r / top.i;
      SemidirectElement p = power(gen, k);
      FiniteSubgroupLabel l = canonical(r, p.b);
      auto [it, inserted] = locations_.emplace(l, Location{h, k});
      if (!inserted)
        ensure(it->second.maximal == h, "finite subgroup " + to_string(l) + " lies in two maximal classes");
    }
  }
  for (const auto& l : labels_)
    ensure(locations_.count(l) == 1, "finite subgroup " + to_string(l) + " lies in no maximal class");
}

const IdealQuotient& SemidirectGroup::rotation_quotient(long r) const {
  auto it = quotients_.find(r);
  if (it == quotients_.end()) throw Error(ErrorKind::DimensionMismatch, "rotation index must be a proper divisor of m");
  return it->second;
}

SemidirectElement SemidirectGroup::identity() const { return {order_->zero(), 0}; }

SemidirectElement SemidirectGroup::multiply(const SemidirectElement& x, const SemidirectElement& y) const {
  return {order_->add(x.b, order_->zeta_times(x.i, y.b)), mod_pos(x.i + y.i, m())};
}

SemidirectElement SemidirectGroup::inverse(const SemidirectElement& x) const {
  // (b, z)^{-1} = (-z^{-1} b, z^{-1})
  const long inv = mod_pos(-x.i, m());
  return {order_->neg(order_->zeta_times(inv, x.b)), inv};
}

SemidirectElement SemidirectGroup::power(const SemidirectElement& x, long k) const {
  if (k < 0) return power(inverse(x), -k);
  return {order_->geometric_sum(x.i, k) * x.b, mod_pos(x.i * k, m())};
}

SemidirectElement SemidirectGroup::conjugate(const SemidirectElement& x, const SemidirectElement& by) const {
  return multiply(multiply(by, x), inverse(by));
}

std::optional<long> SemidirectGroup::element_order(const SemidirectElement& x) const {
  const long i = mod_pos(x.i, m());
  if (i == 0) {
    if (order_->is_zero(x.b)) return 1;
    return std::nullopt;
  }
  const long ord = m() / std::gcd(i, m());
  ensure(order_->is_zero(power(x, ord).b), "geometric sum vanishes at the full period");
  return ord;
}

FiniteSubgroupLabel SemidirectGroup::canonical(long r, const OrderElement& b) const {
  const IdealQuotient& q = rotation_quotient(r);
  OrderElement x = q.reduce(b);
  OrderElement best = x;
  for (long t = 1; t < m(); ++t) {
    x = q.reduce(order_->zeta_times(1, x));
    if (x < best) best = x;
  }
  return {r, best};
}

SemidirectGroup::Normalized SemidirectGroup::normalize(const SemidirectElement& g) const {
  const long i = mod_pos(g.i, m());
  if (i == 0) throw Error(ErrorKind::InfiniteOrderGenerator, "rotation part is trivial");
  const long r = std::gcd(i, m());
  const long e = inverse_mod(i / r, m() / r);
  SemidirectElement p = power(g, e);
  ensure(p.i == r, "normalized rotation");
  return {canonical(r, p.b), e};
}

FiniteSubgroupLabel SemidirectGroup::conjugacy_label(const OrderElement& b, long i) const {
  return normalize({b, i}).label;
}

FiniteSubgroupLabel SemidirectGroup::mu_label() const { return {1, order_->zero()}; }

bool SemidirectGroup::is_maximal(const FiniteSubgroupLabel& l) const {
  for (long r : divisors_) {
    if (r >= l.i || l.i % r != 0) continue;
    const IdealQuotient& q = rotation_quotient(r);
    const long k = l.i / r;
    for (std::uint64_t idx = 0; idx < q.size(); ++idx) {
      SemidirectElement p = power({q.element(idx), r}, k);
      if (canonical(l.i, p.b) == l) return false;
    }
  }
  return true;
}

SemidirectGroup::Location SemidirectGroup::locate_in_maximal(const FiniteSubgroupLabel& l) const {
  auto it = locations_.find(l);
  if (it == locations_.end()) throw Error(ErrorKind::InvariantViolation, "unknown label " + to_string(l));
  return it->second;
}

std::vector<long> SemidirectGroup::restricting_characters(const Location& loc, long t) const {
  const long big = subgroup_order(maximal_.at(loc.maximal));
  const long g = std::gcd(loc.power, big);
  const long small = big / g;
  const long target = mod_pos(t * inverse_mod(loc.power / g, small), small);
  std::vector<long> out;
  for (long s = 0; s < big; ++s)
    if (s % small == target) out.push_back(s);
  return out;
}

K0Vector SemidirectGroup::expand_character(const Location& loc, long t) const {
  const FiniteSubgroupLabel& top = maximal_.at(loc.maximal);
  const long big = subgroup_order(top);
  const bool is_mu = loc.maximal == 0;
  auto label = [&](long s) { return is_mu ? K0Label::mu(s) : K0Label::fin(top, s); };
  K0Vector out;
  for (long s : restricting_characters(loc, t)) {
    if (s != 0) {
      out.add(label(s), 1);
      continue;
    }
    out.add(K0Label::unit(), 1);
    for (long u = 1; u < big; ++u) out.add(label(u), -1);
  }
  return out;
}

std::vector<FiniteSubgroupLabel> enumerate_maximal_classes(const SemidirectGroup& g) { return g.maximal_classes(); }

}  // namespace ringkt
