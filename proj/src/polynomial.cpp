#include "ringkt/polynomial.hpp"

#include <algorithm>

namespace ringkt::poly {

Poly from_integers(const IntVector& c) {
  Poly p(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) p[i] = Rational(c[i]);
  trim(p);
  return p;
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[d] == 0) --d;
  return d;
}

bool is_zero(const Poly& p) { return degree(p) < 0; }

Poly add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, scale(b, -1)); }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Poly scale(const Poly& a, const Rational& s) {
  Poly out = a;
  for (auto& x : out) x *= s;
  trim(out);
  return out;
}

Poly derivative(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = a[i] * static_cast<long>(i);
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const int db = degree(b);
  if (db < 0) throw Error(ErrorKind::ZeroDivisor, "polynomial division by zero");
  Poly r = a;
  trim(r);
  Poly q;
  const Rational lead = b[db];
  while (degree(r) >= db) {
    const int dr = degree(r);
    Rational f = r[dr] / lead;
    const std::size_t shift = static_cast<std::size_t>(dr - db);
    if (q.size() <= shift) q.resize(shift + 1);
    q[shift] += f;
    for (int i = 0; i <= db; ++i) r[shift + i] -= f * b[i];
    trim(r);
  }
  trim(q);
  return {q, r};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!is_zero(b)) {
    Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (is_zero(a)) return {};
  return scale(a, 1 / a.back());
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

int sign(const Rational& x) { return sgn(x); }

// Sign of p at +infinity / -infinity.
int sign_at_inf(const Poly& p, bool positive) {
  const int d = degree(p);
  if (d < 0) return 0;
  int s = sign(p[d]);
  if (!positive && d % 2 == 1) s = -s;
  return s;
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

std::size_t count_real_roots(const Poly& f) {
  Poly p0 = f;
  trim(p0);
  if (degree(p0) <= 0) return 0;
  std::vector<Poly> seq{p0, derivative(p0)};
  while (!is_zero(seq.back())) {
    Poly r = mod(seq[seq.size() - 2], seq.back());
    if (is_zero(r)) break;
    seq.push_back(scale(r, -1));
  }
  std::vector<int> neg, pos;
  for (const auto& p : seq) {
    neg.push_back(sign_at_inf(p, false));
    pos.push_back(sign_at_inf(p, true));
  }
  return variations(neg) - variations(pos);
}

IntVector cyclotomic(unsigned n) {
  if (n == 0) throw Error(ErrorKind::DimensionMismatch, "cyclotomic(0)");
  // x^n - 1 divided by Phi_d for every proper divisor d
  Poly num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = divmod(num, from_integers(cyclotomic(d)));
    ensure(is_zero(r), "cyclotomic division is exact");
    num = std::move(q);
  }
  IntVector out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    ensure(num[i].get_den() == 1, "cyclotomic coefficients are integral");
    out[i] = num[i].get_num();
  }
  return out;
}

}  // namespace ringkt::poly
