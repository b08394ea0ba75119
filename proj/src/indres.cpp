#include "ringkt/indres.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>

namespace ringkt {

namespace {

long mulmod(long a, long b, long p) { return static_cast<long>((static_cast<__int128>(a) * b) % p); }

long powmod(long a, long e, long p) {
  long r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

long invmod(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw Error(ErrorKind::InvariantViolation, "inverse of zero mod p");
  return powmod(a, p - 2, p);
}

long modp(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long signed_residue(long a, long p) { return a > p / 2 ? a - p : a; }

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using ModMatrix = std::vector<std::vector<long>>;  // row-major

// Basis of the kernel of a (rows x cols), as columns.
ModMatrix kernel_mod(ModMatrix a, std::size_t cols, long p) {
  const std::size_t rows = a.size();
  std::vector<int> pivot_col_of_row;
  std::vector<int> is_pivot(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    long inv = invmod(a[r][c], p);
    for (auto& x : a[r]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      long f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = modp(a[i][j] - mulmod(f, a[r][j], p), p);
    }
    is_pivot[c] = static_cast<int>(r);
    ++r;
  }
  ModMatrix basis;  // each entry a column vector
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free] >= 0) continue;
    std::vector<long> v(cols, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < cols; ++c)
      if (is_pivot[c] >= 0) v[c] = modp(-a[is_pivot[c]][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Coefficients of det(xI - r), ascending, by Faddeev-LeVerrier over F_p.
std::vector<long> charpoly_mod(const ModMatrix& r, long p) {
  const std::size_t n = r.size();
  std::vector<long> c(n + 1, 0);
  c[n] = 1;
  ModMatrix mk(n, std::vector<long>(n, 0));
  auto matmul = [&](const ModMatrix& x, const ModMatrix& y) {
    ModMatrix out(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (x[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) out[i][j] = (out[i][j] + mulmod(x[i][k], y[k][j], p)) % p;
      }
    return out;
  };
  for (std::size_t k = 1; k <= n; ++k) {
    mk = matmul(r, mk);
    for (std::size_t i = 0; i < n; ++i) mk[i][i] = (mk[i][i] + c[n - k + 1]) % p;
    ModMatrix am = matmul(r, mk);
    long tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr = (tr + am[i][i]) % p;
    c[n - k] = modp(-mulmod(tr, invmod(static_cast<long>(k), p), p), p);
  }
  return c;
}

long eval_mod(const std::vector<long>& poly, long x, long p) {
  long acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (mulmod(acc, x, p) + *it) % p;
  return acc;
}

std::vector<int> elements_of(ElementSet s) {
  std::vector<int> out;
  for (int g = 0; g < 64; ++g)
    if (s >> g & 1ULL) out.push_back(g);
  return out;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

Perm cycle_perm(int points, const std::vector<int>& cyc) {
  Perm p(points);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return p;
}

}  // namespace

FiniteGroup FiniteGroup::from_permutations(std::string name, const std::vector<Perm>& generators) {
  if (generators.empty()) throw Error(ErrorKind::UnsupportedGroup, "no generators");
  const std::size_t pts = generators[0].size();
  for (const auto& g : generators) {
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    bool ok = g.size() == pts;
    for (std::size_t i = 0; ok && i < pts; ++i) ok = sorted[i] == static_cast<int>(i);
    if (!ok) throw Error(ErrorKind::UnsupportedGroup, "generator is not a permutation of a common point set");
  }
  FiniteGroup G;
  G.name_ = std::move(name);
  G.generators_ = generators;
  Perm id(pts);
  std::iota(id.begin(), id.end(), 0);
  std::map<Perm, int> index{{id, 0}};
  G.perms_.push_back(id);
  G.words_.push_back({});
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < generators.size(); ++s) {
      Perm y = compose(G.perms_[x], generators[s]);
      if (index.count(y)) continue;
      if (G.perms_.size() >= 64) throw Error(ErrorKind::UnsupportedGroup, "group order exceeds 64");
      index.emplace(y, static_cast<int>(G.perms_.size()));
      G.perms_.push_back(y);
      auto w = G.words_[x];
      w.push_back(static_cast<int>(s));
      G.words_.push_back(std::move(w));
      queue.push_back(static_cast<int>(G.perms_.size()) - 1);
    }
  }
  const int n = G.order();
  G.table_.resize(static_cast<std::size_t>(n) * n);
  G.inverse_.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = index.at(compose(G.perms_[a], G.perms_[b]));
      G.table_[a * n + b] = c;
      if (c == 0) G.inverse_[a] = b;
    }
  return G;
}

FiniteGroup FiniteGroup::catalog(const std::string& name) {
  auto number = [&](std::size_t from) -> int {
    if (name.size() <= from) return -1;
    for (std::size_t i = from; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
    return std::stoi(name.substr(from));
  };
  if (name == "S3") return from_permutations(name, {cycle_perm(3, {0, 1}), cycle_perm(3, {0, 1, 2})});
  if (name == "S4") return from_permutations(name, {cycle_perm(4, {0, 1}), cycle_perm(4, {0, 1, 2, 3})});
  if (name == "A4") return from_permutations(name, {cycle_perm(4, {0, 1, 2}), compose(cycle_perm(4, {0, 1}), cycle_perm(4, {2, 3}))});
  if (name == "V4") return from_permutations(name, {compose(cycle_perm(4, {0, 1}), cycle_perm(4, {2, 3})),
                                                    compose(cycle_perm(4, {0, 2}), cycle_perm(4, {1, 3}))});
  if (name == "Q8") {
    // left multiplication on {+-1, +-i, +-j, +-k}; index = 4*sign + unit
    static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    auto left = [&](int u) {
      Perm p(8);
      for (int x = 0; x < 8; ++x) {
        int s = x / 4, v = x % 4;
        p[x] = 4 * ((s + sign_mul[u][v]) % 2) + unit_mul[u][v];
      }
      return p;
    };
    return from_permutations(name, {left(1), left(2)});
  }
  if (name.size() >= 2 && name[0] == 'C') {
    int n = number(1);
    if (n >= 1 && n <= 24) {
      std::vector<int> cyc(n);
      std::iota(cyc.begin(), cyc.end(), 0);
      return from_permutations(name, {n == 1 ? Perm{0} : cycle_perm(n, cyc)});
    }
  }
  if (name.size() >= 2 && name[0] == 'D') {
    int n = number(1);
    if (n >= 3 && n <= 12) {
      std::vector<int> cyc(n);
      std::iota(cyc.begin(), cyc.end(), 0);
      Perm refl(n);
      for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
      return from_permutations(name, {cycle_perm(n, cyc), refl});
    }
  }
  throw Error(ErrorKind::UnsupportedGroup, "unknown catalog group '" + name + "'");
}

std::vector<std::string> FiniteGroup::catalog_names(int max_order) {
  std::vector<std::string> out;
  for (int n = 1; n <= 24 && n <= max_order; ++n) out.push_back("C" + std::to_string(n));
  for (int n = 3; n <= 12 && 2 * n <= max_order; ++n) out.push_back("D" + std::to_string(n));
  const std::pair<const char*, int> fixed[] = {{"V4", 4}, {"S3", 6}, {"Q8", 8}, {"A4", 12}, {"S4", 24}};
  for (const auto& [nm, ord] : fixed)
    if (ord <= max_order) out.push_back(nm);
  return out;
}

int FiniteGroup::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

ElementSet FiniteGroup::all() const { return order() == 64 ? ~0ULL : ((1ULL << order()) - 1); }

bool FiniteGroup::is_subgroup(ElementSet s) const {
  if ((s & ~all()) != 0 || !(s & 1ULL)) return false;
  for (int a : elements_of(s))
    for (int b : elements_of(s))
      if (!(s >> mul(a, inv(b)) & 1ULL)) return false;
  return true;
}

ElementSet FiniteGroup::generated_by(const std::vector<int>& elems) const {
  ElementSet s = 1ULL;
  for (int e : elems) s |= 1ULL << e;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a : elements_of(s))
      for (int b : elements_of(s)) {
        int c = mul(a, b);
        if (!(s >> c & 1ULL)) {
          s |= 1ULL << c;
          grew = true;
        }
      }
  }
  return s;
}

std::vector<ElementSet> FiniteGroup::subgroups() const {
  std::set<ElementSet> found;
  for (int g = 0; g < order(); ++g) found.insert(generated_by({g}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElementSet> cur(found.begin(), found.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        ElementSet joined = cur[i] | cur[j];
        if (found.count(joined)) continue;
        ElementSet s = generated_by(elements_of(joined));
        if (found.insert(s).second) grew = true;
      }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

ElementSet FiniteGroup::conjugate_set(ElementSet s, int g) const {
  ElementSet out = 0;
  for (int x : elements_of(s)) out |= 1ULL << mul(mul(g, x), inv(g));
  return out;
}

long character_prime(const FiniteGroup& g) {
  const long e = g.exponent();
  const long floor = std::max<long>(1000, 4L * g.order() * g.order());
  long p = (floor / e + 1) * e + 1;
  while (!is_prime(p)) p += e;
  return p;
}

CharacterTable::CharacterTable(const FiniteGroup& g, ElementSet h, long p) : g_(&g), h_(h), p_(p) {
  if (!g.is_subgroup(h)) throw Error(ErrorKind::NotASubgroup, "element set is not a subgroup of " + g.name());
  elements_ = elements_of(h);
  const int order = static_cast<int>(elements_.size());
  class_of_.assign(g.order(), -1);
  for (int x : elements_) {
    if (class_of_[x] >= 0) continue;
    std::vector<int> cls;
    const int idx = static_cast<int>(classes_.size());
    for (int y : elements_) {
      int z = g.mul(g.mul(y, x), g.inv(y));
      if (class_of_[z] < 0) {
        class_of_[z] = idx;
        cls.push_back(z);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }
  const int r = class_count();
  std::vector<long> size(r);
  for (int i = 0; i < r; ++i) size[i] = static_cast<long>(classes_[i].size());

  // a[i][j][k] = #{x in C_i : x^{-1} g_k in C_j}
  std::vector<ModMatrix> amat(r, ModMatrix(r, std::vector<long>(r, 0)));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      const int gk = classes_[k][0];
      for (int x : classes_[i]) {
        int j = class_of_[g.mul(g.inv(x), gk)];
        ensure(j >= 0, "class product stays in the subgroup");
        amat[i][j][k] += 1;
      }
    }

  // Split F_p^r into common eigenlines of the class matrices.
  std::vector<ModMatrix> spaces;  // each: list of basis column vectors
  {
    ModMatrix whole;
    for (int k = 0; k < r; ++k) {
      std::vector<long> e(r, 0);
      e[k] = 1;
      whole.push_back(e);
    }
    spaces.push_back(whole);
  }
  for (int i = 1; i < r; ++i) {
    std::vector<ModMatrix> next;
    for (auto& v : spaces) {
      const std::size_t d = v.size();
      if (d == 1) {
        next.push_back(v);
        continue;
      }
      // w_t = A_i v_t
      ModMatrix w(d, std::vector<long>(r, 0));
      for (std::size_t t = 0; t < d; ++t)
        for (int j = 0; j < r; ++j) {
          long s = 0;
          for (int k = 0; k < r; ++k) s = (s + mulmod(amat[i][j][k], v[t][k], p)) % p;
          w[t][j] = s;
        }
      // Solve v * R = w on d independent coordinates.
      ModMatrix aug(r, std::vector<long>(2 * d, 0));
      for (int j = 0; j < r; ++j)
        for (std::size_t t = 0; t < d; ++t) {
          aug[j][t] = v[t][j];
          aug[j][d + t] = w[t][j];
        }
      std::size_t row = 0;
      for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = row;
        while (piv < static_cast<std::size_t>(r) && aug[piv][c] == 0) ++piv;
        ensure(piv < static_cast<std::size_t>(r), "eigenspace basis is independent");
        std::swap(aug[piv], aug[row]);
        long inv = invmod(aug[row][c], p);
        for (auto& x : aug[row]) x = mulmod(x, inv, p);
        for (int j = 0; j < r; ++j) {
          if (j == static_cast<int>(row) || aug[j][c] == 0) continue;
          long f = aug[j][c];
          for (std::size_t t = 0; t < 2 * d; ++t) aug[j][t] = modp(aug[j][t] - mulmod(f, aug[row][t], p), p);
        }
        ++row;
      }
      ModMatrix rm(d, std::vector<long>(d));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) rm[a][b] = aug[a][d + b];
      // rm[a][b]: coefficient of v_a in w_b; eigenvectors are kernels of rm - lambda
      std::vector<long> cp = charpoly_mod(rm, p);
      std::vector<long> roots;
      for (long x = 0; x < p; ++x)
        if (eval_mod(cp, x, p) == 0) roots.push_back(x);
      if (roots.size() == 1) {
        next.push_back(v);
        continue;
      }
      std::size_t covered = 0;
      for (long lam : roots) {
        ModMatrix shifted = rm;
        for (std::size_t a = 0; a < d; ++a) shifted[a][a] = modp(shifted[a][a] - lam, p);
        ModMatrix ker = kernel_mod(shifted, d, p);
        ModMatrix sub;
        for (const auto& coeffs : ker) {
          std::vector<long> vec(r, 0);
          for (std::size_t t = 0; t < d; ++t)
            for (int j = 0; j < r; ++j) vec[j] = (vec[j] + mulmod(coeffs[t], v[t][j], p)) % p;
          sub.push_back(std::move(vec));
        }
        covered += sub.size();
        next.push_back(std::move(sub));
      }
      ensure(covered == d, "class matrix is diagonalizable over F_p");
    }
    spaces = std::move(next);
  }
  ensure(static_cast<int>(spaces.size()) == r, "class algebra splits into r characters");

  std::vector<int> inverse_class(r);
  for (int k = 0; k < r; ++k) inverse_class[k] = class_of_[g.inv(classes_[k][0])];

  for (auto& sp : spaces) {
    std::vector<long> w = sp[0];
    ensure(w[0] != 0, "central character is nonzero at the identity");
    long inv0 = invmod(w[0], p);
    for (auto& x : w) x = mulmod(x, inv0, p);
    long s = 0;
    for (int k = 0; k < r; ++k) s = (s + mulmod(mulmod(w[k], w[inverse_class[k]], p), invmod(size[k], p), p)) % p;
    const long deg2 = mulmod(order % p, invmod(s, p), p);
    int deg = 0;
    for (int dd = 1; dd * dd <= order; ++dd)
      if (dd * dd % p == deg2) deg = dd;
    ensure(deg > 0, "character degree recovered");
    std::vector<long> chi(r);
    for (int k = 0; k < r; ++k) chi[k] = mulmod(mulmod(w[k], deg, p), invmod(size[k], p), p);
    irr_.push_back(std::move(chi));
    degrees_.push_back(deg);
  }
  std::vector<std::size_t> idx(irr_.size());
  std::iota(idx.begin(), idx.end(), 0);
  auto trivial = [&](std::size_t a) {
    return std::all_of(irr_[a].begin(), irr_[a].end(), [](long x) { return x == 1; });
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (trivial(a) != trivial(b)) return trivial(a);
    if (degrees_[a] != degrees_[b]) return degrees_[a] < degrees_[b];
    return irr_[a] < irr_[b];
  });
  std::vector<std::vector<long>> irr2;
  std::vector<int> deg2;
  for (auto i : idx) {
    irr2.push_back(irr_[i]);
    deg2.push_back(degrees_[i]);
  }
  irr_ = std::move(irr2);
  degrees_ = std::move(deg2);

  int sumsq = 0;
  for (int d : degrees_) sumsq += d * d;
  ensure(sumsq == order, "sum of squared degrees is the group order");
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      std::vector<long> f = irr_[a];
      ensure(multiplicity(f, b) == (a == b ? 1 : 0), "row orthogonality");
    }
}

long CharacterTable::multiplicity(const std::vector<long>& f, int k) const {
  const long p = p_;
  long s = 0;
  for (int c = 0; c < class_count(); ++c) {
    const int cinv = class_of_[g_->inv(classes_[c][0])];
    s = (s + mulmod(mulmod(static_cast<long>(classes_[c].size()), f[c], p), irr_[k][cinv], p)) % p;
  }
  s = mulmod(s, invmod(subgroup_order(), p), p);
  return signed_residue(s, p);
}

IntVector CharacterTable::decompose(const std::vector<long>& f) const {
  IntVector out(irr_.size());
  for (int k = 0; k < static_cast<int>(irr_.size()); ++k) out[k] = multiplicity(f, k);
  ensure(character(out) == f, "class function is a virtual character");
  return out;
}

std::vector<long> CharacterTable::character(const IntVector& mult) const {
  std::vector<long> f(class_count(), 0);
  for (std::size_t k = 0; k < mult.size(); ++k) {
    const long m = modp(mpz_class(mult[k] % p_).get_si(), p_);
    for (int c = 0; c < class_count(); ++c) f[c] = (f[c] + mulmod(m, irr_[k][c], p_)) % p_;
  }
  return f;
}

RepresentationContext::RepresentationContext(FiniteGroup g) : g_(std::move(g)), p_(character_prime(g_)) {}

const CharacterTable& RepresentationContext::table(ElementSet h) {
  auto it = tables_.find(h);
  if (it == tables_.end()) it = tables_.emplace(h, std::make_unique<CharacterTable>(g_, h, p_)).first;
  return *it->second;
}

RepRingElement irreducible(RepresentationContext& ctx, ElementSet h, int k) {
  const auto& t = ctx.table(h);
  RepRingElement x{h, IntVector(t.irreducibles().size())};
  x.multiplicities.at(k) = 1;
  return x;
}

RepRingElement regular_representation(RepresentationContext& ctx, ElementSet h) {
  const auto& t = ctx.table(h);
  RepRingElement x{h, IntVector(t.irreducibles().size())};
  for (std::size_t k = 0; k < x.multiplicities.size(); ++k) x.multiplicities[k] = t.degrees()[k];
  return x;
}

namespace {
void require_subgroup_of(const FiniteGroup& g, ElementSet inner, ElementSet outer) {
  if ((inner & ~outer) != 0 || !g.is_subgroup(inner) || !g.is_subgroup(outer))
    throw Error(ErrorKind::NotASubgroup, "not a subgroup of the target group");
}
}  // namespace

RepRingElement restrict(RepresentationContext& ctx, const RepRingElement& x, ElementSet h) {
  require_subgroup_of(ctx.group(), h, x.group);
  const auto& tg = ctx.table(x.group);
  const auto& th = ctx.table(h);
  std::vector<long> f = tg.character(x.multiplicities);
  std::vector<long> fh(th.class_count());
  for (int c = 0; c < th.class_count(); ++c) fh[c] = tg.value(f, th.classes()[c][0]);
  return {h, th.decompose(fh)};
}

RepRingElement induce(RepresentationContext& ctx, const RepRingElement& x, ElementSet g) {
  require_subgroup_of(ctx.group(), x.group, g);
  const FiniteGroup& G = ctx.group();
  const long p = ctx.prime();
  const auto& th = ctx.table(x.group);
  const auto& tg = ctx.table(g);
  std::vector<long> f = th.character(x.multiplicities);
  const std::vector<int> gel = elements_of(g);
  std::vector<long> fg(tg.class_count());
  for (int c = 0; c < tg.class_count(); ++c) {
    const int y = tg.classes()[c][0];
    long s = 0;
    for (int z : gel) {
      const int w = G.mul(G.mul(z, y), G.inv(z));
      if (th.class_of(w) >= 0) s = (s + th.value(f, w)) % p;
    }
    fg[c] = mulmod(s, invmod(th.subgroup_order(), p), p);
  }
  return {g, tg.decompose(fg)};
}

RepRingElement conjugate_transport(RepresentationContext& ctx, const RepRingElement& x, int gamma) {
  const FiniteGroup& G = ctx.group();
  const ElementSet target = G.conjugate_set(x.group, gamma);
  const auto& ts = ctx.table(x.group);
  const auto& tt = ctx.table(target);
  std::vector<long> f = ts.character(x.multiplicities);
  std::vector<long> ft(tt.class_count());
  for (int c = 0; c < tt.class_count(); ++c) {
    const int y = tt.classes()[c][0];
    ft[c] = ts.value(f, G.mul(G.mul(G.inv(gamma), y), gamma));
  }
  return {target, tt.decompose(ft)};
}

Integer pairing(const RepRingElement& x, const RepRingElement& y) {
  if (x.group != y.group) throw Error(ErrorKind::DimensionMismatch, "pairing across different groups");
  Integer s = 0;
  for (std::size_t k = 0; k < x.multiplicities.size(); ++k) s += x.multiplicities[k] * y.multiplicities[k];
  return s;
}

std::vector<int> double_coset_representatives(const FiniteGroup& g, ElementSet h, ElementSet k) {
  ElementSet seen = 0;
  std::vector<int> reps;
  for (int gamma = 0; gamma < g.order(); ++gamma) {
    if (seen >> gamma & 1ULL) continue;
    reps.push_back(gamma);
    for (int a : elements_of(h))
      for (int b : elements_of(k)) seen |= 1ULL << g.mul(g.mul(a, gamma), b);
  }
  return reps;
}

DoubleCosetResult double_coset_check(RepresentationContext& ctx, ElementSet h, ElementSet k) {
  const FiniteGroup& G = ctx.group();
  const ElementSet all = G.all();
  require_subgroup_of(G, h, all);
  require_subgroup_of(G, k, all);
  DoubleCosetResult res;
  const std::vector<int> reps = double_coset_representatives(G, h, k);
  res.double_cosets = reps.size();
  const auto& tk = ctx.table(k);
  for (int t = 0; t < static_cast<int>(tk.irreducibles().size()); ++t) {
    RepRingElement psi = irreducible(ctx, k, t);
    RepRingElement lhs = restrict(ctx, induce(ctx, psi, all), h);
    IntVector rhs(lhs.multiplicities.size());
    for (int gamma : reps) {
      const ElementSet l = k & G.conjugate_set(h, G.inv(gamma));
      RepRingElement piece = induce(ctx, conjugate_transport(ctx, restrict(ctx, psi, l), gamma), h);
      for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] += piece.multiplicities[i];
    }
    ++res.irreducibles_checked;
    if (rhs != lhs.multiplicities) {
      res.ok = false;
      res.detail += "irreducible " + std::to_string(t) + " of K differs; ";
    }
  }
  return res;
}

bool frobenius_check(RepresentationContext& ctx, ElementSet h, ElementSet g) {
  const auto& th = ctx.table(h);
  const auto& tg = ctx.table(g);
  for (int a = 0; a < static_cast<int>(th.irreducibles().size()); ++a)
    for (int b = 0; b < static_cast<int>(tg.irreducibles().size()); ++b) {
      RepRingElement x = irreducible(ctx, h, a), y = irreducible(ctx, g, b);
      if (pairing(induce(ctx, x, g), y) != pairing(x, restrict(ctx, y, h))) return false;
    }
  return true;
}

bool inner_conjugation_check(RepresentationContext& ctx) {
  const ElementSet all = ctx.group().all();
  const auto& t = ctx.table(all);
  for (int gamma = 0; gamma < ctx.group().order(); ++gamma)
    for (int k = 0; k < static_cast<int>(t.irreducibles().size()); ++k) {
      RepRingElement x = irreducible(ctx, all, k);
      if (!(conjugate_transport(ctx, x, gamma) == x)) return false;
    }
  return true;
}

std::vector<IntMatrix> representation_matrices(const FiniteGroup& f, const std::vector<IntMatrix>& action) {
  if (action.size() != f.generators().size())
    throw Error(ErrorKind::NotARepresentation, "one matrix per generator is required");
  const std::size_t r = action.empty() ? 0 : action[0].rows();
  for (const auto& a : action)
    if (a.rows() != r || a.cols() != r) throw Error(ErrorKind::NotARepresentation, "action matrices must be square of equal size");
  std::vector<IntMatrix> rho(f.order());
  for (int g = 0; g < f.order(); ++g) {
    IntMatrix m = IntMatrix::identity(r);
    for (int s : f.word(g)) m = m * action[s];
    rho[g] = std::move(m);
  }
  for (int a = 0; a < f.order(); ++a)
    for (int b = 0; b < f.order(); ++b)
      if (!(rho[a] * rho[b] == rho[f.mul(a, b)]))
        throw Error(ErrorKind::NotARepresentation, "matrices violate the group law");
  // the words only use generators through their BFS spelling; check each one directly
  for (std::size_t s = 0; s < action.size(); ++s) {
    int id = -1;
    for (int g = 0; g < f.order(); ++g)
      if (f.permutation(g) == f.generators()[s]) id = g;
    if (!(rho[id] == action[s])) throw Error(ErrorKind::NotARepresentation, "generator matrix inconsistent with the group law");
  }
  return rho;
}

NormCheck norm_annihilation_check(const FiniteGroup& f, const std::vector<IntMatrix>& action) {
  std::vector<IntMatrix> rho = representation_matrices(f, action);
  const std::size_t r = rho[0].rows();
  const std::size_t gens = action.size();
  const IntMatrix id = IntMatrix::identity(r);

  IntMatrix aug(r, r * gens);    // columns span I = <(rho(s) - 1) v>
  IntMatrix stack(r * gens, r);  // kernel = invariants
  for (std::size_t s = 0; s < gens; ++s) {
    IntMatrix d = action[s] - id;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        aug(i, s * r + j) = d(i, j);
        stack(s * r + i, j) = d(i, j);
      }
  }
  IntMatrix norm(r, r);
  for (const auto& m : rho) norm = norm + m;

  NormCheck out;
  const Integer order = f.order();
  auto bounded = [&](const AbelianGroupPresentation& a) {
    if (a.free_rank() != 0) return false;
    for (const auto& t : a.torsion())
      if (order % t != 0) return false;
    return true;
  };

  // ker(N bar) = ker N / I
  IntMatrix kerN = integer_kernel(norm);
  if (kerN.cols() == 0) {
    out.kernel = AbelianGroupPresentation(0, IntMatrix());
  } else {
    Lattice kl = Lattice::from_basis(kerN);
    IntMatrix coords(kerN.cols(), aug.cols());
    for (std::size_t j = 0; j < aug.cols(); ++j) {
      auto c = lattice_membership(aug.column(j), kl);
      ensure(c.has_value(), "augmentation lies in the kernel of the norm");
      coords.set_column(j, *c);
    }
    out.kernel = cokernel(coords);
  }

  // coker(N bar) = M^F / N(M)
  IntMatrix inv = integer_kernel(stack);
  if (inv.cols() == 0) {
    out.cokernel = AbelianGroupPresentation(0, IntMatrix());
  } else {
    Lattice il = Lattice::from_basis(inv);
    IntMatrix coords(inv.cols(), r);
    for (std::size_t j = 0; j < r; ++j) {
      auto c = lattice_membership(norm.column(j), il);
      ensure(c.has_value(), "norm lands in the invariants");
      coords.set_column(j, *c);
    }
    out.cokernel = cokernel(coords);
  }
  out.kernel_ok = bounded(out.kernel);
  out.cokernel_ok = bounded(out.cokernel);
  return out;
}

}  // namespace ringkt
