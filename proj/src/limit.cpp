#include "ringkt/limit.hpp"

#include <algorithm>
#include <sstream>

namespace ringkt {

std::string GradedGroup::Degree::to_string() const {
  std::vector<std::string> parts;
  if (q_rank == 1) parts.push_back("Q");
  if (q_rank > 1) parts.push_back("Q^" + std::to_string(q_rank));
  if (z_rank == 1) parts.push_back("Z");
  if (z_rank > 1) parts.push_back("Z^" + std::to_string(z_rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

GradedGroup GradedGroup::make(std::size_t q0, std::size_t z0, std::size_t q1, std::size_t z1) {
  GradedGroup g;
  g.deg[0].q_rank = q0;
  g.deg[0].z_rank = z0;
  g.deg[1].q_rank = q1;
  g.deg[1].z_rank = z1;
  return g;
}

std::string GradedGroup::to_string() const { return "(" + deg[0].to_string() + ", " + deg[1].to_string() + ")"; }

namespace {

Integer ipow(const Integer& c, int e) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

bool upper_triangular(const IntMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a(i, j) != 0) return false;
  return true;
}

}  // namespace

std::string check_certificate(const IntMatrix& a, const TelescopeCertificate& cert) {
  const std::size_t r = a.rows();
  if (a.cols() != r) return "matrix is not square";
  if (cert.exponents.size() != r) return "certificate length differs from matrix size";
  if (cert.parameter < 2) return "parameter must exceed 1";
  if (!upper_triangular(a)) return "matrix is not upper triangular";
  for (std::size_t i = 0; i < r; ++i) {
    const auto& e = cert.exponents[i];
    if (e && *e < 0) return "negative exponent";
    const Integer want = e ? ipow(cert.parameter, *e) : Integer(0);
    if (a(i, i) != want) return "diagonal entry " + std::to_string(i) + " is not " + want.get_str();
  }
  IntMatrix ar = power(a, r);
  for (std::size_t i = 0; i < r; ++i) {
    if (cert.exponents[i] != 0) continue;
    for (std::size_t j = 0; j < r; ++j)
      if (cert.exponents[j] && *cert.exponents[j] >= 1 && ar(i, j) != 0)
        return "a c^0 row of A^r reaches a c^e column (row " + std::to_string(i) + ", column " + std::to_string(j) + ")";
  }
  return "";
}

std::optional<TelescopeCertificate> TelescopeSystem::infer_certificate(const IntMatrix& a, const Integer& c) {
  if (a.rows() != a.cols() || c < 2 || !upper_triangular(a)) return std::nullopt;
  TelescopeCertificate cert{c, {}};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Integer& d = a(i, i);
    if (d == 0) {
      cert.exponents.push_back(std::nullopt);
      continue;
    }
    if (d < 0) return std::nullopt;
    Integer x = d;
    int e = 0;
    while (x % c == 0) {
      x /= c;
      ++e;
    }
    if (x != 1) return std::nullopt;
    cert.exponents.push_back(e);
  }
  if (!check_certificate(a, cert).empty()) return std::nullopt;
  return cert;
}

GradedGroup telescope_colimit(const TelescopeSystem& sys, bool invert_all_primes) {
  const IntMatrix& a = sys.a;
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "telescope matrix must be square");
  const std::size_t stable = rank(power(a, a.rows()));
  GradedGroup out;
  if (!sys.certificate) {
    if (!invert_all_primes)
      throw Error(ErrorKind::UncertifiedIntegralRequest, "exact Z-structure needs a triangular certificate");
    out.deg[0].q_rank = stable;
    return out;
  }
  std::string why = check_certificate(a, *sys.certificate);
  if (!why.empty()) throw Error(ErrorKind::ShapeMismatch, "certificate rejected: " + why);
  for (const auto& e : sys.certificate->exponents) {
    if (!e) continue;
    if (*e >= 1) ++out.deg[0].q_rank;
    else ++out.deg[0].z_rank;
  }
  ensure(out.deg[0].q_rank + out.deg[0].z_rank == stable, "closed form matches the rational stable rank");
  return out;
}

SubalgebraK subalgebra_k_detailed(const SemidirectGroup& g, std::int64_t c) {
  const Order& o = g.order();
  SubalgebraK s;
  s.eta = eta_matrix(g, c);
  const EtaMatrix& e = s.eta;

  // Unit, Inf (k ascending, so exponents descending), Fin, Mu
  std::vector<std::optional<int>> exps;
  s.labels.push_back(K0Label::unit());
  exps.push_back(o.n());
  std::vector<std::size_t> inf_order(e.inf_labels.size());
  for (std::size_t i = 0; i < inf_order.size(); ++i) inf_order[i] = i;
  std::stable_sort(inf_order.begin(), inf_order.end(),
                   [&](std::size_t x, std::size_t y) { return e.inf_exponents[x] > e.inf_exponents[y]; });
  for (std::size_t i : inf_order) {
    s.labels.push_back(e.inf_labels[i]);
    exps.push_back(e.inf_exponents[i]);
  }
  for (std::size_t j = 1; j < e.basis.size(); ++j) {
    s.labels.push_back(e.basis[j]);
    exps.push_back(e.basis[j].kind == K0Label::Kind::Mu ? std::optional<int>(0) : std::nullopt);
  }

  const std::size_t R = s.labels.size();
  IntMatrix a(R, R);
  auto finite_pos = [&](std::size_t fb) { return fb == 0 ? std::size_t{0} : fb + inf_order.size(); };
  for (std::size_t i = 0; i < e.basis.size(); ++i)
    for (std::size_t j = 0; j < e.basis.size(); ++j) a(finite_pos(i), finite_pos(j)) = e.finite_block(i, j);
  for (std::size_t t = 0; t < inf_order.size(); ++t) a(1 + t, 1 + t) = ipow(Integer(c), e.inf_exponents[inf_order[t]]);

  s.system.a = std::move(a);
  s.system.certificate = TelescopeCertificate{Integer(c), exps};
  std::string why = check_certificate(s.system.a, *s.system.certificate);
  ensure(why.empty(), "eta_c is certified triangular: " + why);
  GradedGroup tele = telescope_colimit(s.system, false);

  IntVector d = inf_ranks(o);
  Integer total = 0;
  for (const auto& x : d) total += x;
  const int dl = delta(o);
  s.group = GradedGroup::make(total.get_ui() - dl, static_cast<std::size_t>(dl + o.m() - 1));
  ensure(s.group == tele, "closed form " + s.group.to_string() + " matches telescope " + tele.to_string());
  return s;
}

GradedGroup subalgebra_k(const SemidirectGroup& g, std::int64_t c) { return subalgebra_k_detailed(g, c).group; }

PvAction PvAction::identity(const GradedGroup& k) {
  PvAction p;
  for (int d = 0; d < 2; ++d) {
    p.q_diag[d].assign(k.deg[d].q_rank, Rational(1));
    p.z_block[d] = IntMatrix::identity(k.deg[d].z_rank);
  }
  return p;
}

PvAction betac_action(const Order& o, const Integer& c) {
  const int n = o.n();
  IntVector d = invariant_dimensions(o);
  PvAction p;
  auto inv_pow = [&](int e) { return Rational(1) / Rational(ipow(c, e)); };
  p.q_diag[0].push_back(inv_pow(n));
  for (int k = 2; k < n; k += 2)
    for (long i = 0; i < d[k].get_si(); ++i) p.q_diag[0].push_back(inv_pow(n - k));
  p.z_block[0] = IntMatrix::identity(static_cast<std::size_t>(delta(o) + o.m() - 1));
  p.z_block[1] = IntMatrix(0, 0);
  return p;
}

GradedGroup pv_step(const GradedGroup& k, const PvAction& beta) {
  struct Parts {
    std::size_t q_fixed = 0;  // Q summands where id - beta vanishes
    std::size_t ker_z = 0;
    std::size_t coker_z = 0;
    IntVector coker_torsion;
  };
  std::array<Parts, 2> parts;
  for (int d = 0; d < 2; ++d) {
    const auto& deg = k.deg[d];
    if (!deg.torsion.empty()) throw Error(ErrorKind::ShapeMismatch, "pv_step input has torsion");
    if (beta.q_diag[d].size() != deg.q_rank)
      throw Error(ErrorKind::ShapeMismatch, "rational block of beta has the wrong size in degree " + std::to_string(d));
    const IntMatrix& b = beta.z_block[d];
    if (b.rows() != deg.z_rank || b.cols() != deg.z_rank)
      throw Error(ErrorKind::ShapeMismatch, "integral block of beta has the wrong size in degree " + std::to_string(d));
    for (const auto& x : beta.q_diag[d])
      if (x == 1) ++parts[d].q_fixed;
    if (deg.z_rank > 0) {
      IntMatrix m = IntMatrix::identity(deg.z_rank) - b;
      AbelianGroupPresentation ck = cokernel(m);
      parts[d].coker_z = ck.free_rank();
      parts[d].coker_torsion = ck.torsion();
      parts[d].ker_z = deg.z_rank - rank(m);
    }
  }
  GradedGroup out;
  out.deg[0].q_rank = parts[0].q_fixed + parts[1].q_fixed;
  out.deg[0].z_rank = parts[0].coker_z + parts[1].ker_z;
  out.deg[0].torsion = parts[0].coker_torsion;
  out.deg[1].q_rank = parts[0].q_fixed + parts[1].q_fixed;
  out.deg[1].z_rank = parts[0].ker_z + parts[1].coker_z;
  out.deg[1].torsion = parts[1].coker_torsion;
  return out;
}

GradedGroup gamma_tower(const GradedGroup& k0, int j) {
  if (j < 0) throw Error(ErrorKind::ShapeMismatch, "tower depth must be nonnegative");
  GradedGroup k = k0;
  for (int t = 0; t < j; ++t) k = pv_step(k, PvAction::identity(k));
  return k;
}

KFormula lambda_formula(std::size_t coefficient_rank, int depth) {
  KFormula f;
  f.coefficient_rank = coefficient_rank;
  f.text = coefficient_rank == 1 ? "Λ(Γ)" : "Z^" + std::to_string(coefficient_rank) + " ⊗ Λ(Γ)";
  for (int t = 0; t <= depth; ++t) {
    const std::size_t r = coefficient_rank << t;
    f.truncations.push_back(GradedGroup::make(0, r, 0, r));
  }
  return f;
}

std::optional<KFormula> roots_of_unity_branch(const Order& o, int depth) {
  if (o.m() <= 2) return std::nullopt;
  return lambda_formula(static_cast<std::size_t>(o.m()), depth);
}

KFormula real_place_branch(const Order& o, int depth) {
  const std::size_t rp = real_places(o.spec().poly);
  return lambda_formula(rp % 2 == 0 ? static_cast<std::size_t>(o.m()) : 1, depth);
}

KTheoryReport full_k_theory(const SemidirectGroup& g, std::int64_t c, int depth) {
  if (depth < 0) throw Error(ErrorKind::ShapeMismatch, "tower depth must be nonnegative");
  const Order& o = g.order();
  KTheoryReport r;
  r.target = "ring-cstar";
  r.c = c;
  r.depth = depth;
  r.inf_ranks = inf_ranks(o);
  r.delta = delta(o);
  r.real_places = real_places(o.spec().poly);
  r.subalgebra = subalgebra_k_detailed(g, c);
  r.pv = pv_step(r.subalgebra->group, betac_action(o, Integer(c)));
  for (int t = 0; t <= depth; ++t) r.tower.push_back(gamma_tower(*r.pv, t));
  r.roots_branch = roots_of_unity_branch(o, depth);
  r.real_branch = real_place_branch(o, depth);
  r.final_formula = r.roots_branch ? *r.roots_branch : r.real_branch;
  ensure(r.tower == r.final_formula.truncations,
         "pipeline truncations agree with " + r.final_formula.text);
  return r;
}

KTheoryReport group_algebra_k(const SemidirectGroup& g, int depth) {
  if (depth < 0) throw Error(ErrorKind::ShapeMismatch, "tower depth must be nonnegative");
  const Order& o = g.order();
  KTheoryReport r;
  r.target = "group-cstar";
  r.depth = depth;
  r.inf_ranks = inf_ranks(o);
  r.delta = delta(o);
  r.real_places = real_places(o.spec().poly);
  r.final_formula = lambda_formula(static_cast<std::size_t>(o.m()), depth);
  r.real_branch = r.final_formula;
  r.tower = r.final_formula.truncations;
  return r;
}

}  // namespace ringkt
