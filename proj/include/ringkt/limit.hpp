#pragma once

// Direct limits along the admissible system, Pimsner-Voiculescu bookkeeping
// and the graded K-theory formulas assembled from them.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ringkt/eta.hpp"

namespace ringkt {

/// Z/2-graded group, each degree Q^q + Z^z + torsion.
struct GradedGroup {
  struct Degree {
    std::size_t q_rank = 0;
    std::size_t z_rank = 0;
    IntVector torsion;  // each > 1, divisibility chain
    friend bool operator==(const Degree&, const Degree&) = default;
    std::string to_string() const;
  };
  std::array<Degree, 2> deg{};

  static GradedGroup make(std::size_t q0, std::size_t z0, std::size_t q1 = 0, std::size_t z1 = 0);
  friend bool operator==(const GradedGroup&, const GradedGroup&) = default;
  std::string to_string() const;  // "(Q + Z^4, 0)"
};

/// Upper-triangular shape with diagonal entries c^e (or 0, written nullopt).
struct TelescopeCertificate {
  Integer parameter;
  std::vector<std::optional<int>> exponents;
};

struct TelescopeSystem {
  IntMatrix a;
  std::optional<TelescopeCertificate> certificate;

  /// Derives a certificate for the given parameter c > 1 if A is upper
  /// triangular with diagonal entries in {0} + {c^e}; nullopt otherwise.
  static std::optional<TelescopeCertificate> infer_certificate(const IntMatrix& a, const Integer& c);
};

/// Empty string if the certificate holds for A, otherwise the reason.
std::string check_certificate(const IntMatrix& a, const TelescopeCertificate& cert);

/// Degree-0 colimit of Z^r -> Z^r -> ... along A, with c running over all
/// admissible values. A certified system gets the exact closed form: Q per
/// c^e (e >= 1), Z per c^0, nothing for nilpotent directions. Without a
/// certificate only the rational stable rank rank(A^r) is available, and only
/// when invert_all_primes is set; otherwise UncertifiedIntegralRequest.
GradedGroup telescope_colimit(const TelescopeSystem& sys, bool invert_all_primes);

struct SubalgebraK {
  GradedGroup group;
  EtaMatrix eta;
  TelescopeSystem system;       // full raw-basis matrix, order Unit, Inf, Fin, Mu
  std::vector<K0Label> labels;  // row/column labels of system.a
};

/// Closed form Q^{sum d_k - delta} + Z^delta + Z^{m-1} in degree 0, cross
/// checked against the telescope of the computed eta_c.
SubalgebraK subalgebra_k_detailed(const SemidirectGroup& g, std::int64_t c);
GradedGroup subalgebra_k(const SemidirectGroup& g, std::int64_t c);

/// Action of beta on each degree: a rational diagonal on the Q summands and
/// an integer matrix on the Z summands.
struct PvAction {
  std::array<RatVector, 2> q_diag;
  std::array<IntMatrix, 2> z_block;
  static PvAction identity(const GradedGroup& k);
};

/// beta_c on (Q^a + Z^b, 0): c^{-n} on the unit direction, c^{-(n-k)} on
/// the infinite classes with k < n, identity on Z^b.
PvAction betac_action(const Order& o, const Integer& c);

/// One Pimsner-Voiculescu step: K0' = coker_0 + ker_1, K1' = ker_0 + coker_1
/// for id - beta. Throws ShapeMismatch on torsion input or size mismatch.
GradedGroup pv_step(const GradedGroup& k, const PvAction& beta);

/// j identity steps starting from k0.
GradedGroup gamma_tower(const GradedGroup& k0, int j);

struct KFormula {
  std::size_t coefficient_rank = 0;  // Z^r tensor Lambda(Gamma); r = 1 prints as Lambda(Gamma)
  std::string text;
  std::vector<GradedGroup> truncations;  // depth 0..j
  friend bool operator==(const KFormula&, const KFormula&) = default;
};

KFormula lambda_formula(std::size_t coefficient_rank, int depth);

struct KTheoryReport {
  std::string target;  // "ring-cstar" or "group-cstar"
  std::int64_t c = 0;
  int depth = 0;
  IntVector inf_ranks;
  int delta = 0;
  std::size_t real_places = 0;
  std::optional<SubalgebraK> subalgebra;
  std::optional<GradedGroup> pv;
  std::vector<GradedGroup> tower;     // pipeline, depth 0..j
  std::optional<KFormula> roots_branch;   // only when m > 2
  KFormula real_branch;
  KFormula final_formula;
};

/// Higher roots of unity branch (m > 2): Z^m tensor Lambda(Gamma).
std::optional<KFormula> roots_of_unity_branch(const Order& o, int depth);
/// Real-place parity branch.
KFormula real_place_branch(const Order& o, int depth);

KTheoryReport full_k_theory(const SemidirectGroup& g, std::int64_t c, int depth);
/// K_*(C*(K x| K^x)) = Z^m tensor Lambda(Gamma), for every number field.
KTheoryReport group_algebra_k(const SemidirectGroup& g, int depth);

}  // namespace ringkt
