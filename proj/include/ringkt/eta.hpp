#pragma once

// The structure map eta_c on the symbolic K_0 basis, computed from the cycle
// structure of affine permutations of R/cR.

#include <cstdint>
#include <map>
#include <vector>

#include "ringkt/semidirect.hpp"

namespace ringkt {

/// dim (Lambda^k R_Q)^mu for k = 0..n, by averaging elementary symmetric
/// functions of the eigenvalues of Z^j over j.
IntVector invariant_dimensions(const Order& o);
/// d_k for even k, entry k/2 (so d_0 first).
IntVector inf_ranks(const Order& o);
/// (1/m) sum_j det(1 - Z^j).
Rational molien_alternating(const Order& o);
/// 1 iff the degree is even.
int delta(const Order& o);

using CycleCensus = std::map<std::uint64_t, std::uint64_t>;  // length -> count

/// d -> red(zeta^{-i} (d - b)) on the box representatives of R/cR.
class AffinePermutation {
 public:
  AffinePermutation(OrderPtr o, std::int64_t c, const OrderElement& b, long i);

  const QuotientRing& quotient() const { return quotient_; }
  std::uint64_t size() const { return image_.size(); }
  std::uint64_t operator()(std::uint64_t idx) const { return image_[idx]; }
  const std::vector<std::uint32_t>& image() const { return image_; }
  bool is_bijection() const;
  CycleCensus census() const;
  /// Cycles in order of their least point, each starting there.
  std::vector<std::vector<std::uint64_t>> cycles() const;

 private:
  QuotientRing quotient_;
  std::vector<std::uint32_t> image_;
};

AffinePermutation affine_permutation(OrderPtr o, std::int64_t c, const OrderElement& b, long i);

/// Character-independent part of a cycle computation for one generator.
struct CycleAnalysis {
  std::int64_t c = 0;
  SemidirectElement generator;
  long generator_order = 0;
  CycleCensus census;
  std::uint64_t unit_cycles = 0;  // cycles whose diagonal entry is trivial

  struct Landing {
    std::uint64_t start;  // least point of the cycle
    std::uint64_t length;
    SemidirectElement diagonal;  // (b~, zeta^{i*length})
    SemidirectGroup::Normalized normalized;
    SemidirectGroup::Location location;
  };
  std::vector<Landing> landings;
};

/// Walks every cycle of the affine permutation of g = (b, zeta^i) on R/cR.
/// No admissibility requirement; throws InfiniteOrderGenerator if zeta^i = 1.
CycleAnalysis analyze_cycles(const SemidirectGroup& g, std::int64_t c, const SemidirectElement& gen);

/// eta_c applied to [p_chi(u^b s_{zeta^i})], from a finished cycle analysis.
K0Vector classes_from_cycles(const SemidirectGroup& g, const CycleAnalysis& a, long chi);

/// Checks admissibility and the character index, then runs the two steps above.
K0Vector cycle_classes(const SemidirectGroup& g, std::int64_t c, const OrderElement& b, long i, long chi);

struct EtaMatrix {
  std::int64_t c = 0;
  int n = 0;
  std::vector<K0Label> basis;  // Unit, Fin..., Mu...
  IntMatrix finite_block;      // column j = eta_c(basis[j])
  std::vector<K0Label> inf_labels;
  std::vector<int> inf_exponents;  // diagonal entry c^e for each Inf label

  std::size_t index_of(const K0Label& l) const;
  K0Vector column(std::size_t j) const;
};

/// {Unit} + Fin labels of non-mu maximal classes + Mu labels.
std::vector<K0Label> finite_basis(const SemidirectGroup& g);

/// Assembles eta_c and verifies its shape; throws NotAdmissible.
EtaMatrix eta_matrix(const SemidirectGroup& g, std::int64_t c);

}  // namespace ringkt
