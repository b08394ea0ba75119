#pragma once

// Rings of integers given by an explicit integral basis, their quotients and
// the root-of-unity data attached to them.
//
// Elements are integer coordinate vectors in the basis w_1 = 1, w_2, ..., w_n.
// Multiplication-by-a matrices follow the column convention: column j holds
// the coordinates of a * w_j.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ringkt/linalg.hpp"

namespace ringkt {

struct FieldSpec {
  std::string name;
  int degree = 0;
  IntVector poly;                          // ascending, monic
  std::vector<RatVector> integral_basis;   // row i = w_{i+1} in the power basis
  RatVector zeta;                          // power-basis coordinates
  int m = 0;                               // asserted order of zeta
};

/// Reads a spec from TOML or JSON text (format picked from the first
/// non-blank character: '{' means JSON).
FieldSpec parse_field_spec(const std::string& text);
FieldSpec load_field_file(const std::string& path);
Rational parse_rational(const std::string& s);

using OrderElement = IntVector;

class Order {
 public:
  /// Validates the input; see ErrorKind for the failure modes.
  static std::shared_ptr<const Order> from_spec(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  int n() const { return n_; }
  int m() const { return m_; }

  /// Coordinates of w_i * w_j.
  const OrderElement& structure(int i, int j) const { return structure_[i * n_ + j]; }
  /// Multiplication by zeta^k (k taken mod m).
  const IntMatrix& zeta_power(long k) const;
  const IntMatrix& Z() const { return zeta_power(1); }
  /// I + Z^i + ... + Z^{i(j-1)}.
  IntMatrix geometric_sum(long i, long j) const;

  OrderElement zero() const { return OrderElement(n_); }
  OrderElement one() const;
  OrderElement from_integer(const Integer& a) const;
  OrderElement zeta() const;

  OrderElement add(const OrderElement& x, const OrderElement& y) const;
  OrderElement sub(const OrderElement& x, const OrderElement& y) const;
  OrderElement mul(const OrderElement& x, const OrderElement& y) const;
  OrderElement neg(const OrderElement& x) const;
  OrderElement zeta_times(long k, const OrderElement& x) const;
  bool is_zero(const OrderElement& x) const;

  IntMatrix mul_matrix(const OrderElement& a) const;
  Integer norm(const OrderElement& a) const;
  Integer trace(const OrderElement& a) const;
  /// det of the trace form Tr(w_i w_j).
  Integer discriminant() const;

  RatVector to_power_basis(const OrderElement& x) const;
  /// nullopt when the power-basis vector is not in the order.
  std::optional<OrderElement> from_power_basis(const RatVector& v) const;
  /// x / a if it lies in the order.
  std::optional<OrderElement> divide(const OrderElement& x, const OrderElement& a) const;

  std::string format(const OrderElement& x) const;

 private:
  Order() = default;
  FieldSpec spec_;
  int n_ = 0;
  int m_ = 0;
  std::vector<OrderElement> structure_;
  RatMatrix basis_;      // rows: w_i in the power basis
  RatMatrix basis_inv_;
  std::vector<IntMatrix> zeta_powers_;
};

using OrderPtr = std::shared_ptr<const Order>;

OrderPtr load_field(const FieldSpec& spec);

enum class MuVerdict { Verified, NecessaryConditionsPass, Failed };
const char* to_string(MuVerdict v);

struct MuReport {
  MuVerdict verdict;
  std::vector<long> probe_primes;
  std::vector<long> candidate_primes;  // p with phi(pm) | n
  std::string detail;
};

/// Three-valued check that zeta generates all roots of unity of the field.
MuReport verify_mu_maximality(const Order& o);

std::size_t real_places(const IntVector& f);

/// prod_{i | m, 1 <= i < m} (1 - zeta^i).
OrderElement admissibility_modulus(const Order& o);
bool is_admissible(const Order& o, const Integer& c);
bool ideal_membership(const Order& o, const OrderElement& x, const OrderElement& a);

/// R/cR for a rational integer c > 1 with the coordinate box [0, c)^n as
/// representatives. Index of (a_1..a_n) is sum a_k c^{n-k}: the first
/// coordinate is most significant, so index order is lexicographic order.
class QuotientRing {
 public:
  QuotientRing(OrderPtr o, std::int64_t c);

  const Order& order() const { return *order_; }
  std::int64_t modulus() const { return c_; }
  std::uint64_t size() const { return size_; }

  OrderElement reduce(const OrderElement& x) const;
  std::uint64_t index(const OrderElement& reduced) const;
  OrderElement element(std::uint64_t idx) const;
  std::vector<OrderElement> representatives() const;

 private:
  OrderPtr order_;
  std::int64_t c_;
  std::uint64_t size_;
};

/// Largest number of points a QuotientRing may enumerate.
inline constexpr std::uint64_t kMaxQuotientSize = 50'000'000;

QuotientRing quotient(OrderPtr o, std::int64_t c);

/// R/aR for a nonzero a, with representatives in the box of the lower
/// triangular Hermite basis of aR: coordinate k ranges over [0, h_kk).
class IdealQuotient {
 public:
  IdealQuotient(const Order& o, const OrderElement& a);
  /// Same, for the lattice spanned by the columns of a nonsingular matrix.
  IdealQuotient(int n, const IntMatrix& generators);

  std::uint64_t size() const { return size_; }
  OrderElement reduce(const OrderElement& x) const;
  bool contains(const OrderElement& x) const;
  std::uint64_t index(const OrderElement& reduced) const;
  OrderElement element(std::uint64_t idx) const;
  const IntMatrix& hermite_basis() const { return h_; }

 private:
  void init(const IntMatrix& generators);
  int n_;
  IntMatrix h_;
  std::vector<std::uint64_t> diag_;
  std::uint64_t size_ = 0;
};

}  // namespace ringkt
