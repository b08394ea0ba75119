#pragma once

// The group R x| mu: arithmetic, conjugacy classes of finite cyclic
// subgroups, and the symbolic K_0 labels built on top of them.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringkt/number_field.hpp"

namespace ringkt {

struct SemidirectElement {
  OrderElement b;
  long i = 0;  // rotation zeta^i, kept in [0, m)
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

/// Conjugacy class of the finite cyclic subgroup <(b, zeta^i)>. The rotation
/// is normalized to i = gcd(i, m), so the subgroup has order m / i, and b is
/// the lexicographically least point of its zeta-orbit in R/(1 - zeta^i)R.
struct FiniteSubgroupLabel {
  long i = 0;
  OrderElement b;
  friend bool operator==(const FiniteSubgroupLabel&, const FiniteSubgroupLabel&) = default;
  friend bool operator<(const FiniteSubgroupLabel& x, const FiniteSubgroupLabel& y) {
    if (x.i != y.i) return x.i < y.i;
    return x.b < y.b;
  }
};

std::string to_string(const FiniteSubgroupLabel& l);

/// Basis labels of the K_0 model: [1], rational infinite classes, classes of
/// maximal finite subgroups other than mu with a nontrivial character, and
/// the nontrivial spectral classes of mu itself.
struct K0Label {
  enum class Kind { Unit = 0, Inf = 1, Fin = 2, Mu = 3 };
  Kind kind = Kind::Unit;
  int k = 0;      // Inf: exterior degree
  long idx = 0;   // Inf: index within degree k
  FiniteSubgroupLabel group;  // Fin
  long chi = 0;   // Fin, Mu

  static K0Label unit() { return {}; }
  static K0Label inf(int k, long idx) {
    K0Label l;
    l.kind = Kind::Inf;
    l.k = k;
    l.idx = idx;
    return l;
  }
  static K0Label fin(FiniteSubgroupLabel g, long chi) {
    K0Label l;
    l.kind = Kind::Fin;
    l.group = std::move(g);
    l.chi = chi;
    return l;
  }
  static K0Label mu(long chi) {
    K0Label l;
    l.kind = Kind::Mu;
    l.chi = chi;
    return l;
  }

  friend bool operator==(const K0Label&, const K0Label&) = default;
  friend bool operator<(const K0Label& x, const K0Label& y);
};

std::string to_string(const K0Label& l);

/// Finite-support rational combination of labels; zero coefficients are dropped.
class K0Vector {
 public:
  void add(const K0Label& l, const Rational& coef);
  void add(const K0Vector& v, const Rational& scale = 1);
  Rational coefficient(const K0Label& l) const;
  const std::map<K0Label, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  friend bool operator==(const K0Vector&, const K0Vector&) = default;

 private:
  std::map<K0Label, Rational> terms_;
};

std::string to_string(const K0Vector& v);

class SemidirectGroup {
 public:
  explicit SemidirectGroup(OrderPtr o);

  const Order& order() const { return *order_; }
  const OrderPtr& order_ptr() const { return order_; }
  long m() const { return order_->m(); }

  SemidirectElement identity() const;
  SemidirectElement multiply(const SemidirectElement& x, const SemidirectElement& y) const;
  SemidirectElement inverse(const SemidirectElement& x) const;
  SemidirectElement power(const SemidirectElement& x, long k) const;
  /// by * x * by^{-1}
  SemidirectElement conjugate(const SemidirectElement& x, const SemidirectElement& by) const;
  /// nullopt for infinite order.
  std::optional<long> element_order(const SemidirectElement& x) const;

  /// Rotation indices r | m with r < m, ascending.
  const std::vector<long>& rotation_divisors() const { return divisors_; }
  /// R/(1 - zeta^r)R for r in rotation_divisors().
  const IdealQuotient& rotation_quotient(long r) const;

  /// Label of <(b, zeta^i)>; zeta^i must not be 1.
  FiniteSubgroupLabel conjugacy_label(const OrderElement& b, long i) const;

  struct Normalized {
    FiniteSubgroupLabel label;
    long exponent;  // g^exponent is conjugate to the label's generator
  };
  Normalized normalize(const SemidirectElement& g) const;

  FiniteSubgroupLabel mu_label() const;
  long subgroup_order(const FiniteSubgroupLabel& l) const { return m() / l.i; }

  /// Containment test by enumeration of candidate overgroup generators.
  bool is_maximal(const FiniteSubgroupLabel& l) const;
  /// The list M, sorted; the class of mu comes first.
  const std::vector<FiniteSubgroupLabel>& maximal_classes() const { return maximal_; }
  /// Every label of a nontrivial finite cyclic subgroup, sorted.
  const std::vector<FiniteSubgroupLabel>& all_labels() const { return labels_; }

  struct Location {
    std::size_t maximal;  // index into maximal_classes()
    long power;           // label generator ~ h^power, h the maximal generator
  };
  Location locate_in_maximal(const FiniteSubgroupLabel& l) const;

  /// Characters s of the maximal class restricting to character t of <h^power>.
  std::vector<long> restricting_characters(const Location& loc, long t) const;
  /// Same, as a K0Vector; the trivial character of a maximal class is
  /// rewritten as [1] minus the nontrivial ones.
  K0Vector expand_character(const Location& loc, long t) const;

 private:
  FiniteSubgroupLabel canonical(long r, const OrderElement& b) const;

  OrderPtr order_;
  std::vector<long> divisors_;
  std::map<long, IdealQuotient> quotients_;
  std::vector<FiniteSubgroupLabel> labels_;
  std::vector<FiniteSubgroupLabel> maximal_;
  std::map<FiniteSubgroupLabel, Location> locations_;
};

std::vector<FiniteSubgroupLabel> enumerate_maximal_classes(const SemidirectGroup& g);

/// Inverse of a modulo n (n >= 1); throws InvariantViolation if not coprime.
long inverse_mod(long a, long n);

}  // namespace ringkt
