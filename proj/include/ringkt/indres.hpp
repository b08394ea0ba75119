#pragma once

// Induction and restriction on representation rings of small finite groups.
//
// Characters are handled modulo a prime p = 1 (mod exponent of G) chosen
// per ambient group; every multiplicity is an exact small integer recovered
// from its residue. Subgroups are element subsets of the ambient group and
// all of them share its prime, so character labels are consistent.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ringkt/linalg.hpp"

namespace ringkt {

using Perm = std::vector<int>;
using ElementSet = std::uint64_t;  // bit g set <=> element g present

class FiniteGroup {
 public:
  /// Closure of the generators; element 0 is the identity.
  static FiniteGroup from_permutations(std::string name, const std::vector<Perm>& generators);
  /// C<n> (n <= 24), D<n> (order 2n, 3 <= n <= 12), S3, S4, A4, Q8, V4.
  static FiniteGroup catalog(const std::string& name);
  static std::vector<std::string> catalog_names(int max_order);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(perms_.size()); }
  int mul(int a, int b) const { return table_[a * order() + b]; }
  int inv(int a) const { return inverse_[a]; }
  int element_order(int a) const;
  int exponent() const;
  const std::vector<Perm>& generators() const { return generators_; }
  /// Generator indices spelling each element as a product (empty for identity).
  const std::vector<int>& word(int a) const { return words_[a]; }
  const Perm& permutation(int a) const { return perms_[a]; }

  ElementSet all() const;
  bool is_subgroup(ElementSet s) const;
  ElementSet generated_by(const std::vector<int>& elems) const;
  /// Every subgroup, sorted by (size, mask).
  std::vector<ElementSet> subgroups() const;
  /// g s g^{-1}
  ElementSet conjugate_set(ElementSet s, int g) const;

 private:
  std::string name_;
  std::vector<Perm> generators_;
  std::vector<Perm> perms_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> words_;
};

/// Class functions and irreducible characters of a subgroup H of G, mod p.
class CharacterTable {
 public:
  CharacterTable(const FiniteGroup& g, ElementSet h, long p);

  long prime() const { return p_; }
  ElementSet subgroup() const { return h_; }
  int subgroup_order() const { return static_cast<int>(elements_.size()); }
  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  /// class index of an ambient element in H, -1 outside H
  int class_of(int g) const { return class_of_[g]; }
  /// irreducible characters, trivial first; values per class, in [0, p)
  const std::vector<std::vector<long>>& irreducibles() const { return irr_; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// <f, chi_k> recovered as a signed integer.
  long multiplicity(const std::vector<long>& f, int k) const;
  IntVector decompose(const std::vector<long>& f) const;
  std::vector<long> character(const IntVector& multiplicities) const;
  /// value of a class function at an ambient element of H
  long value(const std::vector<long>& f, int g) const { return f[class_of_[g]]; }

 private:
  const FiniteGroup* g_;
  ElementSet h_;
  long p_;
  std::vector<int> elements_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<std::vector<long>> irr_;
  std::vector<int> degrees_;
};

/// Shared prime for all tables of subgroups of g.
long character_prime(const FiniteGroup& g);

/// Caches the tables of subgroups of one ambient group.
class RepresentationContext {
 public:
  explicit RepresentationContext(FiniteGroup g);

  const FiniteGroup& group() const { return g_; }
  long prime() const { return p_; }
  const CharacterTable& table(ElementSet h);

 private:
  FiniteGroup g_;
  long p_;
  std::map<ElementSet, std::unique_ptr<CharacterTable>> tables_;
};

struct RepRingElement {
  ElementSet group;
  IntVector multiplicities;  // per irreducible of the group's table
  friend bool operator==(const RepRingElement&, const RepRingElement&) = default;
};

RepRingElement irreducible(RepresentationContext& ctx, ElementSet h, int k);
RepRingElement regular_representation(RepresentationContext& ctx, ElementSet h);

RepRingElement restrict(RepresentationContext& ctx, const RepRingElement& x, ElementSet h);
RepRingElement induce(RepresentationContext& ctx, const RepRingElement& x, ElementSet g);
/// Transport along c(gamma): L -> gamma L gamma^{-1}.
RepRingElement conjugate_transport(RepresentationContext& ctx, const RepRingElement& x, int gamma);
/// sum of products of multiplicities
Integer pairing(const RepRingElement& x, const RepRingElement& y);

/// Representatives gamma of the double cosets H gamma K in G.
std::vector<int> double_coset_representatives(const FiniteGroup& g, ElementSet h, ElementSet k);

struct DoubleCosetResult {
  bool ok = true;
  std::size_t irreducibles_checked = 0;
  std::size_t double_cosets = 0;
  std::string detail;
};

/// res^G_H ind^G_K = sum over H gamma K of ind_{c(gamma)} res^K_{K cap gamma^{-1} H gamma},
/// checked on every irreducible of K.
DoubleCosetResult double_coset_check(RepresentationContext& ctx, ElementSet h, ElementSet k);

/// <ind x, y>_G = <x, res y>_H for all irreducible x of H and y of G.
bool frobenius_check(RepresentationContext& ctx, ElementSet h, ElementSet g);

/// ind along c(g): G -> G is the identity for every g.
bool inner_conjugation_check(RepresentationContext& ctx);

struct NormCheck {
  bool kernel_ok = false;
  bool cokernel_ok = false;
  AbelianGroupPresentation kernel{0, IntMatrix()};
  AbelianGroupPresentation cokernel{0, IntMatrix()};
};

/// F acts on Z^r; `action` holds one matrix per generator of F, in order.
/// Compares coinvariants and invariants through the norm map and checks that
/// |F| kills its kernel and cokernel.
NormCheck norm_annihilation_check(const FiniteGroup& f, const std::vector<IntMatrix>& action);

/// rho(g) for every element, from the generator matrices; throws
/// NotARepresentation if the matrices do not satisfy the group law.
std::vector<IntMatrix> representation_matrices(const FiniteGroup& f, const std::vector<IntMatrix>& action);

}  // namespace ringkt
