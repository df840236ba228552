#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setkit/order.hpp"

namespace setkit::boolalg {

using order::FinitePoset;
using order::Subset;

/// Bounded finite lattice: a poset together with total meet/join tables.
class FiniteLattice {
 public:
  /// Computes the tables from the order; throws naming the first pair
  /// without an infimum or supremum.
  explicit FiniteLattice(FinitePoset poset);

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& label(std::size_t i) const { return poset_.label(i); }
  bool leq(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }

  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

 private:
  FinitePoset poset_;
  std::vector<std::vector<std::size_t>> meet_, join_;
  std::size_t bottom_, top_;
};

FiniteLattice lattice_from_poset(const FinitePoset& p);

struct DistributivityResult {
  bool distributive;
  std::optional<std::array<std::size_t, 3>> witness;  // first failing (a, b, c)
};

/// Exhaustive check of a AND (b OR c) = (a AND b) OR (a AND c); by the
/// standard equivalence one law suffices.
DistributivityResult is_distributive(const FiniteLattice& l);

/// Distributive lattice in which every element has a (then unique)
/// complement.
class BooleanAlgebra {
 public:
  /// Throws if the lattice is not distributive or some element has no
  /// complement (the offender is named).
  explicit BooleanAlgebra(FiniteLattice lattice);

  const FiniteLattice& lattice() const { return lattice_; }
  std::size_t size() const { return lattice_.size(); }
  const std::string& label(std::size_t i) const { return lattice_.label(i); }
  bool leq(std::size_t a, std::size_t b) const { return lattice_.leq(a, b); }
  std::size_t meet(std::size_t a, std::size_t b) const { return lattice_.meet(a, b); }
  std::size_t join(std::size_t a, std::size_t b) const { return lattice_.join(a, b); }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  std::size_t bottom() const { return lattice_.bottom(); }
  std::size_t top() const { return lattice_.top(); }

  /// Minimal nonzero elements, in index order.
  Subset atoms() const;

 private:
  FiniteLattice lattice_;
  std::vector<std::size_t> neg_;
};

BooleanAlgebra boolean_structure(const FiniteLattice& l);

/// Builds a Boolean algebra from explicit tables, validating every axiom
/// (partial order recovered from the meet table). Used for algebras given
/// abstractly rather than as sets.
BooleanAlgebra boolean_algebra_from_tables(
    std::vector<std::string> labels,
    const std::vector<std::vector<std::size_t>>& meet,
    const std::vector<std::vector<std::size_t>>& join,
    const std::vector<std::size_t>& neg, std::size_t bottom, std::size_t top);

/// Abstract Boolean algebra with 2^k elements on opaque labels e0, e1, ...;
/// the tables are the only structure exposed.
BooleanAlgebra free_boolean_algebra(std::size_t k);

/// Powerset algebra of the given points, elements ordered by bitmask and
/// labelled in set notation.
BooleanAlgebra powerset_algebra(const std::vector<std::string>& points);

struct SubsetClassification {
  bool is_ideal = false;
  bool is_filter = false;
  bool is_prime = false;    // as an ideal or filter, whichever applies
  bool is_maximal = false;  // likewise
  std::optional<std::string> witness;  // why the strongest failed flag fails
};

/// Classifies a subset of a lattice as ideal/filter and tests primality and
/// maximality. Maximality is decided constructively: every one-element
/// extension is closed again and must become improper.
SubsetClassification classify_subset(const FiniteLattice& l, const Subset& s);

/// Smallest filter containing the base: meet-closure then up-closure.
/// Throws "not a filter base" naming the offending meet when bottom shows up.
Subset generate_filter(const FiniteLattice& l, const Subset& base);

/// All maximal filters, one per atom, in atom index order. Each satisfies
/// the dichotomy: for every a, exactly one of a and -a belongs to it.
std::vector<Subset> ultrafilters(const BooleanAlgebra& b);

/// (a AND -c) OR (-a AND c).
std::size_t symm_diff(const BooleanAlgebra& b, std::size_t a, std::size_t c);

/// Quotient of a Boolean algebra by a proper ideal under a ~ b iff the
/// symmetric difference lies in the ideal.
struct QuotientAlgebra {
  BooleanAlgebra base;
  Subset ideal;
  std::vector<Subset> classes;             // partition, sorted by representative
  std::vector<std::size_t> representative; // class -> least base index
  std::vector<std::size_t> class_of;       // base element -> class
  BooleanAlgebra algebra;                  // induced structure on the classes
};

QuotientAlgebra quotient(const BooleanAlgebra& b, const Subset& ideal);

/// Prime ideal containing the given proper ideal: factor, pick the first
/// prime ideal of the quotient in lexicographic order of member
/// representatives, pull back.
Subset extend_to_prime_ideal(const BooleanAlgebra& b, const Subset& ideal);

/// Prime ideal containing exactly one of x and y (x != y), found through
/// the case split on x AND -y versus -x AND y.
Subset separating_prime_ideal(const BooleanAlgebra& b, std::size_t x, std::size_t y);

/// Concrete algebra of sets over labelled points, closed under union,
/// intersection and complement.
struct SetAlgebra {
  std::vector<std::string> points;
  std::vector<std::uint64_t> sets;  // bit i = point i; ascending masks
};

struct StoneRepresentation {
  SetAlgebra algebra;
  std::vector<std::uint64_t> psi;  // element -> set of ultrafilters containing it
};

/// Stone map psi(x) = set of ultrafilters containing x. Verifies that psi
/// is an injective homomorphism onto a set algebra losslessly representing
/// the input, and the dual base identities on prime ideals.
StoneRepresentation stone_representation(const BooleanAlgebra& b);

/// Both sides of x AND (join of the family) = join of (x AND a_i);
/// they coincide in a Boolean algebra, which is verified.
std::pair<std::size_t, std::size_t> distribute_over_join(const BooleanAlgebra& b,
                                                         std::size_t x,
                                                         const Subset& family);

}  // namespace setkit::boolalg
