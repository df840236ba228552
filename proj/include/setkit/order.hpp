#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "setkit/numbers.hpp"

namespace setkit::order {

/// Index-based subset of a poset's element list, sorted ascending.
using Subset = std::vector<std::size_t>;

/// Named violation of one of the three order axioms, with witnesses.
struct PosetViolation {
  enum class Kind { reflexivity, antisymmetry, transitivity };
  Kind kind;
  std::vector<std::size_t> witnesses;  // 1, 2 or 3 element indices
  std::string describe(const std::vector<std::string>& labels) const;
};

/// Finite partial order: explicit element list plus a boolean leq matrix.
/// The element index order is the deterministic tie-break order used by
/// every operation in this module.
class FinitePoset {
 public:
  /// Validates reflexivity, antisymmetry and transitivity; throws an Error
  /// describing the first violation (scanned in index order) otherwise.
  FinitePoset(std::vector<std::string> elements,
              std::vector<std::vector<bool>> leq);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& label(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const std::string& label) const;
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  const std::vector<std::vector<bool>>& matrix() const { return leq_; }

  bool total() const;

 private:
  std::vector<std::string> elements_;
  std::vector<std::vector<bool>> leq_;
};

/// First axiom violation in a candidate relation, or nothing if it is a
/// partial order.
std::optional<PosetViolation> check_poset(std::size_t n,
                                          const std::vector<std::vector<bool>>& leq);

struct Extrema {
  Subset minimal, maximal;
  std::optional<std::size_t> least, greatest;
};

/// Minimal/maximal/least/greatest elements of a nonempty subset.
Extrema extrema(const FinitePoset& p, const Subset& subset);

struct Bounds {
  Subset lower, upper;
  std::optional<std::size_t> inf, sup;
};

/// Lower/upper bounds of a nonempty subset within the whole poset, plus
/// greatest lower and least upper bound when they exist.
Bounds bounds(const FinitePoset& p, const Subset& subset);

/// Extends the order to a total order containing it: repeatedly picks the
/// least incomparable pair (a, b) in index order and closes with
/// {<x, y> : x <= a and b <= y}. Deterministic.
FinitePoset linear_extension(const FinitePoset& p);

/// Finite rewrite relation over a label carrier.
struct ReductionSystem {
  std::vector<std::string> carrier;
  std::vector<std::pair<std::size_t, std::size_t>> steps;
};

struct TerminationResult {
  bool terminating;
  std::vector<std::size_t> cycle;  // a witness cycle when not terminating
};

/// A finite reduction system terminates iff its step digraph is acyclic;
/// a cycle is returned as the witness of an infinite chain.
TerminationResult is_terminating(const ReductionSystem& r);

/// All down sets of a poset, ordered by inclusion, with the principal
/// down-set embedding.
struct DownSetLattice {
  FinitePoset base;
  std::vector<std::uint64_t> downsets;   // bit i = element i; ascending masks
  std::vector<std::size_t> embedding;    // element -> index of its principal down set
};

/// Enumerates all down sets (brute force over subsets; the element count is
/// limited by `bound` since the lattice can be exponentially large).
DownSetLattice down_set_lattice(const FinitePoset& p, std::size_t bound = 15);

/// Inclusion order on the down sets, as a poset whose labels are set
/// notation like "{a,b}".
FinitePoset inclusion_poset(const DownSetLattice& l);

struct IrreduciblesAndCovers {
  Subset join_irreducibles;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (s, t): t covers s
};

/// Join-irreducible elements and all cover pairs of a poset that is a
/// lattice (every pair must have a join; otherwise an Error names the pair).
IrreduciblesAndCovers irreducibles_and_covers(const FinitePoset& lattice_order);
IrreduciblesAndCovers irreducibles_and_covers(const DownSetLattice& l);

/// Greatest fixpoint of a monotone map on subsets of {0..n-1}, computed by
/// iterating from the full set. Monotonicity is spot-checked on seeded
/// random pairs, or exhaustively when full_check is set; a counterexample
/// pair is reported in the Error. n is limited to 63 (bitmask width).
std::uint64_t greatest_fixpoint(std::size_t n,
                                const std::function<std::uint64_t(std::uint64_t)>& h,
                                bool full_check = false);

}  // namespace setkit::order
