#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setkit/numbers.hpp"

namespace setkit::setalg {

/// Subset of a universe as a bitmask, bit i = point i.
using Mask = std::uint64_t;

/// Finite nonempty carrier of labelled points (at most 60, bitmask width).
struct Universe {
  std::vector<std::string> points;

  std::size_t size() const { return points.size(); }
  Mask full() const { return (Mask{1} << points.size()) - 1; }
  std::size_t index_of(const std::string& label) const;
  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Mask m) const;
  std::string set_string(Mask m) const;
};

Universe make_universe(std::vector<std::string> points);

/// Family of subsets of a common universe; member order is meaningful for
/// deterministic output but all operations treat it as a set.
struct SetFamily {
  Universe universe;
  std::vector<Mask> members;

  bool contains(Mask m) const;
};

/// Membership-signature partition: two points land in the same atom iff
/// every family member contains both or neither. Atoms are returned in
/// order of their least point; the empty family yields the single atom S.
std::vector<Mask> atom_partition(const SetFamily& f);

/// Smallest set algebra containing the family: all unions of atoms,
/// in ascending mask order.
SetFamily generate_algebra(const SetFamily& f);

struct ClosureTrace {
  struct Stage {
    std::string step;  // "seed", "union", "intersection"
    std::size_t size;  // family size after the step
  };
  std::vector<Stage> stages;
};

/// Fixpoint form of the generated-algebra construction: seed with the
/// family, its complements, the empty set and S, then alternate closing
/// under finite unions and finite intersections until stable. Agrees with
/// generate_algebra; the trace records the stage sizes.
std::pair<SetFamily, ClosureTrace> sigma_closure_iterate(const SetFamily& f);

/// Smallest family containing the input that is closed under complements
/// and disjoint unions (the empty disjoint union contributes the empty set).
SetFamily lambda_closure(const SetFamily& f);

/// Exact-rational set function on a finite algebra; values parallel to
/// algebra.members.
struct FiniteMeasure {
  SetFamily algebra;
  std::vector<Rational> values;

  const Rational& value_of(Mask m) const;
};

struct MeasureReport {
  struct Violation {
    std::string kind;  // "closure", "empty-set", "monotonicity", "additivity"
    std::string detail;
  };
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks that the carrier is an algebra containing the empty set, that
/// mu(empty) = 0, monotonicity, and additivity on every disjoint pair.
MeasureReport validate_measure(const FiniteMeasure& m);

struct AgreementVerdict {
  bool agree;
  std::optional<Mask> disagreement;  // least witness set when they differ
};

/// Two measures on the algebra generated by an intersection-closed family
/// agree everywhere once they agree on the generator and on S. Rejects
/// generators that are not intersection-closed, naming the offending pair.
AgreementVerdict measures_agree(const FiniteMeasure& m1, const FiniteMeasure& m2,
                                const SetFamily& generator);

struct UltrafilterCorrespondence {
  std::vector<Mask> filter;  // sets of measure one
  std::string point;         // the generating point (principal on finite S)
};

/// A {0,1}-valued measure on the full powerset is exactly membership in a
/// principal ultrafilter; returns the filter and its point.
UltrafilterCorrespondence ultrafilter_measure(const FiniteMeasure& binary);

/// Dirac measure at the named point on the full powerset of the universe.
FiniteMeasure dirac_measure(const Universe& u, const std::string& point);

/// Counting measure scaled to total 1 is not provided; the coin-flip
/// cylinder weight |A| / 2^k for a set of length-k binary words is.
Rational cylinder_measure(std::size_t k, const std::vector<std::string>& words);

struct FiniteTopology {
  Universe universe;
  std::vector<Mask> opens;  // ascending masks; contains empty and S

  bool is_open(Mask m) const;
};

/// Generates the topology with the given subbase: base = finite
/// intersections (the empty intersection is S), opens = arbitrary unions
/// (the empty union is the empty set). Universe capped at 20 points.
FiniteTopology generate_topology(const Universe& u, const std::vector<Mask>& subbase);

struct BoundaryTriple {
  Mask interior, closure, boundary;
};

/// Interior = union of open subsets of M; closure = complement of the
/// interior of the complement; boundary = closure minus interior.
BoundaryTriple boundary_triple(const FiniteTopology& t, Mask m);

}  // namespace setkit::setalg
