#pragma once

#include <optional>
#include <vector>

#include "setkit/numbers.hpp"

namespace setkit::intervals {

/// Half-open interval ]lo, hi] inside the unit interval; empty when lo = hi.
struct HalfOpen {
  Rational lo, hi;
};

/// Canonical finite union of half-open intervals: components sorted,
/// disjoint and non-adjacent (hi_i < lo_{i+1}), none empty. The carrier of
/// the generated interval algebra on ]0, 1].
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Sorts, merges and drops empty pieces; set-equal inputs normalize to
  /// the identical component list. Rejects endpoints outside [0, 1] or
  /// reversed bounds.
  static IntervalSet normalize(std::vector<HalfOpen> pieces);

  static IntervalSet unit();  // ]0, 1]

  const std::vector<HalfOpen>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  bool operator==(const IntervalSet& other) const;

  bool contains(const Rational& x) const;

 private:
  std::vector<HalfOpen> components_;  // canonical by construction
};

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet difference(const IntervalSet& a, const IntervalSet& b);
IntervalSet complement(const IntervalSet& a);  // within ]0, 1]

/// Sum of component lengths; additive over disjoint sets, monotone.
Rational length(const IntervalSet& a);

/// Sum of the cover's lengths after verifying that the cover's union
/// really contains the target; the sum dominates length(target), and the
/// self-cover attains it. A gap is reported through the midpoint of the
/// first uncovered component.
Rational outer_measure(const IntervalSet& target, const std::vector<IntervalSet>& cover);

struct CaratheodoryVerdict {
  bool additive;
  Rational inside, outside, total;  // lengths of x&a, x\a, x
};

/// Splits the test set x along a and checks the exact additivity
/// length(x&a) + length(x\a) = length(x).
CaratheodoryVerdict caratheodory_check(const IntervalSet& a, const IntervalSet& x);

/// Closed interval [lo, hi]; lo = hi is a point.
struct ClosedInterval {
  Rational lo, hi;
};

/// Canonical finite union of closed intervals (sorted, separated).
class ClosedIntervalSet {
 public:
  static ClosedIntervalSet normalize(std::vector<ClosedInterval> pieces);

  const std::vector<ClosedInterval>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  bool contains_set(const ClosedIntervalSet& inner) const;

  Rational total_length() const;
  Rational diameter() const;  // max endpoint - min endpoint; 0 when empty

 private:
  std::vector<ClosedInterval> components_;
};

/// Stage n of the middle-thirds construction: 2^n components of length
/// 3^-n each, total (2/3)^n. Depth capped (the component count doubles).
ClosedIntervalSet cantor_set(unsigned n, unsigned depth_bound = 20);

/// Open interval ]lo, hi[ with rational endpoints, not confined to [0, 1].
struct OpenInterval {
  Rational lo, hi;
};

struct OpenCover {
  std::vector<OpenInterval> intervals;
};

/// Greedy sweep from u: repeatedly pick the interval containing the sweep
/// point with the greatest right endpoint (least index on ties) until the
/// point passes v. Returns the chosen indices; a stuck sweep point is the
/// witness that the input is not a cover of [u, v].
std::vector<std::size_t> heine_borel_subcover(const Rational& u, const Rational& v,
                                              const OpenCover& cover);

/// True when the chosen open intervals cover all of [u, v]; independent of
/// the sweep above (merges the intervals and checks one merged piece spans).
bool covers_interval(const Rational& u, const Rational& v,
                     const std::vector<OpenInterval>& chosen);

struct NestedPoint {
  Rational point;     // leftmost point of the final stage
  Rational diameter;  // error bound
};

/// Validates a decreasing sequence of nonempty closed interval sets whose
/// final diameter is at most tol; returns a point of the final stage and
/// the final diameter as the error bound.
NestedPoint nested_intersection(const std::vector<ClosedIntervalSet>& stages,
                                const Rational& tol);

struct ProductBounds {
  Rational product;  // product of (1 - a_i)
  Rational lower;    // 1 - sum of a_i
};

/// Exact product inequality: for a_i in (0,1), n >= 2, the product of
/// (1 - a_i) strictly exceeds 1 - sum a_i.
ProductBounds product_bounds(const std::vector<Rational>& a);

}  // namespace setkit::intervals
