#include "setkit/intervals.hpp"

#include <algorithm>

namespace setkit::intervals {

IntervalSet IntervalSet::normalize(std::vector<HalfOpen> pieces) {
  for (const HalfOpen& p : pieces) {
    if (p.lo > p.hi) {
      throw Error("interval ]" + fraction_string(p.lo) + ", " + fraction_string(p.hi) +
                  "] has reversed endpoints");
    }
    if (p.lo < 0 || p.hi > 1) {
      throw Error("interval ]" + fraction_string(p.lo) + ", " + fraction_string(p.hi) +
                  "] leaves the unit interval");
    }
  }
  std::erase_if(pieces, [](const HalfOpen& p) { return p.lo == p.hi; });
  std::sort(pieces.begin(), pieces.end(), [](const HalfOpen& a, const HalfOpen& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  IntervalSet out;
  for (const HalfOpen& p : pieces) {
    if (!out.components_.empty() && p.lo <= out.components_.back().hi) {
      // Overlapping or adjacent: ]a,b] followed by ]b,c] merges to ]a,c].
      if (p.hi > out.components_.back().hi) out.components_.back().hi = p.hi;
    } else {
      out.components_.push_back(p);
    }
  }
  return out;
}

IntervalSet IntervalSet::unit() { return normalize({{Rational(0), Rational(1)}}); }

bool IntervalSet::operator==(const IntervalSet& other) const {
  if (components_.size() != other.components_.size()) return false;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].lo != other.components_[i].lo ||
        components_[i].hi != other.components_[i].hi) {
      return false;
    }
  }
  return true;
}

bool IntervalSet::contains(const Rational& x) const {
  for (const HalfOpen& p : components_) {
    if (p.lo < x && x <= p.hi) return true;
  }
  return false;
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<HalfOpen> pieces = a.components();
  pieces.insert(pieces.end(), b.components().begin(), b.components().end());
  return IntervalSet::normalize(std::move(pieces));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<HalfOpen> pieces;
  for (const HalfOpen& p : a.components()) {
    for (const HalfOpen& q : b.components()) {
      Rational lo = std::max(p.lo, q.lo);
      Rational hi = std::min(p.hi, q.hi);
      if (lo < hi) pieces.push_back({lo, hi});
    }
  }
  return IntervalSet::normalize(std::move(pieces));
}

IntervalSet complement(const IntervalSet& a) {
  std::vector<HalfOpen> pieces;
  Rational cursor(0);
  for (const HalfOpen& p : a.components()) {
    if (cursor < p.lo) pieces.push_back({cursor, p.lo});
    cursor = p.hi;
  }
  if (cursor < 1) pieces.push_back({cursor, Rational(1)});
  return IntervalSet::normalize(std::move(pieces));
}

IntervalSet difference(const IntervalSet& a, const IntervalSet& b) {
  return intersect(a, complement(b));
}

Rational length(const IntervalSet& a) {
  Rational sum(0);
  for (const HalfOpen& p : a.components()) sum += p.hi - p.lo;
  return sum;
}

Rational outer_measure(const IntervalSet& target,
                       const std::vector<IntervalSet>& cover) {
  IntervalSet covered;
  Rational sum(0);
  for (const IntervalSet& c : cover) {
    covered = unite(covered, c);
    sum += length(c);
  }
  IntervalSet missed = difference(target, covered);
  if (!missed.empty()) {
    const HalfOpen& gap = missed.components().front();
    Rational witness = (gap.lo + gap.hi) / 2;
    throw Error("not a cover: point " + fraction_string(witness) +
                    " of the target is uncovered",
                Error::Category::semantic);
  }
  if (sum < length(target)) {
    throw Error("cover sum fell below the target length; arithmetic is broken");
  }
  return sum;
}

CaratheodoryVerdict caratheodory_check(const IntervalSet& a, const IntervalSet& x) {
  CaratheodoryVerdict v;
  v.inside = length(intersect(x, a));
  v.outside = length(difference(x, a));
  v.total = length(x);
  v.additive = (v.inside + v.outside == v.total);
  return v;
}

ClosedIntervalSet ClosedIntervalSet::normalize(std::vector<ClosedInterval> pieces) {
  for (const ClosedInterval& p : pieces) {
    if (p.lo > p.hi) {
      throw Error("interval [" + fraction_string(p.lo) + ", " + fraction_string(p.hi) +
                  "] has reversed endpoints");
    }
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const ClosedInterval& a, const ClosedInterval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  ClosedIntervalSet out;
  for (const ClosedInterval& p : pieces) {
    if (!out.components_.empty() && p.lo <= out.components_.back().hi) {
      // Touching closed intervals merge: [a,b] and [b,c] give [a,c].
      if (p.hi > out.components_.back().hi) out.components_.back().hi = p.hi;
    } else {
      out.components_.push_back(p);
    }
  }
  return out;
}

bool ClosedIntervalSet::contains_set(const ClosedIntervalSet& inner) const {
  // Canonical components are separated, so each inner component must fit
  // inside a single outer one.
  for (const ClosedInterval& c : inner.components_) {
    bool fits = false;
    for (const ClosedInterval& p : components_) {
      if (p.lo <= c.lo && c.hi <= p.hi) {
        fits = true;
        break;
      }
    }
    if (!fits) return false;
  }
  return true;
}

Rational ClosedIntervalSet::total_length() const {
  Rational sum(0);
  for (const ClosedInterval& p : components_) sum += p.hi - p.lo;
  return sum;
}

Rational ClosedIntervalSet::diameter() const {
  if (components_.empty()) return Rational(0);
  return components_.back().hi - components_.front().lo;
}

ClosedIntervalSet cantor_set(unsigned n, unsigned depth_bound) {
  if (n > depth_bound) {
    throw Error("cantor_set depth " + std::to_string(n) + " exceeds the bound " +
                std::to_string(depth_bound));
  }
  std::vector<ClosedInterval> pieces{{Rational(0), Rational(1)}};
  for (unsigned step = 0; step < n; ++step) {
    std::vector<ClosedInterval> next;
    next.reserve(pieces.size() * 2);
    for (const ClosedInterval& p : pieces) {
      Rational third = (p.hi - p.lo) / 3;
      next.push_back({p.lo, p.lo + third});
      next.push_back({p.hi - third, p.hi});
    }
    pieces = std::move(next);
  }
  return ClosedIntervalSet::normalize(std::move(pieces));
}

std::vector<std::size_t> heine_borel_subcover(const Rational& u, const Rational& v,
                                              const OpenCover& cover) {
  if (!(u < v)) throw Error("heine_borel_subcover needs u < v");
  for (const OpenInterval& i : cover.intervals) {
    if (!(i.lo < i.hi)) throw Error("open cover contains an empty interval");
  }
  std::vector<std::size_t> chosen;
  Rational sweep = u;
  for (;;) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < cover.intervals.size(); ++i) {
      const OpenInterval& c = cover.intervals[i];
      if (c.lo < sweep && sweep < c.hi) {
        if (!best || c.hi > cover.intervals[*best].hi) best = i;
      }
    }
    if (!best) {
      throw Error("not a cover: the sweep is stuck at " + fraction_string(sweep),
                  Error::Category::semantic);
    }
    chosen.push_back(*best);
    if (cover.intervals[*best].hi > v) return chosen;
    sweep = cover.intervals[*best].hi;
  }
}

bool covers_interval(const Rational& u, const Rational& v,
                     const std::vector<OpenInterval>& chosen) {
  std::vector<OpenInterval> sorted = chosen;
  std::sort(sorted.begin(), sorted.end(), [](const OpenInterval& a, const OpenInterval& b) {
    return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
  });
  // Merge strictly overlapping opens; ]a,b[ and ]b,c[ do not merge (b is
  // uncovered), so touching pieces stay separate.
  std::vector<OpenInterval> merged;
  for (const OpenInterval& p : sorted) {
    if (!(p.lo < p.hi)) continue;
    if (!merged.empty() && p.lo < merged.back().hi) {
      if (p.hi > merged.back().hi) merged.back().hi = p.hi;
    } else {
      merged.push_back(p);
    }
  }
  for (const OpenInterval& p : merged) {
    if (p.lo < u && v < p.hi) return true;
  }
  return false;
}

NestedPoint nested_intersection(const std::vector<ClosedIntervalSet>& stages,
                                const Rational& tol) {
  if (stages.empty()) throw Error("nested_intersection needs at least one stage");
  for (std::size_t i = 0; i < stages.size(); ++i) {
    if (stages[i].empty()) {
      throw Error("stage " + std::to_string(i) + " is empty",
                  Error::Category::semantic);
    }
    if (i > 0 && !stages[i - 1].contains_set(stages[i])) {
      throw Error("stage " + std::to_string(i) + " is not contained in stage " +
                      std::to_string(i - 1),
                  Error::Category::semantic);
    }
  }
  Rational diam = stages.back().diameter();
  if (diam > tol) {
    throw Error("final diameter " + fraction_string(diam) + " exceeds the tolerance " +
                fraction_string(tol));
  }
  return NestedPoint{stages.back().components().front().lo, diam};
}

ProductBounds product_bounds(const std::vector<Rational>& a) {
  if (a.size() < 2) throw Error("product_bounds needs at least two factors");
  ProductBounds out{Rational(1), Rational(1)};
  for (const Rational& x : a) {
    if (!(0 < x && x < 1)) {
      throw Error("factor " + fraction_string(x) + " is outside (0, 1)");
    }
    out.product *= (1 - x);
    out.lower -= x;
  }
  if (!(out.product > out.lower)) {
    throw Error("product bound failed; arithmetic is broken");
  }
  return out;
}

}  // namespace setkit::intervals
