#include "setkit/setalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace setkit::setalg {

std::size_t Universe::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] == label) return i;
  }
  throw Error("unknown point '" + label + "'");
}

Mask Universe::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= Mask{1} << index_of(l);
  return m;
}

std::vector<std::string> Universe::labels_of(Mask m) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (m >> i & 1) out.push_back(points[i]);
  }
  return out;
}

std::string Universe::set_string(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (m >> i & 1) {
      if (!first) out += ",";
      out += points[i];
      first = false;
    }
  }
  return out + "}";
}

Universe make_universe(std::vector<std::string> points) {
  if (points.empty()) throw Error("universe must be nonempty");
  if (points.size() > 60) throw Error("universe supports at most 60 points");
  std::set<std::string> distinct(points.begin(), points.end());
  if (distinct.size() != points.size()) throw Error("universe labels must be distinct");
  return Universe{std::move(points)};
}

bool SetFamily::contains(Mask m) const {
  return std::find(members.begin(), members.end(), m) != members.end();
}

namespace {

void require_members_in_range(const SetFamily& f) {
  for (Mask m : f.members) {
    if ((m & ~f.universe.full()) != 0) throw Error("family member leaves the universe");
  }
}

std::vector<Mask> sorted_unique(std::vector<Mask> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::vector<Mask> atom_partition(const SetFamily& f) {
  require_members_in_range(f);
  const std::size_t n = f.universe.size();
  // Signature of a point = the set of members containing it.
  std::map<std::vector<bool>, Mask> fibers;
  std::vector<std::vector<bool>> signature(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<bool> sig;
    sig.reserve(f.members.size());
    for (Mask m : f.members) sig.push_back((m >> p & 1) != 0);
    fibers[sig] |= Mask{1} << p;
    signature[p] = std::move(sig);
  }
  std::vector<Mask> atoms;
  std::set<std::vector<bool>> seen;
  for (std::size_t p = 0; p < n; ++p) {
    if (seen.insert(signature[p]).second) atoms.push_back(fibers[signature[p]]);
  }
  return atoms;
}

SetFamily generate_algebra(const SetFamily& f) {
  std::vector<Mask> atoms = atom_partition(f);
  if (atoms.size() > 20) {
    throw Error("generate_algebra: " + std::to_string(atoms.size()) +
                " atoms give too large an algebra");
  }
  std::vector<Mask> members;
  members.reserve(std::size_t{1} << atoms.size());
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << atoms.size()); ++pick) {
    Mask m = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (pick >> i & 1) m |= atoms[i];
    }
    members.push_back(m);
  }
  return SetFamily{f.universe, sorted_unique(std::move(members))};
}

std::pair<SetFamily, ClosureTrace> sigma_closure_iterate(const SetFamily& f) {
  require_members_in_range(f);
  const Mask full = f.universe.full();
  std::set<Mask> family(f.members.begin(), f.members.end());
  for (Mask m : f.members) family.insert(full & ~m);
  // Empty supremum and infimum: bottom and top belong to the closure.
  family.insert(0);
  family.insert(full);

  ClosureTrace trace;
  trace.stages.push_back({"seed", family.size()});
  for (;;) {
    bool changed = false;
    std::set<Mask> next = family;
    for (Mask a : family) {
      for (Mask b : family) next.insert(a | b);
    }
    if (next.size() != family.size()) changed = true;
    family = std::move(next);
    trace.stages.push_back({"union", family.size()});

    next = family;
    for (Mask a : family) {
      for (Mask b : family) next.insert(a & b);
    }
    if (next.size() != family.size()) changed = true;
    family = std::move(next);
    trace.stages.push_back({"intersection", family.size()});

    std::set<Mask> with_compl = family;
    for (Mask m : family) with_compl.insert(full & ~m);
    if (with_compl.size() != family.size()) changed = true;
    family = std::move(with_compl);

    if (!changed) break;
  }
  SetFamily out{f.universe, std::vector<Mask>(family.begin(), family.end())};
  return {std::move(out), std::move(trace)};
}

SetFamily lambda_closure(const SetFamily& f) {
  require_members_in_range(f);
  const Mask full = f.universe.full();
  std::set<Mask> family(f.members.begin(), f.members.end());
  family.insert(0);  // the empty disjoint union
  for (;;) {
    std::set<Mask> next = family;
    for (Mask m : family) next.insert(full & ~m);
    for (Mask a : family) {
      for (Mask b : family) {
        if ((a & b) == 0) next.insert(a | b);
      }
    }
    if (next.size() == family.size()) break;
    family = std::move(next);
  }
  return SetFamily{f.universe, std::vector<Mask>(family.begin(), family.end())};
}

const Rational& FiniteMeasure::value_of(Mask m) const {
  for (std::size_t i = 0; i < algebra.members.size(); ++i) {
    if (algebra.members[i] == m) return values[i];
  }
  throw Error("set " + algebra.universe.set_string(m) + " is outside the algebra");
}

MeasureReport validate_measure(const FiniteMeasure& m) {
  MeasureReport report;
  const auto& u = m.algebra.universe;
  if (m.values.size() != m.algebra.members.size()) {
    throw Error("measure values do not match the algebra members");
  }
  require_members_in_range(m.algebra);
  const Mask full = u.full();
  auto note = [&](std::string kind, std::string detail) {
    report.violations.push_back({std::move(kind), std::move(detail)});
  };

  if (!m.algebra.contains(0)) {
    note("closure", "the empty set is missing");
  } else if (m.value_of(0) != 0) {
    note("empty-set", "mu(empty) = " + fraction_string(m.value_of(0)));
  }
  if (!m.algebra.contains(full)) note("closure", "the universe is missing");
  for (Mask a : m.algebra.members) {
    if (!m.algebra.contains(full & ~a)) {
      note("closure", "complement of " + u.set_string(a) + " is missing");
    }
    for (Mask b : m.algebra.members) {
      if (!m.algebra.contains(a | b)) {
        note("closure",
             "union of " + u.set_string(a) + " and " + u.set_string(b) + " is missing");
      }
    }
  }
  if (!report.violations.empty()) return report;  // axioms need the closure

  for (Rational v : m.values) {
    if (v < 0) note("monotonicity", "a negative value appears");
  }
  for (Mask a : m.algebra.members) {
    for (Mask b : m.algebra.members) {
      if ((a & ~b) == 0 && m.value_of(a) > m.value_of(b)) {
        note("monotonicity", u.set_string(a) + " inside " + u.set_string(b) +
                                 " but mu is larger on the former");
      }
      if ((a & b) == 0 && m.value_of(a | b) != m.value_of(a) + m.value_of(b)) {
        note("additivity", "mu(" + u.set_string(a) + " + " + u.set_string(b) +
                               ") differs from the sum, witnesses (" +
                               u.set_string(a) + ", " + u.set_string(b) + ")");
      }
    }
  }
  return report;
}

AgreementVerdict measures_agree(const FiniteMeasure& m1, const FiniteMeasure& m2,
                                const SetFamily& generator) {
  require_members_in_range(generator);
  for (Mask a : generator.members) {
    for (Mask b : generator.members) {
      if (!generator.contains(a & b)) {
        throw Error("generator is not intersection-closed: " +
                        generator.universe.set_string(a) + " and " +
                        generator.universe.set_string(b) + " meet outside it",
                    Error::Category::semantic);
      }
    }
  }
  SetFamily algebra = generate_algebra(generator);
  auto same_algebra = [&](const FiniteMeasure& m) {
    return sorted_unique(m.algebra.members) == algebra.members;
  };
  if (!same_algebra(m1) || !same_algebra(m2)) {
    throw Error("measures must live on the algebra generated by the generator");
  }
  // The hypothesis: agreement on the generator and on the whole space.
  for (Mask g : generator.members) {
    if (m1.value_of(g) != m2.value_of(g)) return {false, g};
  }
  Mask full = generator.universe.full();
  if (m1.value_of(full) != m2.value_of(full)) return {false, full};
  for (Mask a : algebra.members) {
    if (m1.value_of(a) != m2.value_of(a)) return {false, a};
  }
  return {true, std::nullopt};
}

UltrafilterCorrespondence ultrafilter_measure(const FiniteMeasure& binary) {
  const auto& u = binary.algebra.universe;
  if (binary.algebra.members.size() != (std::size_t{1} << u.size())) {
    throw Error("binary measure must live on the full powerset");
  }
  for (const Rational& v : binary.values) {
    if (v != 0 && v != 1) {
      throw Error("measure value " + fraction_string(v) + " is outside {0, 1}");
    }
  }
  auto report = validate_measure(binary);
  if (!report.valid()) {
    throw Error("not a measure: " + report.violations.front().detail,
                Error::Category::semantic);
  }
  if (binary.value_of(u.full()) != 1) {
    throw Error("mu(S) must be 1 for the ultrafilter correspondence",
                Error::Category::semantic);
  }
  UltrafilterCorrespondence out;
  Mask core = u.full();
  for (std::size_t i = 0; i < binary.algebra.members.size(); ++i) {
    if (binary.values[i] == 1) {
      out.filter.push_back(binary.algebra.members[i]);
      core &= binary.algebra.members[i];
    }
  }
  // On a finite carrier the filter is principal; additivity forces a
  // single generating point.
  if (std::popcount(core) != 1) {
    throw Error("binary measure does not concentrate on a single point");
  }
  out.point = u.points[static_cast<std::size_t>(std::countr_zero(core))];
  return out;
}

FiniteMeasure dirac_measure(const Universe& u, const std::string& point) {
  std::size_t p = u.index_of(point);
  if (u.size() > 20) throw Error("dirac_measure enumerates the powerset; 20 points max");
  FiniteMeasure m;
  m.algebra.universe = u;
  for (Mask s = 0; s <= u.full(); ++s) {
    m.algebra.members.push_back(s);
    m.values.emplace_back((s >> p & 1) ? 1 : 0);
    if (s == u.full()) break;
  }
  return m;
}

Rational cylinder_measure(std::size_t k, const std::vector<std::string>& words) {
  if (k == 0 || k > 62) throw Error("word length must be between 1 and 62");
  std::set<std::uint64_t> distinct;
  for (const std::string& w : words) {
    if (w.size() != k) {
      throw Error("word '" + w + "' does not have length " + std::to_string(k));
    }
    std::uint64_t code = 0;
    for (char c : w) {
      if (c != '0' && c != '1') throw Error("word '" + w + "' is not binary");
      code = code << 1 | (c == '1');
    }
    distinct.insert(code);
  }
  return Rational(Natural(distinct.size()), Natural(1) << k);
}

bool FiniteTopology::is_open(Mask m) const {
  return std::find(opens.begin(), opens.end(), m) != opens.end();
}

FiniteTopology generate_topology(const Universe& u, const std::vector<Mask>& subbase) {
  if (u.size() > 20) throw Error("generate_topology supports at most 20 points");
  for (Mask m : subbase) {
    if ((m & ~u.full()) != 0) throw Error("subbase set leaves the universe");
  }
  // Base: all finite intersections, S for the empty one.
  std::set<Mask> base{u.full()};
  std::vector<Mask> queue(base.begin(), base.end());
  for (Mask s : subbase) {
    if (base.insert(s).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    Mask m = queue.back();
    queue.pop_back();
    for (Mask s : subbase) {
      if (base.insert(m & s).second) queue.push_back(m & s);
    }
  }
  // Opens: all unions of base sets, the empty set for the empty union.
  std::set<Mask> opens{0};
  queue.assign(opens.begin(), opens.end());
  for (Mask b : base) {
    if (opens.insert(b).second) queue.push_back(b);
  }
  while (!queue.empty()) {
    Mask m = queue.back();
    queue.pop_back();
    for (Mask b : base) {
      if (opens.insert(m | b).second) queue.push_back(m | b);
    }
  }
  FiniteTopology t{u, std::vector<Mask>(opens.begin(), opens.end())};
  // The construction satisfies the topology axioms by design; verify anyway.
  for (Mask a : t.opens) {
    for (Mask b : t.opens) {
      if (!t.is_open(a & b) || !t.is_open(a | b)) {
        throw Error("generated family is not a topology");
      }
    }
  }
  return t;
}

BoundaryTriple boundary_triple(const FiniteTopology& t, Mask m) {
  if ((m & ~t.universe.full()) != 0) throw Error("subset leaves the universe");
  const Mask full = t.universe.full();
  auto interior_of = [&](Mask x) {
    Mask interior = 0;
    for (Mask g : t.opens) {
      if ((g & ~x) == 0) interior |= g;
    }
    return interior;
  };
  BoundaryTriple out;
  out.interior = interior_of(m);
  out.closure = full & ~interior_of(full & ~m);
  out.boundary = out.closure & ~out.interior;
  return out;
}

}  // namespace setkit::setalg
