#include "setkit/boolalg.hpp"

#include <algorithm>
#include <set>

namespace setkit::boolalg {

namespace {

Subset sorted(Subset s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(const Subset& s, std::size_t x) {
  return std::binary_search(s.begin(), s.end(), x);
}

std::string label_set(const FiniteLattice& l, const Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += l.label(s[i]);
  }
  return out + "}";
}

}  // namespace

FiniteLattice::FiniteLattice(FinitePoset poset) : poset_(std::move(poset)) {
  const std::size_t n = poset_.size();
  meet_.assign(n, std::vector<std::size_t>(n));
  join_.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto bd = order::bounds(poset_, Subset{a, b});
      if (!bd.inf) {
        throw Error("not a lattice: {" + poset_.label(a) + ", " + poset_.label(b) +
                        "} has no infimum",
                    Error::Category::semantic);
      }
      if (!bd.sup) {
        throw Error("not a lattice: {" + poset_.label(a) + ", " + poset_.label(b) +
                        "} has no supremum",
                    Error::Category::semantic);
      }
      meet_[a][b] = meet_[b][a] = *bd.inf;
      join_[a][b] = join_[b][a] = *bd.sup;
    }
  }
  bottom_ = 0;
  top_ = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bottom_ = meet_[bottom_][a];
    top_ = join_[top_][a];
  }
}

FiniteLattice lattice_from_poset(const FinitePoset& p) { return FiniteLattice(p); }

DistributivityResult is_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
          return {false, std::array<std::size_t, 3>{a, b, c}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

BooleanAlgebra::BooleanAlgebra(FiniteLattice lattice) : lattice_(std::move(lattice)) {
  auto distr = is_distributive(lattice_);
  if (!distr.distributive) {
    auto [a, b, c] = *distr.witness;
    throw Error("not distributive: witness (" + lattice_.label(a) + ", " +
                    lattice_.label(b) + ", " + lattice_.label(c) + ")",
                Error::Category::semantic);
  }
  const std::size_t n = lattice_.size();
  neg_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::optional<std::size_t> complement;
    for (std::size_t x = 0; x < n; ++x) {
      if (lattice_.meet(a, x) == lattice_.bottom() &&
          lattice_.join(a, x) == lattice_.top()) {
        complement = x;
        break;  // complements are unique in a distributive lattice
      }
    }
    if (!complement) {
      throw Error("not a Boolean algebra: element '" + lattice_.label(a) +
                      "' has no complement",
                  Error::Category::semantic);
    }
    neg_[a] = *complement;
  }
}

Subset BooleanAlgebra::atoms() const {
  Subset out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (a == bottom()) continue;
    bool minimal = true;
    for (std::size_t x = 0; x < size(); ++x) {
      if (x != bottom() && x != a && leq(x, a)) minimal = false;
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

BooleanAlgebra boolean_structure(const FiniteLattice& l) { return BooleanAlgebra(l); }

BooleanAlgebra boolean_algebra_from_tables(
    std::vector<std::string> labels,
    const std::vector<std::vector<std::size_t>>& meet,
    const std::vector<std::vector<std::size_t>>& join,
    const std::vector<std::size_t>& neg, std::size_t bottom, std::size_t top) {
  const std::size_t n = labels.size();
  auto square = [n](const auto& t) {
    if (t.size() != n) return false;
    for (const auto& row : t) {
      if (row.size() != n) return false;
    }
    return true;
  };
  if (!square(meet) || !square(join) || neg.size() != n) {
    throw Error("algebra tables do not match the element count");
  }
  // Order recovered from the meet table; the poset constructor validates it.
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (meet[a][b] >= n || join[a][b] >= n) throw Error("table entry out of range");
      leq[a][b] = meet[a][b] == a;
    }
  }
  FiniteLattice lattice{FinitePoset(std::move(labels), std::move(leq))};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (lattice.meet(a, b) != meet[a][b] || lattice.join(a, b) != join[a][b]) {
        throw Error("tables are not the meet/join of the induced order",
                    Error::Category::semantic);
      }
    }
  }
  if (lattice.bottom() != bottom || lattice.top() != top) {
    throw Error("declared bounds differ from the induced ones",
                Error::Category::semantic);
  }
  BooleanAlgebra algebra(lattice);
  for (std::size_t a = 0; a < n; ++a) {
    if (algebra.neg(a) != neg[a]) {
      throw Error("declared complement table is wrong at '" + algebra.label(a) + "'",
                  Error::Category::semantic);
    }
  }
  return algebra;
}

BooleanAlgebra free_boolean_algebra(std::size_t k) {
  if (k > 6) throw Error("free_boolean_algebra supports at most 6 atoms");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    neg[a] = ~a & (n - 1);
    for (std::size_t b = 0; b < n; ++b) {
      meet[a][b] = a & b;
      join[a][b] = a | b;
    }
  }
  return boolean_algebra_from_tables(std::move(labels), meet, join, neg, 0, n - 1);
}

BooleanAlgebra powerset_algebra(const std::vector<std::string>& points) {
  if (points.size() > 6) throw Error("powerset_algebra supports at most 6 points");
  const std::size_t n = std::size_t{1} << points.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t mask = 0; mask < n; ++mask) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (mask >> i & 1) {
        if (!first) s += ",";
        s += points[i];
        first = false;
      }
    }
    labels.push_back(s + "}");
  }
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    neg[a] = ~a & (n - 1);
    for (std::size_t b = 0; b < n; ++b) {
      meet[a][b] = a & b;
      join[a][b] = a | b;
    }
  }
  return boolean_algebra_from_tables(std::move(labels), meet, join, neg, 0, n - 1);
}

namespace {

// Closure of a nonempty subset under binary join plus downward closure;
// the smallest ideal-shaped superset short of the properness requirement.
Subset ideal_closure(const FiniteLattice& l, Subset s) {
  std::vector<bool> in(l.size(), false);
  for (std::size_t x : s) in[x] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < l.size(); ++a) {
      if (!in[a]) continue;
      for (std::size_t b = 0; b < l.size(); ++b) {
        if (in[b] && !in[l.join(a, b)]) {
          in[l.join(a, b)] = true;
          changed = true;
        }
      }
      for (std::size_t b = 0; b < l.size(); ++b) {
        if (l.leq(b, a) && !in[b]) {
          in[b] = true;
          changed = true;
        }
      }
    }
  }
  Subset out;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (in[x]) out.push_back(x);
  }
  return out;
}

Subset filter_closure(const FiniteLattice& l, Subset s) {
  std::vector<bool> in(l.size(), false);
  for (std::size_t x : s) in[x] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < l.size(); ++a) {
      if (!in[a]) continue;
      for (std::size_t b = 0; b < l.size(); ++b) {
        if (in[b] && !in[l.meet(a, b)]) {
          in[l.meet(a, b)] = true;
          changed = true;
        }
      }
      for (std::size_t b = 0; b < l.size(); ++b) {
        if (l.leq(a, b) && !in[b]) {
          in[b] = true;
          changed = true;
        }
      }
    }
  }
  Subset out;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (in[x]) out.push_back(x);
  }
  return out;
}

}  // namespace

SubsetClassification classify_subset(const FiniteLattice& l, const Subset& raw) {
  Subset s = sorted(raw);
  for (std::size_t x : s) {
    if (x >= l.size()) throw Error("subset index out of range");
  }
  SubsetClassification out;
  if (s.empty() || s.size() == l.size()) {
    out.witness = "ideals and filters are nonempty proper subsets";
    return out;
  }

  auto ideal_defect = [&]() -> std::optional<std::string> {
    for (std::size_t a : s) {
      for (std::size_t b : s) {
        if (!contains(s, l.join(a, b))) {
          return "join of " + l.label(a) + " and " + l.label(b) + " escapes the set";
        }
      }
    }
    for (std::size_t a : s) {
      for (std::size_t b = 0; b < l.size(); ++b) {
        if (l.leq(b, a) && !contains(s, b)) {
          return l.label(b) + " lies below " + l.label(a) + " but is missing";
        }
      }
    }
    return std::nullopt;
  };
  auto filter_defect = [&]() -> std::optional<std::string> {
    for (std::size_t a : s) {
      for (std::size_t b : s) {
        if (!contains(s, l.meet(a, b))) {
          return "meet of " + l.label(a) + " and " + l.label(b) + " escapes the set";
        }
      }
    }
    for (std::size_t a : s) {
      for (std::size_t b = 0; b < l.size(); ++b) {
        if (l.leq(a, b) && !contains(s, b)) {
          return l.label(b) + " lies above " + l.label(a) + " but is missing";
        }
      }
    }
    return std::nullopt;
  };

  auto ideal_miss = ideal_defect();
  auto filter_miss = filter_defect();
  out.is_ideal = !ideal_miss.has_value();
  out.is_filter = !filter_miss.has_value();
  if (!out.is_ideal && !out.is_filter) {
    out.witness = *ideal_miss + "; " + *filter_miss;
    return out;
  }

  if (out.is_ideal) {
    out.is_prime = true;
    for (std::size_t a = 0; a < l.size() && out.is_prime; ++a) {
      for (std::size_t b = 0; b < l.size() && out.is_prime; ++b) {
        if (contains(s, l.meet(a, b)) && !contains(s, a) && !contains(s, b)) {
          out.is_prime = false;
          out.witness = "meet of " + l.label(a) + " and " + l.label(b) +
                        " is inside but neither factor is";
        }
      }
    }
    out.is_maximal = true;
    for (std::size_t x = 0; x < l.size() && out.is_maximal; ++x) {
      if (contains(s, x)) continue;
      Subset extended = s;
      extended.push_back(x);
      Subset closed = ideal_closure(l, sorted(extended));
      if (closed.size() < l.size()) out.is_maximal = false;  // proper extension
    }
  } else {
    out.is_prime = true;
    for (std::size_t a = 0; a < l.size() && out.is_prime; ++a) {
      for (std::size_t b = 0; b < l.size() && out.is_prime; ++b) {
        if (contains(s, l.join(a, b)) && !contains(s, a) && !contains(s, b)) {
          out.is_prime = false;
          out.witness = "join of " + l.label(a) + " and " + l.label(b) +
                        " is inside but neither factor is";
        }
      }
    }
    out.is_maximal = true;
    for (std::size_t x = 0; x < l.size() && out.is_maximal; ++x) {
      if (contains(s, x)) continue;
      Subset extended = s;
      extended.push_back(x);
      Subset closed = filter_closure(l, sorted(extended));
      if (closed.size() < l.size()) out.is_maximal = false;
    }
  }
  return out;
}

Subset generate_filter(const FiniteLattice& l, const Subset& base) {
  if (base.empty()) throw Error("generate_filter: empty base");
  Subset s = sorted(base);
  for (std::size_t x : s) {
    if (x >= l.size()) throw Error("subset index out of range");
  }
  // Meet closure first, watching for bottom.
  std::vector<bool> in(l.size(), false);
  if (l.size() > 1) {
    for (std::size_t x : s) {
      if (x == l.bottom()) {
        throw Error("not a filter base: contains bottom", Error::Category::semantic);
      }
    }
  }
  for (std::size_t x : s) in[x] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < l.size(); ++a) {
      if (!in[a]) continue;
      for (std::size_t b = a; b < l.size(); ++b) {
        if (!in[b]) continue;
        std::size_t m = l.meet(a, b);
        if (!in[m]) {
          if (m == l.bottom() && l.size() > 1) {
            throw Error("not a filter base: meet of " + l.label(a) + " and " +
                            l.label(b) + " is bottom",
                        Error::Category::semantic);
          }
          in[m] = true;
          changed = true;
        }
      }
    }
  }
  Subset closed;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (in[x]) closed.push_back(x);
  }
  return filter_closure(l, closed);
}

std::vector<Subset> ultrafilters(const BooleanAlgebra& b) {
  std::vector<Subset> out;
  for (std::size_t atom : b.atoms()) {
    Subset f;
    for (std::size_t x = 0; x < b.size(); ++x) {
      if (b.leq(atom, x)) f.push_back(x);
    }
    for (std::size_t x = 0; x < b.size(); ++x) {
      bool has = contains(f, x);
      bool has_neg = contains(f, b.neg(x));
      if (has == has_neg) {
        throw Error("ultrafilter at atom '" + b.label(atom) +
                    "' fails the dichotomy; algebra tables are inconsistent");
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t symm_diff(const BooleanAlgebra& b, std::size_t a, std::size_t c) {
  return b.join(b.meet(a, b.neg(c)), b.meet(b.neg(a), c));
}

QuotientAlgebra quotient(const BooleanAlgebra& b, const Subset& ideal_raw) {
  Subset ideal = sorted(ideal_raw);
  auto cls = classify_subset(b.lattice(), ideal);
  if (!cls.is_ideal) {
    throw Error("quotient: not a proper ideal" +
                    (cls.witness ? " (" + *cls.witness + ")" : std::string()),
                Error::Category::semantic);
  }

  const std::size_t n = b.size();
  auto related = [&](std::size_t x, std::size_t y) {
    return contains(ideal, symm_diff(b, x, y));
  };

  std::vector<std::size_t> class_of(n, SIZE_MAX);
  std::vector<Subset> classes;
  std::vector<std::size_t> representative;
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of[x] != SIZE_MAX) continue;
    std::size_t id = classes.size();
    classes.emplace_back();
    representative.push_back(x);
    for (std::size_t y = x; y < n; ++y) {
      if (class_of[y] == SIZE_MAX && related(x, y)) {
        class_of[y] = id;
        classes[id].push_back(y);
      }
    }
  }
  // ~ must be an equivalence compatible with the operations; verify rather
  // than trust the ideal axioms alone.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if ((class_of[x] == class_of[y]) != related(x, y)) {
        throw Error("quotient: relation induced by the ideal is not an equivalence");
      }
    }
  }
  const std::size_t q = classes.size();
  std::vector<std::vector<std::size_t>> qmeet(q, std::vector<std::size_t>(q));
  std::vector<std::vector<std::size_t>> qjoin(q, std::vector<std::size_t>(q));
  std::vector<std::size_t> qneg(q);
  for (std::size_t i = 0; i < q; ++i) {
    qneg[i] = class_of[b.neg(representative[i])];
    for (std::size_t j = 0; j < q; ++j) {
      qmeet[i][j] = class_of[b.meet(representative[i], representative[j])];
      qjoin[i][j] = class_of[b.join(representative[i], representative[j])];
    }
  }
  // Well-definedness: the choice of representatives must not matter.
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (class_of[b.meet(x, y)] != qmeet[class_of[x]][class_of[y]] ||
          class_of[b.join(x, y)] != qjoin[class_of[x]][class_of[y]] ||
          class_of[b.neg(x)] != qneg[class_of[x]]) {
        throw Error("quotient: operations are not well defined on the classes");
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    labels.push_back("[" + b.label(representative[i]) + "]");
  }
  BooleanAlgebra algebra = boolean_algebra_from_tables(
      std::move(labels), qmeet, qjoin, qneg, class_of[b.bottom()], class_of[b.top()]);
  return QuotientAlgebra{b,
                         std::move(ideal),
                         std::move(classes),
                         std::move(representative),
                         std::move(class_of),
                         std::move(algebra)};
}

namespace {

// Prime ideals of a finite Boolean algebra: one per atom, the elements
// disjoint from it.
std::vector<Subset> prime_ideals(const BooleanAlgebra& b) {
  std::vector<Subset> out;
  for (std::size_t atom : b.atoms()) {
    Subset ideal;
    for (std::size_t x = 0; x < b.size(); ++x) {
      if (b.meet(x, atom) == b.bottom()) ideal.push_back(x);
    }
    out.push_back(std::move(ideal));
  }
  return out;
}

}  // namespace

Subset extend_to_prime_ideal(const BooleanAlgebra& b, const Subset& ideal) {
  QuotientAlgebra q = quotient(b, ideal);
  std::vector<Subset> candidates = prime_ideals(q.algebra);
  if (candidates.empty()) {
    throw Error("quotient algebra has no prime ideal; input ideal was improper");
  }
  // Deterministic choice: compare the sorted lists of member representatives
  // lexicographically and take the least.
  auto as_representatives = [&](const Subset& classes) {
    Subset reps;
    for (std::size_t c : classes) reps.push_back(q.representative[c]);
    std::sort(reps.begin(), reps.end());
    return reps;
  };
  std::size_t best = 0;
  Subset best_reps = as_representatives(candidates[0]);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    Subset reps = as_representatives(candidates[i]);
    if (std::lexicographical_compare(reps.begin(), reps.end(), best_reps.begin(),
                                     best_reps.end())) {
      best = i;
      best_reps = std::move(reps);
    }
  }
  Subset out;
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (contains(candidates[best], q.class_of[x])) out.push_back(x);
  }
  auto check = classify_subset(b.lattice(), out);
  if (!check.is_ideal || !check.is_prime) {
    throw Error("extend_to_prime_ideal: pulled-back ideal is not prime");
  }
  for (std::size_t x : q.ideal) {
    if (!contains(out, x)) throw Error("extend_to_prime_ideal lost the input ideal");
  }
  return out;
}

Subset separating_prime_ideal(const BooleanAlgebra& b, std::size_t x, std::size_t y) {
  if (x >= b.size() || y >= b.size()) throw Error("element index out of range");
  if (x == y) throw Error("separating_prime_ideal needs two distinct elements");
  auto principal_ideal = [&](std::size_t c) {
    Subset s;
    for (std::size_t z = 0; z < b.size(); ++z) {
      if (b.leq(z, c)) s.push_back(z);
    }
    return s;
  };
  std::size_t first = b.meet(x, b.neg(y));
  if (first != b.bottom()) {
    // K contains -(x AND -y), hence y and -x; so y but not x.
    return extend_to_prime_ideal(b, principal_ideal(b.neg(first)));
  }
  std::size_t second = b.meet(b.neg(x), y);
  if (second == b.bottom()) {
    throw Error("distinct elements with bottom symmetric difference; tables broken");
  }
  return extend_to_prime_ideal(b, principal_ideal(b.neg(second)));
}

StoneRepresentation stone_representation(const BooleanAlgebra& b) {
  std::vector<Subset> filters = ultrafilters(b);
  const std::size_t k = filters.size();
  if (k > 63) throw Error("stone_representation supports at most 63 ultrafilters");

  StoneRepresentation out;
  Subset atom_list = b.atoms();
  for (std::size_t i = 0; i < k; ++i) {
    out.algebra.points.push_back("U(" + b.label(atom_list[i]) + ")");
  }
  out.psi.assign(b.size(), 0);
  for (std::size_t x = 0; x < b.size(); ++x) {
    for (std::size_t i = 0; i < k; ++i) {
      if (contains(filters[i], x)) out.psi[x] |= std::uint64_t{1} << i;
    }
  }
  const std::uint64_t full = (k == 0) ? 0 : (~std::uint64_t{0} >> (64 - k));
  // psi must be an injective Boolean homomorphism.
  std::set<std::uint64_t> image;
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (!image.insert(out.psi[x]).second) {
      throw Error("stone_representation: psi is not injective");
    }
    if (out.psi[b.neg(x)] != (~out.psi[x] & full)) {
      throw Error("stone_representation: psi breaks complements");
    }
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (out.psi[b.meet(x, y)] != (out.psi[x] & out.psi[y]) ||
          out.psi[b.join(x, y)] != (out.psi[x] | out.psi[y])) {
        throw Error("stone_representation: psi breaks meet or join");
      }
    }
  }
  out.algebra.sets.assign(image.begin(), image.end());

  // Dual check on the prime ideal space: X_a = {I prime : a not in I}
  // turns top into the whole space and respects the operations.
  std::vector<Subset> ideals = prime_ideals(b);
  auto x_of = [&](std::size_t a) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      if (!contains(ideals[i], a)) mask |= std::uint64_t{1} << i;
    }
    return mask;
  };
  const std::uint64_t space = (ideals.size() == 0)
                                  ? 0
                                  : (~std::uint64_t{0} >> (64 - ideals.size()));
  if (x_of(b.top()) != space) {
    throw Error("stone_representation: X_top is not the whole prime ideal space");
  }
  for (std::size_t a = 0; a < b.size(); ++a) {
    if (x_of(b.neg(a)) != (~x_of(a) & space)) {
      throw Error("stone_representation: X_-a is not the complement of X_a");
    }
    for (std::size_t c = 0; c < b.size(); ++c) {
      if (x_of(b.meet(a, c)) != (x_of(a) & x_of(c)) ||
          x_of(b.join(a, c)) != (x_of(a) | x_of(c))) {
        throw Error("stone_representation: base identities fail");
      }
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> distribute_over_join(const BooleanAlgebra& b,
                                                         std::size_t x,
                                                         const Subset& family) {
  if (family.empty()) throw Error("distribute_over_join: empty family");
  std::size_t big_join = family[0];
  for (std::size_t i = 1; i < family.size(); ++i) {
    big_join = b.join(big_join, family[i]);
  }
  std::size_t left = b.meet(x, big_join);
  std::size_t right = b.meet(x, family[0]);
  for (std::size_t i = 1; i < family.size(); ++i) {
    right = b.join(right, b.meet(x, family[i]));
  }
  if (left != right) {
    throw Error("distributivity failed in a Boolean algebra; tables broken");
  }
  return {left, right};
}

}  // namespace setkit::boolalg
