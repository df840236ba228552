#include "setkit/order.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace setkit::order {

std::string PosetViolation::describe(const std::vector<std::string>& labels) const {
  switch (kind) {
    case Kind::reflexivity:
      return "reflexivity fails at " + labels[witnesses[0]];
    case Kind::antisymmetry:
      return "antisymmetry fails at (" + labels[witnesses[0]] + ", " +
             labels[witnesses[1]] + ")";
    case Kind::transitivity:
      return "transitivity fails at (" + labels[witnesses[0]] + ", " +
             labels[witnesses[1]] + ", " + labels[witnesses[2]] + ")";
  }
  return "unknown violation";
}

std::optional<PosetViolation> check_poset(std::size_t n,
                                          const std::vector<std::vector<bool>>& leq) {
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a][a]) {
      return PosetViolation{PosetViolation::Kind::reflexivity, {a}};
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (leq[a][b] && leq[b][a]) {
        return PosetViolation{PosetViolation::Kind::antisymmetry, {a, b}};
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (leq[b][c] && !leq[a][c]) {
          return PosetViolation{PosetViolation::Kind::transitivity, {a, b, c}};
        }
      }
    }
  }
  return std::nullopt;
}

FinitePoset::FinitePoset(std::vector<std::string> elements,
                         std::vector<std::vector<bool>> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
  if (elements_.empty()) throw Error("poset needs at least one element");
  std::set<std::string> distinct(elements_.begin(), elements_.end());
  if (distinct.size() != elements_.size()) throw Error("poset labels must be distinct");
  if (leq_.size() != elements_.size()) {
    throw Error("leq matrix has " + std::to_string(leq_.size()) + " rows for " +
                std::to_string(elements_.size()) + " elements");
  }
  for (const auto& row : leq_) {
    if (row.size() != elements_.size()) throw Error("leq matrix is not square");
  }
  if (auto v = check_poset(elements_.size(), leq_)) {
    throw Error("not a partial order: " + v->describe(elements_),
                Error::Category::semantic);
  }
}

std::size_t FinitePoset::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == label) return i;
  }
  throw Error("unknown element '" + label + "'");
}

bool FinitePoset::total() const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (!leq_[a][b] && !leq_[b][a]) return false;
    }
  }
  return true;
}

namespace {

void require_subset(const FinitePoset& p, const Subset& subset) {
  for (std::size_t i : subset) {
    if (i >= p.size()) throw Error("subset index out of range");
  }
}

}  // namespace

Extrema extrema(const FinitePoset& p, const Subset& subset) {
  if (subset.empty()) throw Error("extrema of the empty subset is undefined");
  require_subset(p, subset);
  Extrema out;
  for (std::size_t a : subset) {
    bool minimal = true, maximal = true;
    bool below_all = true, above_all = true;
    for (std::size_t b : subset) {
      if (b == a) continue;
      if (p.leq(b, a) && !p.leq(a, b)) minimal = false;
      if (p.leq(a, b) && !p.leq(b, a)) maximal = false;
      if (!p.leq(a, b)) below_all = false;
      if (!p.leq(b, a)) above_all = false;
    }
    if (minimal) out.minimal.push_back(a);
    if (maximal) out.maximal.push_back(a);
    if (below_all && !out.least) out.least = a;
    if (above_all && !out.greatest) out.greatest = a;
  }
  return out;
}

Bounds bounds(const FinitePoset& p, const Subset& subset) {
  if (subset.empty()) throw Error("bounds of the empty subset are undefined");
  require_subset(p, subset);
  Bounds out;
  for (std::size_t c = 0; c < p.size(); ++c) {
    bool lower = true, upper = true;
    for (std::size_t a : subset) {
      if (!p.leq(c, a)) lower = false;
      if (!p.leq(a, c)) upper = false;
    }
    if (lower) out.lower.push_back(c);
    if (upper) out.upper.push_back(c);
  }
  for (std::size_t c : out.lower) {
    bool greatest = true;
    for (std::size_t d : out.lower) {
      if (!p.leq(d, c)) greatest = false;
    }
    if (greatest) {
      out.inf = c;
      break;
    }
  }
  for (std::size_t c : out.upper) {
    bool least = true;
    for (std::size_t d : out.upper) {
      if (!p.leq(c, d)) least = false;
    }
    if (least) {
      out.sup = c;
      break;
    }
  }
  return out;
}

FinitePoset linear_extension(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<bool>> m = p.matrix();
  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> incomparable;
    for (std::size_t a = 0; a < n && !incomparable; ++a) {
      for (std::size_t b = 0; b < n && !incomparable; ++b) {
        if (a != b && !m[a][b] && !m[b][a]) incomparable = {a, b};
      }
    }
    if (!incomparable) break;
    auto [a, b] = *incomparable;
    // M' = M plus {<x, y> : x <= a and b <= y}; a ends up below b.
    std::vector<std::vector<bool>> next = m;
    for (std::size_t x = 0; x < n; ++x) {
      if (!m[x][a]) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (m[b][y]) next[x][y] = true;
      }
    }
    m = std::move(next);
  }
  FinitePoset out(p.elements(), m);
  if (!out.total()) throw Error("linear_extension failed to reach a total order");
  return out;
}

TerminationResult is_terminating(const ReductionSystem& r) {
  const std::size_t n = r.carrier.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : r.steps) {
    if (a >= n || b >= n) throw Error("reduction step outside the carrier");
    adj[a].push_back(b);
  }
  // Iterative DFS with colors; a back edge yields the cycle witness.
  std::vector<int> color(n, 0);  // 0 fresh, 1 on stack, 2 done
  std::vector<std::size_t> parent(n, SIZE_MAX);
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [v, next_edge] = stack.back();
      if (next_edge < adj[v].size()) {
        std::size_t w = adj[v][next_edge++];
        if (color[w] == 1) {
          std::vector<std::size_t> cycle{w};
          for (std::size_t u = v; u != w; u = parent[u]) cycle.push_back(u);
          std::reverse(cycle.begin() + 1, cycle.end());
          return {false, cycle};
        }
        if (color[w] == 0) {
          color[w] = 1;
          parent[w] = v;
          stack.emplace_back(w, 0);
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  return {true, {}};
}

DownSetLattice down_set_lattice(const FinitePoset& p, std::size_t bound) {
  const std::size_t n = p.size();
  if (n > bound) {
    throw Error("down_set_lattice: poset has " + std::to_string(n) +
                " elements, above the enumeration bound " + std::to_string(bound) +
                " (2^" + std::to_string(n) + " candidate subsets)");
  }
  DownSetLattice out{p, {}, std::vector<std::size_t>(n, 0)};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (std::size_t t = 0; t < n && closed; ++t) {
      if (!(mask >> t & 1)) continue;
      for (std::size_t s = 0; s < n && closed; ++s) {
        if (p.leq(s, t) && !(mask >> s & 1)) closed = false;
      }
    }
    if (closed) out.downsets.push_back(mask);
  }
  for (std::size_t t = 0; t < n; ++t) {
    std::uint64_t principal = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (p.leq(s, t)) principal |= std::uint64_t{1} << s;
    }
    auto it = std::find(out.downsets.begin(), out.downsets.end(), principal);
    out.embedding[t] = static_cast<std::size_t>(it - out.downsets.begin());
  }
  return out;
}

FinitePoset inclusion_poset(const DownSetLattice& l) {
  std::vector<std::string> labels;
  labels.reserve(l.downsets.size());
  for (std::uint64_t mask : l.downsets) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < l.base.size(); ++i) {
      if (mask >> i & 1) {
        if (!first) s += ",";
        s += l.base.label(i);
        first = false;
      }
    }
    s += "}";
    labels.push_back(std::move(s));
  }
  const std::size_t m = l.downsets.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      leq[i][j] = (l.downsets[i] & ~l.downsets[j]) == 0;
    }
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

IrreduciblesAndCovers irreducibles_and_covers(const FinitePoset& lattice_order) {
  const FinitePoset& p = lattice_order;
  const std::size_t n = p.size();
  // Join table; rejects posets that are not join-semilattices.
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto bd = bounds(p, {a, b});
      if (!bd.sup) {
        throw Error("not a lattice: {" + p.label(a) + ", " + p.label(b) +
                        "} has no supremum",
                    Error::Category::semantic);
      }
      join[a][b] = *bd.sup;
    }
  }
  std::optional<std::size_t> bottom;
  for (std::size_t a = 0; a < n; ++a) {
    bool least = true;
    for (std::size_t b = 0; b < n; ++b) {
      if (!p.leq(a, b)) least = false;
    }
    if (least) bottom = a;
  }

  IrreduciblesAndCovers out;
  for (std::size_t s = 0; s < n; ++s) {
    if (bottom && s == *bottom) continue;
    bool irreducible = true;
    for (std::size_t r = 0; r < n && irreducible; ++r) {
      for (std::size_t t = 0; t < n && irreducible; ++t) {
        if (join[r][t] == s && r != s && t != s) irreducible = false;
      }
    }
    if (irreducible) out.join_irreducibles.push_back(s);
  }
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t || !p.leq(s, t)) continue;
      bool cover = true;
      for (std::size_t v = 0; v < n && cover; ++v) {
        if (v != s && v != t && p.leq(s, v) && p.leq(v, t)) cover = false;
      }
      if (cover) out.covers.emplace_back(s, t);
    }
  }
  return out;
}

IrreduciblesAndCovers irreducibles_and_covers(const DownSetLattice& l) {
  return irreducibles_and_covers(inclusion_poset(l));
}

std::uint64_t greatest_fixpoint(std::size_t n,
                                const std::function<std::uint64_t(std::uint64_t)>& h,
                                bool full_check) {
  if (n > 63) throw Error("greatest_fixpoint supports at most 63 points");
  const std::uint64_t full = (n == 0) ? 0 : (~std::uint64_t{0} >> (64 - n));
  auto apply = [&](std::uint64_t x) { return h(x) & full; };

  auto report = [&](std::uint64_t x, std::uint64_t y) {
    throw Error("map is not monotone: h(" + std::to_string(x) + ") is not below h(" +
                std::to_string(y) + ") although the arguments are nested");
  };
  if (full_check) {
    if (n > 16) throw Error("full monotonicity check supports at most 16 points");
    for (std::uint64_t y = 0; y <= full; ++y) {
      std::uint64_t hy = apply(y);
      for (std::uint64_t x = y;; x = (x - 1) & y) {  // all submasks of y
        if ((apply(x) & ~hy) != 0) report(x, y);
        if (x == 0) break;
      }
      if (y == full) break;
    }
  } else {
    std::mt19937_64 rng(0x5e7c0de);  // fixed seed: deterministic spot check
    for (int trial = 0; trial < 256; ++trial) {
      std::uint64_t y = rng() & full;
      std::uint64_t x = rng() & y;
      if ((apply(x) & ~apply(y)) != 0) report(x, y);
    }
  }

  std::uint64_t current = full;
  for (;;) {
    std::uint64_t next = apply(current);
    if ((next & ~current) != 0) {
      throw Error("map is not monotone: h(S) is not contained in S after iteration");
    }
    if (next == current) return current;
    current = next;
  }
}

}  // namespace setkit::order
