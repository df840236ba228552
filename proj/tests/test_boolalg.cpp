#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>

#include "setkit/boolalg.hpp"

using namespace setkit;
using namespace setkit::boolalg;

namespace {

FinitePoset poset_from_pairs(std::vector<std::string> elements,
                             const std::vector<std::pair<std::string, std::string>>& below) {
  const std::size_t n = elements.size();
  auto index = [&](const std::string& l) {
    for (std::size_t i = 0; i < n; ++i) {
      if (elements[i] == l) return i;
    }
    throw std::runtime_error("bad label " + l);
  };
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [a, b] : below) leq[index(a)][index(b)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
      }
    }
  }
  return FinitePoset(std::move(elements), std::move(leq));
}

FinitePoset divisors_of_24() {
  std::vector<std::string> labels{"1", "2", "3", "4", "6", "8", "12", "24"};
  std::vector<int> value{1, 2, 3, 4, 6, 8, 12, 24};
  std::vector<std::vector<bool>> leq(8, std::vector<bool>(8, false));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) leq[i][j] = value[j] % value[i] == 0;
  }
  return FinitePoset(std::move(labels), std::move(leq));
}

FiniteLattice diamond() {
  return lattice_from_poset(poset_from_pairs(
      {"bot", "a", "b", "c", "top"},
      {{"bot", "a"}, {"bot", "b"}, {"bot", "c"}, {"a", "top"}, {"b", "top"},
       {"c", "top"}}));
}

// Pentagon: bot < a < c < top and bot < b < top with b incomparable to a, c.
FiniteLattice pentagon() {
  return lattice_from_poset(poset_from_pairs(
      {"bot", "a", "b", "c", "top"},
      {{"bot", "a"}, {"a", "c"}, {"c", "top"}, {"bot", "b"}, {"b", "top"}}));
}

Subset subset_of_mask(std::uint64_t mask) {
  Subset s;
  for (std::size_t i = 0; i < 64; ++i) {
    if (mask >> i & 1) s.push_back(i);
  }
  return s;
}

std::uint64_t mask_of_subset(const Subset& s) {
  std::uint64_t mask = 0;
  for (std::size_t x : s) mask |= std::uint64_t{1} << x;
  return mask;
}

// --- brute-force oracle, written against the raw tables only ---

struct RawFlags {
  bool ideal, filter, prime_ideal, prime_filter;
};

RawFlags raw_classify(const FiniteLattice& l, std::uint64_t mask) {
  const std::size_t n = l.size();
  auto has = [&](std::size_t x) { return (mask >> x & 1) != 0; };
  bool proper = mask != 0 && mask != (std::uint64_t{1} << n) - 1;
  RawFlags f{proper, proper, true, true};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (has(a) && has(b) && !has(l.join(a, b))) f.ideal = false;
      if (has(a) && l.leq(b, a) && !has(b)) f.ideal = false;
      if (has(a) && has(b) && !has(l.meet(a, b))) f.filter = false;
      if (has(a) && l.leq(a, b) && !has(b)) f.filter = false;
      if (has(l.meet(a, b)) && !has(a) && !has(b)) f.prime_ideal = false;
      if (has(l.join(a, b)) && !has(a) && !has(b)) f.prime_filter = false;
    }
  }
  return f;
}

std::vector<std::uint64_t> all_ideals(const FiniteLattice& l) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l.size()); ++mask) {
    if (raw_classify(l, mask).ideal) out.push_back(mask);
  }
  return out;
}

std::vector<std::uint64_t> all_filters(const FiniteLattice& l) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l.size()); ++mask) {
    if (raw_classify(l, mask).filter) out.push_back(mask);
  }
  return out;
}

bool maximal_in(const std::vector<std::uint64_t>& family, std::uint64_t mask) {
  for (std::uint64_t other : family) {
    if (other != mask && (mask & ~other) == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("lattice_from_poset fills tables or names a failing pair") {
  auto power2 = order::down_set_lattice(poset_from_pairs({"1", "2"}, {}));
  FiniteLattice l = lattice_from_poset(order::inclusion_poset(power2));
  CHECK(l.size() == 4);
  CHECK(l.label(l.bottom()) == "{}");
  CHECK(l.label(l.top()) == "{1,2}");
  CHECK(l.meet(1, 2) == l.bottom());  // {1} meet {2} = {}
  CHECK(l.join(1, 2) == l.top());

  FinitePoset bad = poset_from_pairs(
      {"bot", "A", "B", "C", "D", "E", "F", "G", "H", "I", "J", "top"},
      {{"bot", "A"}, {"bot", "B"}, {"bot", "C"}, {"bot", "D"},
       {"A", "E"}, {"A", "F"}, {"B", "F"}, {"C", "E"}, {"C", "G"}, {"D", "I"},
       {"E", "H"}, {"F", "H"}, {"F", "I"}, {"G", "I"}, {"G", "J"},
       {"H", "top"}, {"I", "top"}, {"J", "top"}});
  CHECK_THROWS_WITH_AS(lattice_from_poset(bad),
                       "not a lattice: {A, C} has no supremum", Error);

  FiniteLattice one = lattice_from_poset(poset_from_pairs({"x"}, {}));
  CHECK(one.bottom() == one.top());
}

TEST_CASE("is_distributive finds the diamond witness") {
  auto d = is_distributive(diamond());
  CHECK_FALSE(d.distributive);
  REQUIRE(d.witness.has_value());
  CHECK(*d.witness == std::array<std::size_t, 3>{1, 2, 3});  // (a, b, c)

  CHECK(is_distributive(lattice_from_poset(divisors_of_24())).distributive);
  auto chain = lattice_from_poset(
      poset_from_pairs({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}));
  CHECK(is_distributive(chain).distributive);
  CHECK_FALSE(is_distributive(pentagon()).distributive);
}

TEST_CASE("boolean_structure complements or complains") {
  BooleanAlgebra b = powerset_algebra({"1", "2", "3"});
  for (std::size_t x = 0; x < 8; ++x) {
    CHECK(b.neg(x) == (~x & 7));  // set complement under the mask labelling
  }

  auto chain3 = lattice_from_poset(
      poset_from_pairs({"bot", "mid", "top"}, {{"bot", "mid"}, {"mid", "top"}}));
  CHECK_THROWS_WITH_AS(boolean_structure(chain3),
                       "not a Boolean algebra: element 'mid' has no complement",
                       Error);

  auto two = lattice_from_poset(poset_from_pairs({"bot", "top"}, {{"bot", "top"}}));
  BooleanAlgebra b2 = boolean_structure(two);
  CHECK(b2.neg(b2.bottom()) == b2.top());
  CHECK(b2.neg(b2.top()) == b2.bottom());

  CHECK_THROWS_AS(boolean_structure(diamond()), Error);
}

TEST_CASE("classify_subset on the divisor lattice and the diamond") {
  FiniteLattice d24 = lattice_from_poset(divisors_of_24());
  auto index_set = [&](std::initializer_list<const char*> labels) {
    Subset s;
    for (const char* l : labels) s.push_back(d24.poset().index_of(l));
    std::sort(s.begin(), s.end());
    return s;
  };
  auto ideal = classify_subset(d24, index_set({"1", "2", "3", "6"}));
  CHECK(ideal.is_ideal);
  CHECK_FALSE(ideal.is_filter);

  auto not_ideal = classify_subset(d24, index_set({"1", "2", "3", "4", "6"}));
  CHECK_FALSE(not_ideal.is_ideal);
  CHECK_FALSE(not_ideal.is_filter);
  CHECK(not_ideal.witness.has_value());

  FiniteLattice dia = diamond();
  auto top_a = classify_subset(dia, {1, 4});  // {a, top}
  CHECK(top_a.is_filter);
  CHECK(top_a.is_maximal);
  CHECK_FALSE(top_a.is_prime);

  // Flags agree with the enumeration oracle on whole small lattices.
  for (const FiniteLattice& l : {diamond(), pentagon(), d24}) {
    auto ideals = all_ideals(l);
    auto filters = all_filters(l);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << l.size()) - 1; ++mask) {
      auto flags = raw_classify(l, mask);
      if (!flags.ideal && !flags.filter) continue;
      auto c = classify_subset(l, subset_of_mask(mask));
      CHECK(c.is_ideal == flags.ideal);
      CHECK(c.is_filter == flags.filter);
      if (flags.ideal) {
        CHECK(c.is_prime == flags.prime_ideal);
        CHECK(c.is_maximal == maximal_in(ideals, mask));
      } else {
        CHECK(c.is_prime == flags.prime_filter);
        CHECK(c.is_maximal == maximal_in(filters, mask));
      }
    }
  }
}

TEST_CASE("generate_filter closes a base or rejects it") {
  BooleanAlgebra b = powerset_algebra({"1", "2", "3"});
  // Masks: {1,2} = 0b011 = 3, {2,3} = 0b110 = 6.
  Subset filter = generate_filter(b.lattice(), {3, 6});
  // Smallest filter: {2}, {1,2}, {2,3}, {1,2,3}.
  CHECK(filter == Subset{2, 3, 6, 7});

  Subset top_only = generate_filter(b.lattice(), {7});
  CHECK(top_only == Subset{7});

  CHECK_THROWS_WITH_AS(generate_filter(b.lattice(), {1, 2}),
                       "not a filter base: meet of {1} and {2} is bottom", Error);
}

TEST_CASE("ultrafilters are the point filters") {
  BooleanAlgebra b2 = powerset_algebra({"1", "2"});
  auto uf2 = ultrafilters(b2);
  REQUIRE(uf2.size() == 2);
  CHECK(uf2[0] == Subset{1, 3});  // {1}, {1,2}
  CHECK(uf2[1] == Subset{2, 3});  // {2}, {1,2}

  auto two = boolean_structure(
      lattice_from_poset(poset_from_pairs({"bot", "top"}, {{"bot", "top"}})));
  auto uf = ultrafilters(two);
  REQUIRE(uf.size() == 1);
  CHECK(uf[0] == Subset{1});

  BooleanAlgebra b3 = powerset_algebra({"1", "2", "3"});
  auto uf3 = ultrafilters(b3);
  CHECK(uf3.size() == 3);
  // Against the enumeration oracle: exactly the maximal filters.
  auto filters = all_filters(b3.lattice());
  std::set<std::uint64_t> maximal;
  for (std::uint64_t f : filters) {
    if (maximal_in(filters, f)) maximal.insert(f);
  }
  std::set<std::uint64_t> reported;
  for (const auto& f : uf3) reported.insert(mask_of_subset(f));
  CHECK(reported == maximal);
}

TEST_CASE("symmetric difference identities") {
  BooleanAlgebra b = powerset_algebra({"1", "2", "3"});
  for (std::size_t a = 0; a < b.size(); ++a) {
    CHECK(symm_diff(b, a, a) == b.bottom());
    CHECK(symm_diff(b, a, b.bottom()) == a);
    for (std::size_t c = 0; c < b.size(); ++c) {
      std::size_t d = symm_diff(b, a, c);
      CHECK(d == (a ^ c));  // set symmetric difference in the powerset
      CHECK(d == symm_diff(b, c, a));
      CHECK(d == symm_diff(b, b.neg(a), b.neg(c)));
      CHECK(d == b.meet(b.join(a, c), b.neg(b.meet(a, c))));
      for (std::size_t e = 0; e < b.size(); ++e) {
        CHECK(b.meet(d, e) == symm_diff(b, b.meet(a, e), b.meet(c, e)));
      }
    }
  }
}

TEST_CASE("quotient by an ideal") {
  BooleanAlgebra b = powerset_algebra({"1", "2", "3"});

  // Trivial ideal: the quotient relabels the algebra one to one.
  auto q0 = quotient(b, {0});
  CHECK(q0.classes.size() == b.size());

  // Ideal of everything avoiding point 3 (masks without bit 2).
  Subset avoid3{0, 1, 2, 3};
  auto q = quotient(b, avoid3);
  CHECK(q.classes.size() == 2);
  // a in I iff a ~ bottom.
  for (std::size_t x = 0; x < b.size(); ++x) {
    bool in_ideal = std::binary_search(avoid3.begin(), avoid3.end(), x);
    CHECK((q.class_of[x] == q.class_of[b.bottom()]) == in_ideal);
  }
  // The projection is a homomorphism.
  for (std::size_t x = 0; x < b.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      CHECK(q.algebra.meet(q.class_of[x], q.class_of[y]) == q.class_of[b.meet(x, y)]);
      CHECK(q.algebra.join(q.class_of[x], q.class_of[y]) == q.class_of[b.join(x, y)]);
    }
    CHECK(q.algebra.neg(q.class_of[x]) == q.class_of[b.neg(x)]);
  }

  // Quotient by any prime ideal has exactly two elements.
  for (std::size_t atom : b.atoms()) {
    Subset prime;
    for (std::size_t x = 0; x < b.size(); ++x) {
      if (b.meet(x, atom) == b.bottom()) prime.push_back(x);
    }
    CHECK(quotient(b, prime).classes.size() == 2);
  }

  CHECK_THROWS_AS(quotient(b, Subset{1, 2}), Error);         // not an ideal
  CHECK_THROWS_AS(quotient(b, subset_of_mask(0xff)), Error);  // improper
}

TEST_CASE("extend_to_prime_ideal picks the lexicographically least pullback") {
  BooleanAlgebra b2 = powerset_algebra({"1", "2"});
  // From the trivial ideal, candidates {0,1} and {0,2}; the first wins.
  CHECK(extend_to_prime_ideal(b2, {0}) == Subset{0, 1});

  // A prime ideal extends to itself (two-element quotient).
  BooleanAlgebra b3 = powerset_algebra({"1", "2", "3"});
  Subset prime{0, 1, 2, 3};  // everything missing point 3
  CHECK(extend_to_prime_ideal(b3, prime) == prime);

  // Always prime, always containing the input.
  for (std::size_t c = 0; c < 7; ++c) {  // principal ideals below non-top elements
    Subset ideal;
    for (std::size_t x = 0; x < b3.size(); ++x) {
      if (b3.leq(x, c)) ideal.push_back(x);
    }
    Subset k = extend_to_prime_ideal(b3, ideal);
    auto flags = classify_subset(b3.lattice(), k);
    CHECK(flags.is_ideal);
    CHECK(flags.is_prime);
    CHECK(std::includes(k.begin(), k.end(), ideal.begin(), ideal.end()));
  }
}

TEST_CASE("separating_prime_ideal separates distinct elements") {
  BooleanAlgebra b2 = powerset_algebra({"1", "2"});
  // x = {1}, y = {1,2}: the case split lands on the ideal containing x.
  Subset k = separating_prime_ideal(b2, 1, 3);
  CHECK(k == Subset{0, 1});

  // bottom vs top: any prime ideal contains bottom and misses top.
  Subset k2 = separating_prime_ideal(b2, b2.bottom(), b2.top());
  CHECK(std::binary_search(k2.begin(), k2.end(), b2.bottom()));
  CHECK_FALSE(std::binary_search(k2.begin(), k2.end(), b2.top()));

  CHECK_THROWS_AS(separating_prime_ideal(b2, 1, 1), Error);

  // Exhaustive contract check on algebras up to 16 elements.
  for (std::size_t atoms = 1; atoms <= 4; ++atoms) {
    BooleanAlgebra b = free_boolean_algebra(atoms);
    for (std::size_t x = 0; x < b.size(); ++x) {
      for (std::size_t y = 0; y < b.size(); ++y) {
        if (x == y) continue;
        Subset sep = separating_prime_ideal(b, x, y);
        auto flags = classify_subset(b.lattice(), sep);
        CHECK(flags.is_ideal);
        CHECK(flags.is_prime);
        bool has_x = std::binary_search(sep.begin(), sep.end(), x);
        bool has_y = std::binary_search(sep.begin(), sep.end(), y);
        CHECK(has_x != has_y);
      }
    }
  }
}

TEST_CASE("stone representation") {
  auto two = boolean_structure(
      lattice_from_poset(poset_from_pairs({"bot", "top"}, {{"bot", "top"}})));
  auto s2 = stone_representation(two);
  CHECK(s2.algebra.points.size() == 1);
  CHECK(s2.psi[two.bottom()] == 0);
  CHECK(s2.psi[two.top()] == 1);

  BooleanAlgebra b3 = powerset_algebra({"1", "2", "3"});
  auto s3 = stone_representation(b3);
  CHECK(s3.algebra.points.size() == 3);
  CHECK(s3.algebra.sets.size() == 8);
  // The image is the full powerset of the three points, so psi is a
  // relabelling; it is order-preserving both ways.
  for (std::size_t x = 0; x < b3.size(); ++x) {
    for (std::size_t y = 0; y < b3.size(); ++y) {
      CHECK(((s3.psi[x] & ~s3.psi[y]) == 0) == b3.leq(x, y));
    }
  }

  // Abstract four-element algebra: two points, atoms map to singletons.
  BooleanAlgebra b = free_boolean_algebra(2);
  auto s = stone_representation(b);
  CHECK(s.algebra.points.size() == 2);
  for (std::size_t atom : b.atoms()) {
    CHECK(std::popcount(s.psi[atom]) == 1);
  }
  // Image closed under the set operations.
  std::set<std::uint64_t> image(s.algebra.sets.begin(), s.algebra.sets.end());
  std::uint64_t full = (1u << s.algebra.points.size()) - 1;
  for (std::uint64_t a : image) {
    CHECK(image.count(~a & full));
    for (std::uint64_t c : image) {
      CHECK(image.count(a & c));
      CHECK(image.count(a | c));
    }
  }
}

TEST_CASE("distribute_over_join returns equal sides") {
  BooleanAlgebra b = powerset_algebra({"1", "2", "3", "4"});
  auto [l1, r1] = distribute_over_join(b, 5, {3});
  CHECK(l1 == r1);
  CHECK(l1 == b.meet(5, 3));

  auto [l2, r2] = distribute_over_join(b, b.top(), {1, 2, 8});
  CHECK(l2 == r2);
  CHECK(l2 == (1 | 2 | 8));

  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t x = rng() % b.size();
    Subset family;
    std::size_t len = 1 + rng() % 4;
    for (std::size_t i = 0; i < len; ++i) family.push_back(rng() % b.size());
    auto [lhs, rhs] = distribute_over_join(b, x, family);
    CHECK(lhs == rhs);
  }
  CHECK_THROWS_AS(distribute_over_join(b, 0, {}), Error);
}

TEST_CASE("prime equals maximal in Boolean algebras") {
  for (std::size_t atoms = 1; atoms <= 4; ++atoms) {
    BooleanAlgebra b = free_boolean_algebra(atoms);
    auto ideals = all_ideals(b.lattice());
    auto filters = all_filters(b.lattice());
    for (std::uint64_t mask : ideals) {
      CHECK(raw_classify(b.lattice(), mask).prime_ideal == maximal_in(ideals, mask));
    }
    for (std::uint64_t mask : filters) {
      CHECK(raw_classify(b.lattice(), mask).prime_filter == maximal_in(filters, mask));
    }
    // Every filter extends to an ultrafilter.
    std::vector<std::uint64_t> ultra;
    for (std::uint64_t f : filters) {
      if (maximal_in(filters, f)) ultra.push_back(f);
    }
    CHECK(ultra.size() == atoms);
    for (std::uint64_t f : filters) {
      bool extended = false;
      for (std::uint64_t u : ultra) {
        if ((f & ~u) == 0) extended = true;
      }
      CHECK(extended);
    }
  }
}

TEST_CASE("maximal filters are prime in distributive lattices") {
  std::vector<FiniteLattice> lattices;
  lattices.push_back(lattice_from_poset(divisors_of_24()));
  lattices.push_back(lattice_from_poset(
      poset_from_pairs({"1", "2", "3", "4"}, {{"1", "2"}, {"2", "3"}, {"3", "4"}})));
  lattices.push_back(lattice_from_poset(order::inclusion_poset(
      order::down_set_lattice(poset_from_pairs({"x", "y", "z"}, {{"x", "y"}})))));
  for (const FiniteLattice& l : lattices) {
    REQUIRE(is_distributive(l).distributive);
    auto filters = all_filters(l);
    for (std::uint64_t f : filters) {
      if (maximal_in(filters, f)) {
        CHECK(raw_classify(l, f).prime_filter);
      }
    }
  }
  // ... but not in the diamond: its maximal two-element filters fail.
  FiniteLattice dia = diamond();
  auto filters = all_filters(dia);
  for (std::uint64_t f : filters) {
    if (maximal_in(filters, f) && std::popcount(f) == 2) {
      CHECK_FALSE(raw_classify(dia, f).prime_filter);
    }
  }
}

TEST_CASE("prime filters complement prime ideals") {
  std::vector<FiniteLattice> lattices{diamond(), pentagon(),
                                      lattice_from_poset(divisors_of_24())};
  for (const FiniteLattice& l : lattices) {
    const std::uint64_t full = (std::uint64_t{1} << l.size()) - 1;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      auto f = raw_classify(l, mask);
      auto c = raw_classify(l, full & ~mask);
      CHECK((f.filter && f.prime_filter) == (c.ideal && c.prime_ideal));
    }
  }
}

TEST_CASE("symmetric difference and meet form a commutative ring") {
  for (std::size_t atoms = 1; atoms <= 4; ++atoms) {
    BooleanAlgebra b = free_boolean_algebra(atoms);
    for (std::size_t a = 0; a < b.size(); ++a) {
      CHECK(symm_diff(b, a, b.bottom()) == a);  // neutral element
      CHECK(symm_diff(b, a, a) == b.bottom());  // self-inverse
      for (std::size_t c = 0; c < b.size(); ++c) {
        CHECK(symm_diff(b, a, c) == symm_diff(b, c, a));
        CHECK(b.meet(a, c) == b.meet(c, a));
        for (std::size_t d = 0; d < b.size(); ++d) {
          CHECK(symm_diff(b, symm_diff(b, a, c), d) ==
                symm_diff(b, a, symm_diff(b, c, d)));
          CHECK(b.meet(b.meet(a, c), d) == b.meet(a, b.meet(c, d)));
          CHECK(b.meet(a, symm_diff(b, c, d)) ==
                symm_diff(b, b.meet(a, c), b.meet(a, d)));
        }
      }
    }
  }
}
