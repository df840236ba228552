#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <random>
#include <vector>

#include "setkit/codec.hpp"

using namespace setkit;
using namespace setkit::codec;

namespace {

// Independent oracle: walk the diagonal enumeration scheme directly.
// Diagonal s holds the pairs (0, s), (1, s-1), ..., (s, 0) in that order.
Natural pair_by_diagonal_walk(unsigned x, unsigned y) {
  Natural counter = 0;
  for (unsigned s = 0;; ++s) {
    for (unsigned i = 0; i <= s; ++i) {
      if (i == x && s - i == y) return counter;
      ++counter;
    }
  }
}

}  // namespace

TEST_CASE("pair reproduces the enumeration square") {
  // Row x, column y of the printed square.
  const unsigned expected[4][4] = {
      {0, 1, 3, 6}, {2, 4, 7, 11}, {5, 8, 12, 17}, {9, 13, 18, 24}};
  for (unsigned x = 0; x < 4; ++x) {
    for (unsigned y = 0; y < 4; ++y) {
      CHECK(pair(x, y) == expected[x][y]);
    }
  }
  for (unsigned x = 0; x < 8; ++x) {
    for (unsigned y = 0; y < 8; ++y) {
      CHECK(pair(x, y) == pair_by_diagonal_walk(x, y));
    }
  }
}

TEST_CASE("unpair inverts pair") {
  CHECK(unpair(0) == std::pair<Natural, Natural>(0, 0));
  CHECK(unpair(5) == std::pair<Natural, Natural>(2, 0));
  CHECK(unpair(11) == std::pair<Natural, Natural>(1, 3));
  for (unsigned x = 0; x <= 60; ++x) {
    for (unsigned y = 0; y <= 60; ++y) {
      auto [a, b] = unpair(pair(x, y));
      CHECK(a == x);
      CHECK(b == y);
    }
  }
  for (unsigned n = 0; n <= 5000; ++n) {
    auto [x, y] = unpair(n);
    CHECK(pair(x, y) == n);
  }
  // Far from the small range: a 40-digit value.
  Natural big("1234567890123456789012345678901234567890");
  auto [x, y] = unpair(big);
  CHECK(pair(x, y) == big);
}

TEST_CASE("proj components stay below the input") {
  CHECK(proj(0) == std::pair<Natural, Natural>(0, 0));
  CHECK(proj(24) == std::pair<Natural, Natural>(3, 3));
  CHECK(proj(7) == std::pair<Natural, Natural>(1, 2));
  for (unsigned n = 0; n <= 2000; ++n) {
    auto [k, l] = proj(n);
    CHECK(pair(k, l) == n);
    CHECK(k <= n);
    CHECK(l <= n);
  }
}

TEST_CASE("tuple codes") {
  CHECK(tuple_encode({Natural(5)}) == 5);
  CHECK(tuple_encode({Natural(1), Natural(2)}) == pair(1, 2));
  // Unfolding the recursion by hand: pair(pair(0,0),1) = pair(0,1) = 1.
  CHECK(tuple_encode({Natural(0), Natural(0), Natural(1)}) == 1);
  CHECK_THROWS_AS(tuple_encode({}), Error);

  CHECK(tuple_decode(1, 9) == FinSeq{Natural(9)});
  CHECK(tuple_decode(2, 7) == FinSeq{Natural(1), Natural(2)});
  CHECK(tuple_decode(3, 1) == (FinSeq{Natural(0), Natural(0), Natural(1)}));
  CHECK_THROWS_AS(tuple_decode(0, 3), Error);
}

TEST_CASE("tuple_encode bijects each fixed length") {
  // Exhaustive on entries <= 6, lengths <= 4: injective and decode-inverts.
  for (std::size_t k = 1; k <= 4; ++k) {
    std::set<Natural> seen;
    std::vector<std::size_t> digits(k, 0);
    for (;;) {
      FinSeq xs;
      for (std::size_t d : digits) xs.emplace_back(d);
      Natural code = tuple_encode(xs);
      CHECK(seen.insert(code).second);
      CHECK(tuple_decode(Natural(k), code) == xs);
      std::size_t i = k;
      while (i > 0 && digits[i - 1] == 6) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
  // Surjectivity at small codes: every n decodes to a preimage.
  for (unsigned n = 0; n < 200; ++n) {
    for (std::size_t k = 1; k <= 3; ++k) {
      CHECK(tuple_encode(tuple_decode(Natural(k), n)) == n);
    }
  }
}

TEST_CASE("sequence codes") {
  CHECK(seq_encode({Natural(5)}) == 22);
  CHECK(seq_encode({Natural(1), Natural(2)}) == 47);
  CHECK(seq_encode({Natural(0)}) == 2);
  CHECK(seq_decode(22) == FinSeq{Natural(5)});
  CHECK(seq_decode(47) == (FinSeq{Natural(1), Natural(2)}));
  // unpair(0) = (0,0): no nonempty tuple has length 0.
  CHECK_THROWS_AS(seq_decode(0), Error);
  CHECK_THROWS_AS(seq_encode({}), Error);

  std::set<Natural> seen;
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<std::size_t> digits(k, 0);
    for (;;) {
      FinSeq xs;
      for (std::size_t d : digits) xs.emplace_back(d);
      Natural code = seq_encode(xs);
      CHECK(seen.insert(code).second);  // injective across lengths
      CHECK(seq_decode(code) == xs);
      std::size_t i = k;
      while (i > 0 && digits[i - 1] == 6) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
}

namespace {

FiniteMap map_of(std::vector<std::string> dom, std::vector<std::string> cod,
                 std::vector<std::string> images) {
  std::map<std::string, std::string> graph;
  for (std::size_t i = 0; i < dom.size(); ++i) graph[dom[i]] = images[i];
  return FiniteMap(std::move(dom), std::move(cod), std::move(graph));
}

bool is_bijection(const FiniteMap& h) {
  return h.injective() && h.image().size() == h.codomain().size();
}

}  // namespace

TEST_CASE("schroeder_bernstein on identities and a rotation") {
  FiniteMap id2 = map_of({"1", "2"}, {"1", "2"}, {"1", "2"});
  FiniteMap h = schroeder_bernstein(id2, id2);
  CHECK(h("1") == "1");
  CHECK(h("2") == "2");

  // f = rotation +1 mod 3, g = identity: A0 is empty, so h = g^{-1} = id.
  FiniteMap rot = map_of({"0", "1", "2"}, {"0", "1", "2"}, {"1", "2", "0"});
  FiniteMap id3 = map_of({"0", "1", "2"}, {"0", "1", "2"}, {"0", "1", "2"});
  FiniteMap h2 = schroeder_bernstein(rot, id3);
  CHECK(is_bijection(h2));
  CHECK(h2("0") == "0");
  CHECK(h2("1") == "1");
  CHECK(h2("2") == "2");
}

TEST_CASE("schroeder_bernstein rejects non-injections naming the pair") {
  // |B| = 3 > 2 = |A|: any total g: B -> A collides (pigeonhole).
  FiniteMap f = map_of({"a1", "a2"}, {"b1", "b2", "b3"}, {"b1", "b2"});
  FiniteMap g = map_of({"b1", "b2", "b3"}, {"a1", "a2"}, {"a1", "a2", "a1"});
  CHECK_THROWS_WITH_AS(schroeder_bernstein(f, g),
                       "schroeder_bernstein: g is not injective, g(b1) = g(b3)",
                       Error);
}

namespace {

// All injections between label sets of equal size, as image index vectors.
void all_injections(std::size_t n, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

TEST_CASE("schroeder_bernstein is a bijection for every injection pair") {
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::string> a_labels, b_labels;
    for (std::size_t i = 0; i < n; ++i) {
      a_labels.push_back("a" + std::to_string(i));
      b_labels.push_back("b" + std::to_string(i));
    }
    std::vector<std::vector<std::size_t>> injections;
    all_injections(n, injections);
    for (const auto& fi : injections) {
      for (const auto& gi : injections) {
        std::vector<std::string> f_img, g_img;
        for (std::size_t i = 0; i < n; ++i) f_img.push_back(b_labels[fi[i]]);
        for (std::size_t i = 0; i < n; ++i) g_img.push_back(a_labels[gi[i]]);
        FiniteMap f = map_of(a_labels, b_labels, f_img);
        FiniteMap g = map_of(b_labels, a_labels, g_img);
        FiniteMap h = schroeder_bernstein(f, g);
        CHECK(is_bijection(h));
      }
    }
  }
}

TEST_CASE("banach_decomposition splits along the maps") {
  FiniteMap idX = map_of({"1", "2"}, {"1", "2"}, {"1", "2"});
  auto d = banach_decomposition(idX, idX);
  CHECK(d.x1 == std::vector<std::string>{"1", "2"});
  CHECK(d.x2.empty());
  CHECK(d.y1 == std::vector<std::string>{"1", "2"});
  CHECK(d.y2.empty());

  // The fixpoint iteration collapses X1 to the empty set here.
  FiniteMap f = map_of({"x"}, {"y1", "y2"}, {"y1"});
  FiniteMap g = map_of({"y1", "y2"}, {"x"}, {"x", "x"});
  auto e = banach_decomposition(f, g);
  CHECK(e.x1.empty());
  CHECK(e.x2 == std::vector<std::string>{"x"});
  CHECK(e.y1.empty());
  CHECK(e.y2 == std::vector<std::string>{"y1", "y2"});
}

TEST_CASE("banach_decomposition properties under random total maps") {
  // Exhaustive post-condition check against brute force over all subsets.
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t nx = 1 + rng() % 5, ny = 1 + rng() % 5;
    std::vector<std::string> xs, ys;
    for (std::size_t i = 0; i < nx; ++i) xs.push_back("x" + std::to_string(i));
    for (std::size_t i = 0; i < ny; ++i) ys.push_back("y" + std::to_string(i));
    std::vector<std::string> f_img, g_img;
    for (std::size_t i = 0; i < nx; ++i) f_img.push_back(ys[rng() % ny]);
    for (std::size_t i = 0; i < ny; ++i) g_img.push_back(xs[rng() % nx]);
    FiniteMap f = map_of(xs, ys, f_img);
    FiniteMap g = map_of(ys, xs, g_img);
    auto d = banach_decomposition(f, g);

    CHECK(d.x1.size() + d.x2.size() == nx);
    CHECK(d.y1.size() + d.y2.size() == ny);
    std::set<std::string> y1(d.y1.begin(), d.y1.end());
    std::set<std::string> x2(d.x2.begin(), d.x2.end());
    std::set<std::string> f_of_x1, g_of_y2;
    for (const auto& x : d.x1) f_of_x1.insert(f(x));
    for (const auto& y : d.y2) g_of_y2.insert(g(y));
    CHECK(f_of_x1 == y1);
    CHECK(g_of_y2 == x2);

    // X1 is the greatest fixpoint of H: check by brute force over subsets.
    auto h_of = [&](std::uint64_t a) {
      std::uint64_t fa = 0;
      for (std::size_t i = 0; i < nx; ++i) {
        if (a >> i & 1) fa |= std::uint64_t{1} << (std::find(ys.begin(), ys.end(), f(xs[i])) - ys.begin());
      }
      std::uint64_t g_rest = 0;
      for (std::size_t j = 0; j < ny; ++j) {
        if (!(fa >> j & 1)) {
          g_rest |= std::uint64_t{1} << (std::find(xs.begin(), xs.end(), g(ys[j])) - xs.begin());
        }
      }
      return ~g_rest & ((std::uint64_t{1} << nx) - 1);
    };
    std::uint64_t x1_mask = 0;
    for (const auto& x : d.x1) {
      x1_mask |= std::uint64_t{1} << (std::find(xs.begin(), xs.end(), x) - xs.begin());
    }
    CHECK(h_of(x1_mask) == x1_mask);
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << nx); ++a) {
      if (h_of(a) == a) CHECK((a & ~x1_mask) == 0);  // every fixpoint sits below X1
    }
  }
}
