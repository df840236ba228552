#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "setkit/numbers.hpp"

namespace setkit::codec {

/// Nonempty finite sequence of naturals.
using FinSeq = std::vector<Natural>;

/// Diagonal pairing J(x, y) = (x+y)(x+y+1)/2 + x. Bijective on pairs of
/// naturals; row x, column y of the usual enumeration square.
Natural pair(const Natural& x, const Natural& y);

/// Inverse of pair. Uses exact integer square root to locate the largest
/// triangular number below n; never floating point.
std::pair<Natural, Natural> unpair(const Natural& n);

/// Component projections (K(n), L(n)) with pair(K(n), L(n)) = n and both
/// components bounded by n.
std::pair<Natural, Natural> proj(const Natural& n);

/// Fixed-length tuple code: t(x) = x for singletons, then
/// t(x1..xk+1) = pair(t(x1..xk), xk+1). Rejects empty input.
Natural tuple_encode(const FinSeq& xs);

/// Inverse of tuple_encode at the given length k >= 1.
FinSeq tuple_decode(const Natural& k, const Natural& n);

/// Variable-length code pair(k, tuple_encode(xs)) over nonempty sequences.
/// Injective; not every natural is a code (see seq_decode).
Natural seq_encode(const FinSeq& xs);

/// Inverse of seq_encode. Codes with first pair component 0 decode to
/// nothing (no tuple of length 0 exists); those are rejected as
/// "not a sequence code".
FinSeq seq_decode(const Natural& n);

/// Total map between finite label sets, validated on construction.
class FiniteMap {
 public:
  /// Throws unless graph is total on domain with image inside codomain and
  /// both label lists are duplicate-free.
  FiniteMap(std::vector<std::string> domain, std::vector<std::string> codomain,
            std::map<std::string, std::string> graph);

  const std::vector<std::string>& domain() const { return domain_; }
  const std::vector<std::string>& codomain() const { return codomain_; }
  const std::string& operator()(const std::string& x) const;

  /// First pair of distinct domain elements sharing an image, if any.
  std::optional<std::pair<std::string, std::string>> injectivity_violation() const;
  bool injective() const { return !injectivity_violation().has_value(); }

  std::vector<std::string> image() const;

 private:
  std::vector<std::string> domain_;
  std::vector<std::string> codomain_;
  std::map<std::string, std::string> graph_;
};

/// Builds the bijection h: A -> B from injections f: A -> B and g: B -> A,
/// following the back-and-forth construction: A0 = A minus g[B],
/// A_{n+1} = g[f[A_n]], and h = f on the union of the A_n, else the unique
/// g-preimage. Rejects non-injective inputs naming a violating pair.
FiniteMap schroeder_bernstein(const FiniteMap& f, const FiniteMap& g);

struct BanachDecomposition {
  std::vector<std::string> x1, x2;  // X = X1 disjoint-union X2
  std::vector<std::string> y1, y2;  // Y = Y1 disjoint-union Y2
};

/// Splits X and Y along total maps f: X -> Y, g: Y -> X so that
/// f[X1] = Y1 and g[Y2] = X2. X1 is the greatest fixpoint of
/// H(A) = X minus g[Y minus f[A]], computed by iterating from the full set.
BanachDecomposition banach_decomposition(const FiniteMap& f, const FiniteMap& g);

}  // namespace setkit::codec
