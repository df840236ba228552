#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "setkit/numbers.hpp"

namespace setkit::logic {

/// Immutable propositional formula over variables, conjunction and
/// negation. The derived connectives exist as constructors only and
/// desugar on the spot: a|b = !(!a & !b), a->b = !a|b,
/// a<->b = (a->b) & (b->a).
class Formula {
 public:
  enum class Kind { var, conj, neg };

  static Formula var(std::string name);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula neg(Formula f);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula iff(Formula lhs, Formula rhs);

  Kind kind() const;
  const std::string& name() const;  // var only
  Formula left() const;             // conj only
  Formula right() const;            // conj only
  Formula child() const;            // neg only

  bool operator==(const Formula& other) const;  // structural

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Position (1-based character offset) of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("syntax error at position " + std::to_string(position) + ": " + what),
        position(position) {}
  std::size_t position;
};

/// Concrete syntax: identifiers [A-Za-z_][A-Za-z0-9_]*, operators
/// ! & | -> <-> and parentheses. Precedence ! > & > | > -> > <->;
/// -> associates to the right, the others to the left.
Formula parse(std::string_view text);

/// Canonical printer over the stored Var/And/Not tree; parse(print(f)) == f.
std::string print(const Formula& f);

using Valuation = std::map<std::string, int>;

/// Sorted distinct variable names.
std::vector<std::string> variables(const Formula& f);
std::vector<std::string> variables(const std::vector<Formula>& fs);

/// Structural evaluation: min for conjunction, 1 - v for negation.
/// Throws naming any unbound variable.
int evaluate(const Valuation& v, const Formula& f);

struct SatResult {
  bool satisfiable;
  Valuation model;  // first model in lexicographic assignment order
};

/// Backtracking search over assignments of the sorted variable list,
/// 0 before 1. Rejects inputs with more than var_bound variables.
SatResult sat(const std::vector<Formula>& formulas, std::size_t var_bound = 22);

/// One of A + {phi} and A + {!phi} stays satisfiable when A is; prefers the
/// phi branch. Rejects unsatisfiable A.
std::vector<Formula> extend_by_one(const std::vector<Formula>& a, const Formula& phi,
                                   std::size_t var_bound = 22);

struct ChainResult {
  std::vector<Formula> m_star;
  Valuation v_star;
};

/// The M_n chain: starting from satisfiable A, fold extend_by_one through
/// the enumeration (completed with any missing variables so that the read-off
/// valuation v*(x) = [x in M*] is total). Validates v* |= M* and, for every
/// enumerated formula, v* |= phi iff phi in M*.
ChainResult compactness_chain(const std::vector<Formula>& a,
                              const std::vector<Formula>& enumeration,
                              std::size_t var_bound = 22);

}  // namespace setkit::logic
