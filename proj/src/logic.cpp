#include "setkit/logic.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace setkit::logic {

struct Formula::Node {
  Kind kind;
  std::string name;                        // var
  std::shared_ptr<const Node> lhs, rhs;    // conj: both; neg: lhs only
};

Formula Formula::var(std::string name) {
  if (name.empty()) throw Error("variable name must be nonempty");
  return Formula(std::make_shared<Node>(Node{Kind::var, std::move(name), {}, {}}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<Node>(
      Node{Kind::conj, {}, std::move(lhs.node_), std::move(rhs.node_)}));
}

Formula Formula::neg(Formula f) {
  return Formula(std::make_shared<Node>(Node{Kind::neg, {}, std::move(f.node_), {}}));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return neg(conj(neg(std::move(lhs)), neg(std::move(rhs))));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return disj(neg(std::move(lhs)), std::move(rhs));
}

Formula Formula::iff(Formula lhs, Formula rhs) {
  Formula fwd = implies(lhs, rhs);
  Formula bwd = implies(std::move(rhs), std::move(lhs));
  return conj(std::move(fwd), std::move(bwd));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::name() const {
  if (node_->kind != Kind::var) throw Error("name() on a non-variable");
  return node_->name;
}

Formula Formula::left() const {
  if (node_->kind != Kind::conj) throw Error("left() on a non-conjunction");
  return Formula(node_->lhs);
}

Formula Formula::right() const {
  if (node_->kind != Kind::conj) throw Error("right() on a non-conjunction");
  return Formula(node_->rhs);
}

Formula Formula::child() const {
  if (node_->kind != Kind::neg) throw Error("child() on a non-negation");
  return Formula(node_->lhs);
}

bool Formula::operator==(const Formula& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  std::vector<std::pair<const Node*, const Node*>> stack{{a, b}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x == y) continue;
    if (x->kind != y->kind) return false;
    switch (x->kind) {
      case Kind::var:
        if (x->name != y->name) return false;
        break;
      case Kind::conj:
        stack.emplace_back(x->lhs.get(), y->lhs.get());
        stack.emplace_back(x->rhs.get(), y->rhs.get());
        break;
      case Kind::neg:
        stack.emplace_back(x->lhs.get(), y->lhs.get());
        break;
    }
  }
  return true;
}

namespace {

struct Token {
  enum class Type { ident, bang, amp, bar, arrow, darrow, lparen, rparen, end };
  Type type;
  std::string text;
  std::size_t position;  // 1-based
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back({Token::Type::ident, std::string(text.substr(i, j - i)), pos});
      i = j;
    } else if (c == '!') {
      out.push_back({Token::Type::bang, "!", pos});
      ++i;
    } else if (c == '&') {
      out.push_back({Token::Type::amp, "&", pos});
      ++i;
    } else if (c == '|') {
      out.push_back({Token::Type::bar, "|", pos});
      ++i;
    } else if (c == '(') {
      out.push_back({Token::Type::lparen, "(", pos});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Type::rparen, ")", pos});
      ++i;
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      out.push_back({Token::Type::arrow, "->", pos});
      i += 2;
    } else if (c == '<' && i + 2 < text.size() && text[i + 1] == '-' &&
               text[i + 2] == '>') {
      out.push_back({Token::Type::darrow, "<->", pos});
      i += 3;
    } else {
      throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Type::end, "", text.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula run() {
    Formula f = parse_iff();
    if (peek().type != Token::Type::end) {
      throw ParseError(peek().position, "unexpected '" + peek().text + "'");
    }
    return f;
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  Token take() { return tokens_[index_++]; }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    while (peek().type == Token::Type::darrow) {
      Token op = take();
      lhs = Formula::iff(std::move(lhs), operand(op, [&] { return parse_implies(); }));
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (peek().type == Token::Type::arrow) {
      Token op = take();
      return Formula::implies(std::move(lhs),
                              operand(op, [&] { return parse_implies(); }));
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (peek().type == Token::Type::bar) {
      Token op = take();
      lhs = Formula::disj(std::move(lhs), operand(op, [&] { return parse_and(); }));
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (peek().type == Token::Type::amp) {
      Token op = take();
      lhs = Formula::conj(std::move(lhs), operand(op, [&] { return parse_unary(); }));
    }
    return lhs;
  }

  Formula parse_unary() {
    if (peek().type == Token::Type::bang) {
      Token op = take();
      return Formula::neg(operand(op, [&] { return parse_unary(); }));
    }
    return parse_primary();
  }

  Formula parse_primary() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::ident:
        return Formula::var(take().text);
      case Token::Type::lparen: {
        take();
        Formula inner = parse_iff();
        if (peek().type != Token::Type::rparen) {
          throw ParseError(peek().position, "missing ')'");
        }
        take();
        return inner;
      }
      case Token::Type::end:
        throw ParseError(t.position, "unexpected end of input");
      default:
        throw ParseError(t.position, "unexpected '" + t.text + "'");
    }
  }

  // Parses the operand demanded by op; an exhausted input is blamed on the
  // operator itself ("x & y |" fails at the '|').
  template <typename F>
  Formula operand(const Token& op, F&& parse_rhs) {
    if (peek().type == Token::Type::end) {
      throw ParseError(op.position, "missing operand for '" + op.text + "'");
    }
    return parse_rhs();
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(lex(text)).run(); }

namespace {

void print_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::var:
      out += f.name();
      break;
    case Formula::Kind::conj: {
      print_into(f.left(), out);  // & is left-associative
      out += " & ";
      Formula r = f.right();
      if (r.kind() == Formula::Kind::conj) {
        out += "(";
        print_into(r, out);
        out += ")";
      } else {
        print_into(r, out);
      }
      break;
    }
    case Formula::Kind::neg: {
      out += "!";
      Formula c = f.child();
      if (c.kind() == Formula::Kind::conj) {
        out += "(";
        print_into(c, out);
        out += ")";
      } else {
        print_into(c, out);
      }
      break;
    }
  }
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::var:
      out.insert(f.name());
      break;
    case Formula::Kind::conj:
      collect_variables(f.left(), out);
      collect_variables(f.right(), out);
      break;
    case Formula::Kind::neg:
      collect_variables(f.child(), out);
      break;
  }
}

}  // namespace

std::vector<std::string> variables(const Formula& f) {
  std::set<std::string> s;
  collect_variables(f, s);
  return {s.begin(), s.end()};
}

std::vector<std::string> variables(const std::vector<Formula>& fs) {
  std::set<std::string> s;
  for (const Formula& f : fs) collect_variables(f, s);
  return {s.begin(), s.end()};
}

int evaluate(const Valuation& v, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::var: {
      auto it = v.find(f.name());
      if (it == v.end()) throw Error("unbound variable '" + f.name() + "'");
      if (it->second != 0 && it->second != 1) {
        throw Error("valuation of '" + f.name() + "' is not 0 or 1");
      }
      return it->second;
    }
    case Formula::Kind::conj:
      return std::min(evaluate(v, f.left()), evaluate(v, f.right()));
    case Formula::Kind::neg:
      return 1 - evaluate(v, f.child());
  }
  throw Error("corrupt formula");
}

namespace {

// Three-valued evaluation under a partial assignment: -1 means unknown.
int evaluate_partial(const Valuation& v, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::var: {
      auto it = v.find(f.name());
      return it == v.end() ? -1 : it->second;
    }
    case Formula::Kind::conj: {
      int a = evaluate_partial(v, f.left());
      if (a == 0) return 0;
      int b = evaluate_partial(v, f.right());
      if (b == 0) return 0;
      return (a == 1 && b == 1) ? 1 : -1;
    }
    case Formula::Kind::neg: {
      int a = evaluate_partial(v, f.child());
      return a == -1 ? -1 : 1 - a;
    }
  }
  return -1;
}

bool sat_search(const std::vector<Formula>& formulas,
                const std::vector<std::string>& vars, std::size_t next, Valuation& v) {
  for (const Formula& f : formulas) {
    if (evaluate_partial(v, f) == 0) return false;
  }
  if (next == vars.size()) return true;
  for (int value : {0, 1}) {
    v[vars[next]] = value;
    if (sat_search(formulas, vars, next + 1, v)) return true;
    v.erase(vars[next]);
  }
  return false;
}

}  // namespace

SatResult sat(const std::vector<Formula>& formulas, std::size_t var_bound) {
  std::vector<std::string> vars = variables(formulas);
  if (vars.size() > var_bound) {
    throw Error("sat: " + std::to_string(vars.size()) +
                " variables exceed the bound " + std::to_string(var_bound));
  }
  Valuation v;
  if (sat_search(formulas, vars, 0, v)) {
    return {true, std::move(v)};
  }
  return {false, {}};
}

namespace {

bool member(const std::vector<Formula>& set, const Formula& f) {
  return std::any_of(set.begin(), set.end(), [&](const Formula& g) { return g == f; });
}

}  // namespace

std::vector<Formula> extend_by_one(const std::vector<Formula>& a, const Formula& phi,
                                   std::size_t var_bound) {
  if (!sat(a, var_bound).satisfiable) {
    throw Error("extend_by_one: the base set is unsatisfiable",
                Error::Category::semantic);
  }
  std::vector<Formula> with_phi = a;
  if (!member(with_phi, phi)) with_phi.push_back(phi);
  if (sat(with_phi, var_bound).satisfiable) return with_phi;
  std::vector<Formula> with_neg = a;
  Formula negated = Formula::neg(phi);
  if (!member(with_neg, negated)) with_neg.push_back(negated);
  return with_neg;
}

ChainResult compactness_chain(const std::vector<Formula>& a,
                              const std::vector<Formula>& enumeration,
                              std::size_t var_bound) {
  if (!sat(a, var_bound).satisfiable) {
    throw Error("compactness_chain: the assumption set is unsatisfiable",
                Error::Category::semantic);
  }
  // Complete the enumeration with every variable in sight so that the
  // read-off valuation decides all of them.
  std::vector<Formula> full = enumeration;
  std::vector<Formula> everything = a;
  everything.insert(everything.end(), enumeration.begin(), enumeration.end());
  for (const std::string& name : variables(everything)) {
    Formula var = Formula::var(name);
    if (!member(full, var)) full.push_back(var);
  }

  std::vector<Formula> m = a;
  for (const Formula& phi : full) {
    m = extend_by_one(m, phi, var_bound);
  }

  ChainResult out;
  out.m_star = std::move(m);
  for (const std::string& name : variables(out.m_star)) {
    out.v_star[name] = member(out.m_star, Formula::var(name)) ? 1 : 0;
  }
  for (const Formula& phi : out.m_star) {
    if (evaluate(out.v_star, phi) != 1) {
      throw Error("compactness_chain: v* fails to satisfy M*");
    }
  }
  for (const Formula& phi : full) {
    bool in_star = member(out.m_star, phi);
    if ((evaluate(out.v_star, phi) == 1) != in_star) {
      throw Error("compactness_chain: truth under v* disagrees with membership");
    }
  }
  return out;
}

}  // namespace setkit::logic
