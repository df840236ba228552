#include "setkit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "setkit/boolalg.hpp"
#include "setkit/codec.hpp"
#include "setkit/games.hpp"
#include "setkit/intervals.hpp"
#include "setkit/logic.hpp"
#include "setkit/numbers.hpp"
#include "setkit/order.hpp"
#include "setkit/setalg.hpp"

namespace setkit::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchema = "setkit/1";

struct Options {
  std::string format = "text";  // "text" or "structured"
  std::uint64_t bound = 0;      // 0 = library default
  bool decimal = false;
};

struct Printer {
  std::ostream& out;
  const Options& opt;

  void emit(const json& structured, const std::string& text) const {
    if (opt.format == "structured") {
      json doc = structured;
      doc["schema"] = kSchema;
      out << doc.dump(2) << "\n";
    } else {
      out << text;
    }
  }

  std::string rational(const Rational& q) const {
    std::string s = fraction_string(q);
    if (opt.decimal && denominator(q) != 1) {
      // Marked approximate: the exact value is the fraction. Digits come
      // from integer long division; no floating point.
      Natural num = numerator(q) < 0 ? Natural(-numerator(q)) : numerator(q);
      Natural den = denominator(q);
      std::string digits = (numerator(q) < 0 ? "-" : "") + Natural(num / den).str() + ".";
      Natural rest = num % den;
      for (int i = 0; i < 12 && rest != 0; ++i) {
        rest *= 10;
        digits += Natural(rest / den).str();
        rest %= den;
      }
      s += " (approx. " + digits + ")";
    }
    return s;
  }
};

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw Error("invalid JSON in '" + path + "': " + e.what());
  }
  return doc;
}

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  if (!obj.is_object()) throw Error(where + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed) {
      if (it.key() == k) known = true;
    }
    if (!known) throw Error("unknown field '" + it.key() + "' in " + where);
  }
}

std::vector<std::string> string_list(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw Error(where + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw Error(where + " must contain strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

// ---------------------------------------------------------------- posets

order::FinitePoset parse_poset_doc(const json& doc) {
  require_keys(doc, {"poset"}, "document");
  if (!doc.contains("poset")) throw Error("document needs a 'poset' object");
  const json& p = doc["poset"];
  require_keys(p, {"elements", "pairs", "matrix", "close"}, "'poset'");
  if (!p.contains("elements")) throw Error("'poset' needs 'elements'");
  std::vector<std::string> elements = string_list(p["elements"], "'elements'");
  const std::size_t n = elements.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));

  if (p.contains("matrix") == p.contains("pairs")) {
    throw Error("'poset' needs exactly one of 'matrix' and 'pairs'");
  }
  if (p.contains("matrix")) {
    const json& m = p["matrix"];
    if (!m.is_array() || m.size() != n) throw Error("'matrix' must have one row per element");
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i].is_array() || m[i].size() != n) throw Error("'matrix' row has wrong length");
      for (std::size_t j = 0; j < n; ++j) {
        if (!m[i][j].is_boolean() && !m[i][j].is_number_integer()) {
          throw Error("'matrix' entries must be booleans or 0/1");
        }
        leq[i][j] = m[i][j].is_boolean() ? m[i][j].get<bool>() : (m[i][j].get<int>() != 0);
      }
    }
  } else {
    auto index = [&](const std::string& label) -> std::size_t {
      for (std::size_t i = 0; i < n; ++i) {
        if (elements[i] == label) return i;
      }
      throw Error("pair mentions unknown element '" + label + "'");
    };
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;  // reflexive pairs implied
    if (!p["pairs"].is_array()) throw Error("'pairs' must be an array");
    for (const auto& pr : p["pairs"]) {
      if (!pr.is_array() || pr.size() != 2) throw Error("'pairs' entries must be [a, b]");
      leq[index(pr[0].get<std::string>())][index(pr[1].get<std::string>())] = true;
    }
    if (p.value("close", false)) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (leq[i][k] && leq[k][j]) leq[i][j] = true;
          }
        }
      }
    }
  }
  return order::FinitePoset(std::move(elements), std::move(leq));
}

order::Subset parse_subset(const order::FinitePoset& p, const json& arr,
                           const std::string& where) {
  order::Subset out;
  for (const std::string& label : string_list(arr, where)) {
    out.push_back(p.index_of(label));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string label_list(const order::FinitePoset& p, const order::Subset& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += p.label(s[i]);
  }
  return out + "}";
}

json poset_to_json(const order::FinitePoset& p) {
  json matrix = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < p.size(); ++j) row.push_back(p.leq(i, j));
    matrix.push_back(row);
  }
  return json{{"poset", {{"elements", p.elements()}, {"matrix", matrix}}}};
}

// --------------------------------------------------------------- intervals

intervals::IntervalSet parse_interval_list(const json& arr, const std::string& where) {
  if (!arr.is_array()) throw Error(where + " must be an array of endpoint pairs");
  std::vector<intervals::HalfOpen> pieces;
  for (const auto& pr : arr) {
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string()) {
      throw Error(where + " entries must be [\"lo\", \"hi\"] fraction strings");
    }
    pieces.push_back({parse_rational(pr[0].get<std::string>()),
                      parse_rational(pr[1].get<std::string>())});
  }
  return intervals::IntervalSet::normalize(std::move(pieces));
}

json interval_set_to_json(const intervals::IntervalSet& s) {
  json arr = json::array();
  for (const auto& c : s.components()) {
    arr.push_back({fraction_string(c.lo), fraction_string(c.hi)});
  }
  return arr;
}

std::string interval_set_string(const intervals::IntervalSet& s) {
  if (s.empty()) return "(empty)";
  std::string out;
  for (std::size_t i = 0; i < s.components().size(); ++i) {
    if (i) out += " u ";
    out += "]" + fraction_string(s.components()[i].lo) + ", " +
           fraction_string(s.components()[i].hi) + "]";
  }
  return out;
}

// ---------------------------------------------------------------- setalg

setalg::SetFamily parse_family_doc(const json& doc) {
  require_keys(doc, {"universe", "family"}, "document");
  if (!doc.contains("universe") || !doc.contains("family")) {
    throw Error("document needs 'universe' and 'family'");
  }
  setalg::Universe u = setalg::make_universe(string_list(doc["universe"], "'universe'"));
  setalg::SetFamily f{u, {}};
  if (!doc["family"].is_array()) throw Error("'family' must be an array of sets");
  for (const auto& member : doc["family"]) {
    f.members.push_back(u.mask_of(string_list(member, "family member")));
  }
  return f;
}

json family_to_json(const setalg::SetFamily& f) {
  json members = json::array();
  for (setalg::Mask m : f.members) members.push_back(f.universe.labels_of(m));
  return json{{"universe", f.universe.points}, {"family", members}};
}

// ----------------------------------------------------------------- games

games::Seq parse_move_list(const json& v, int alphabet, const std::string& where) {
  games::Seq out;
  if (v.is_string()) {
    if (alphabet > 10) throw Error(where + ": digit strings need an alphabet of size <= 10");
    for (char c : v.get<std::string>()) {
      if (c < '0' || c > '9') throw Error(where + ": move strings are digit strings");
      out.push_back(c - '0');
    }
  } else if (v.is_array()) {
    for (const auto& m : v) {
      if (!m.is_number_integer()) throw Error(where + ": moves must be integers");
      out.push_back(m.get<int>());
    }
  } else {
    throw Error(where + ": expected a digit string or an integer array");
  }
  for (int m : out) {
    if (m < 0 || m >= alphabet) throw Error(where + ": move outside the alphabet");
  }
  return out;
}

std::string move_string(const games::Seq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

games::GameSpec parse_game_doc(const json& doc) {
  require_keys(doc, {"game"}, "document");
  if (!doc.contains("game")) throw Error("document needs a 'game' object");
  const json& g = doc["game"];
  require_keys(g, {"alphabet", "rounds", "winning"}, "'game'");
  if (!g.contains("alphabet") || !g.contains("rounds") || !g.contains("winning")) {
    throw Error("'game' needs 'alphabet', 'rounds' and 'winning'");
  }
  int m = g["alphabet"].get<int>();
  int d = g["rounds"].get<int>();
  const json& w = g["winning"];
  if (w.is_object()) {
    require_keys(w, {"predicate"}, "'winning'");
    std::string name = w.value("predicate", "");
    if (name == "all") {
      return games::GameSpec::from_predicate(m, d, [](const games::Seq&) { return true; });
    }
    if (name == "none") {
      return games::GameSpec::from_predicate(m, d, [](const games::Seq&) { return false; });
    }
    if (name == "mirror") {
      // Angel wins iff some Demon move differs from the preceding Angel move.
      return games::GameSpec::from_predicate(m, d, [](const games::Seq& play) {
        for (std::size_t i = 1; i < play.size(); i += 2) {
          if (play[i] != play[i - 1]) return true;
        }
        return false;
      });
    }
    if (name == "sum-even") {
      return games::GameSpec::from_predicate(m, d, [](const games::Seq& play) {
        int sum = 0;
        for (int x : play) sum += x;
        return sum % 2 == 0;
      });
    }
    throw Error("unknown winning predicate '" + name +
                "' (known: all, none, mirror, sum-even)");
  }
  if (!w.is_array()) throw Error("'winning' must be a move list array or a predicate");
  std::set<games::Seq> winning;
  for (const auto& entry : w) {
    winning.insert(parse_move_list(entry, m, "'winning'"));
  }
  return games::GameSpec::from_set(m, d, std::move(winning));
}

// ------------------------------------------------------------- subcommands

Natural parse_natural(const std::string& text) {
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error("'" + text + "' is not a natural number");
    }
  }
  if (text.empty()) throw Error("empty number");
  return Natural(text);
}

int cmd_codec(const std::string& verb, const std::vector<std::string>& args,
              const Printer& p) {
  if (verb == "pair") {
    if (args.size() != 2) throw Error("codec pair needs two naturals");
    Natural value = codec::pair(parse_natural(args[0]), parse_natural(args[1]));
    p.emit(json{{"pair", value.str()}}, value.str() + "\n");
    return 0;
  }
  if (verb == "unpair") {
    if (args.size() != 1) throw Error("codec unpair needs one natural");
    auto [x, y] = codec::unpair(parse_natural(args[0]));
    p.emit(json{{"unpair", json::array({x.str(), y.str()})}},
           "(" + x.str() + ", " + y.str() + ")\n");
    return 0;
  }
  if (verb == "seq-encode") {
    if (args.empty()) throw Error("codec seq-encode needs at least one entry");
    codec::FinSeq xs;
    for (const auto& a : args) xs.push_back(parse_natural(a));
    Natural value = codec::seq_encode(xs);
    p.emit(json{{"code", value.str()}}, value.str() + "\n");
    return 0;
  }
  if (verb == "seq-decode") {
    if (args.size() != 1) throw Error("codec seq-decode needs one natural");
    codec::FinSeq xs = codec::seq_decode(parse_natural(args[0]));
    json arr = json::array();
    std::string text = "<";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      arr.push_back(xs[i].str());
      if (i) text += ", ";
      text += xs[i].str();
    }
    p.emit(json{{"sequence", arr}}, text + ">\n");
    return 0;
  }
  throw Error("unknown codec verb '" + verb + "'");
}

int cmd_order(const std::string& verb, const std::string& file, const Printer& p,
              const Options& opt) {
  json doc = load_document(file);
  if (verb == "terminates") {
    require_keys(doc, {"reduction"}, "document");
    if (!doc.contains("reduction")) throw Error("document needs a 'reduction' object");
    const json& r = doc["reduction"];
    require_keys(r, {"carrier", "steps"}, "'reduction'");
    order::ReductionSystem sys;
    sys.carrier = string_list(r["carrier"], "'carrier'");
    auto index = [&](const std::string& label) -> std::size_t {
      for (std::size_t i = 0; i < sys.carrier.size(); ++i) {
        if (sys.carrier[i] == label) return i;
      }
      throw Error("step mentions unknown element '" + label + "'");
    };
    if (!r.contains("steps") || !r["steps"].is_array()) {
      throw Error("'reduction' needs a 'steps' array");
    }
    for (const auto& st : r["steps"]) {
      if (!st.is_array() || st.size() != 2) throw Error("'steps' entries must be [a, b]");
      sys.steps.emplace_back(index(st[0].get<std::string>()),
                             index(st[1].get<std::string>()));
    }
    auto result = order::is_terminating(sys);
    if (result.terminating) {
      p.emit(json{{"terminating", true}}, "terminating\n");
      return 0;
    }
    std::vector<std::string> cycle;
    for (std::size_t i : result.cycle) cycle.push_back(sys.carrier[i]);
    std::string text = "not terminating; cycle:";
    for (const auto& c : cycle) text += " " + c;
    p.emit(json{{"terminating", false}, {"cycle", cycle}}, text + "\n");
    return 1;
  }

  if (verb == "validate") {
    // Validity is decided before construction so the violation can be shown.
    try {
      order::FinitePoset poset = parse_poset_doc(doc);
      p.emit(json{{"valid", true}, {"elements", poset.elements()}},
             "valid partial order on " + std::to_string(poset.size()) + " elements\n");
      return 0;
    } catch (const Error& e) {
      if (e.category != Error::Category::semantic) throw;
      p.emit(json{{"valid", false}, {"violation", e.what()}},
             std::string(e.what()) + "\n");
      return 1;
    }
  }

  order::FinitePoset poset = parse_poset_doc(doc);
  if (verb == "extend") {
    order::FinitePoset total = order::linear_extension(poset);
    // Readable form: elements listed in ascending order.
    std::vector<std::string> sorted = total.elements();
    std::sort(sorted.begin(), sorted.end(),
              [&](const std::string& a, const std::string& b) {
                return total.leq(total.index_of(a), total.index_of(b)) && a != b;
              });
    std::string text;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i) text += " < ";
      text += sorted[i];
    }
    json out = poset_to_json(total);
    out["chain"] = sorted;
    p.emit(out, text + "\n");
    return 0;
  }
  if (verb == "downsets") {
    auto lattice = order::down_set_lattice(poset, opt.bound ? opt.bound : 15);
    json sets = json::array();
    std::string text;
    for (std::uint64_t mask : lattice.downsets) {
      order::Subset s;
      for (std::size_t i = 0; i < poset.size(); ++i) {
        if (mask >> i & 1) s.push_back(i);
      }
      sets.push_back(label_list(poset, s));
      text += label_list(poset, s) + "\n";
    }
    p.emit(json{{"count", lattice.downsets.size()}, {"downsets", sets}},
           std::to_string(lattice.downsets.size()) + " down sets\n" + text);
    return 0;
  }
  throw Error("unknown order verb '" + verb + "'");
}

int cmd_boolalg(const std::string& verb, const std::string& file, const Printer& p) {
  json doc = load_document(file);
  json poset_doc{{"poset", doc.value("poset", json())}};
  require_keys(doc, {"poset", "subset", "ideal"}, "document");
  order::FinitePoset poset = parse_poset_doc(poset_doc);
  boolalg::FiniteLattice lattice = boolalg::lattice_from_poset(poset);

  if (verb == "classify") {
    if (!doc.contains("subset")) throw Error("classify needs a 'subset' field");
    order::Subset s = parse_subset(poset, doc["subset"], "'subset'");
    auto c = boolalg::classify_subset(lattice, s);
    json out{{"ideal", c.is_ideal},
             {"filter", c.is_filter},
             {"prime", c.is_prime},
             {"maximal", c.is_maximal}};
    std::string text = label_list(poset, s) + ":";
    text += c.is_ideal ? " ideal" : "";
    text += c.is_filter ? " filter" : "";
    if (c.is_ideal || c.is_filter) {
      text += c.is_prime ? ", prime" : ", not prime";
      text += c.is_maximal ? ", maximal" : ", not maximal";
    } else {
      text += " neither an ideal nor a filter";
    }
    if (c.witness) {
      out["witness"] = *c.witness;
      text += " (" + *c.witness + ")";
    }
    p.emit(out, text + "\n");
    return 0;
  }

  boolalg::BooleanAlgebra algebra = boolalg::boolean_structure(lattice);
  if (verb == "ultrafilters") {
    auto filters = boolalg::ultrafilters(algebra);
    json arr = json::array();
    std::string text = std::to_string(filters.size()) + " ultrafilters\n";
    for (const auto& f : filters) {
      arr.push_back(label_list(poset, f));
      text += label_list(poset, f) + "\n";
    }
    p.emit(json{{"count", filters.size()}, {"ultrafilters", arr}}, text);
    return 0;
  }
  if (verb == "quotient") {
    if (!doc.contains("ideal")) throw Error("quotient needs an 'ideal' field");
    order::Subset ideal = parse_subset(poset, doc["ideal"], "'ideal'");
    auto q = boolalg::quotient(algebra, ideal);
    json classes = json::array();
    std::string text = std::to_string(q.classes.size()) + " classes\n";
    for (std::size_t i = 0; i < q.classes.size(); ++i) {
      json members = json::array();
      for (std::size_t x : q.classes[i]) members.push_back(poset.label(x));
      classes.push_back({{"representative", poset.label(q.representative[i])},
                         {"members", members}});
      text += "[" + poset.label(q.representative[i]) + "] = " +
              label_list(poset, q.classes[i]) + "\n";
    }
    p.emit(json{{"count", q.classes.size()}, {"classes", classes}}, text);
    return 0;
  }
  if (verb == "stone") {
    auto stone = boolalg::stone_representation(algebra);
    json arr = json::array();
    std::string text = std::to_string(stone.algebra.points.size()) + " points\n";
    for (std::size_t x = 0; x < algebra.size(); ++x) {
      std::vector<std::string> image;
      for (std::size_t i = 0; i < stone.algebra.points.size(); ++i) {
        if (stone.psi[x] >> i & 1) image.push_back(stone.algebra.points[i]);
      }
      arr.push_back({{"element", algebra.label(x)}, {"psi", image}});
      text += "psi(" + algebra.label(x) + ") = {";
      for (std::size_t i = 0; i < image.size(); ++i) {
        if (i) text += ", ";
        text += image[i];
      }
      text += "}\n";
    }
    p.emit(json{{"points", stone.algebra.points}, {"psi", arr}}, text);
    return 0;
  }
  throw Error("unknown boolalg verb '" + verb + "'");
}

int cmd_sat(const std::string& verb, const std::string& file,
            const std::vector<std::string>& exprs, const Printer& p,
            const Options& opt) {
  std::size_t var_bound = opt.bound ? opt.bound : 22;
  if (verb == "solve") {
    std::vector<logic::Formula> formulas;
    for (const auto& e : exprs) formulas.push_back(logic::parse(e));
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Error("cannot open '" + file + "'");
      std::string line;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        formulas.push_back(logic::parse(line));
      }
    }
    if (formulas.empty()) throw Error("sat solve needs --expr or a formula file");
    auto result = logic::sat(formulas, var_bound);
    if (!result.satisfiable) {
      p.emit(json{{"satisfiable", false}}, "UNSAT\n");
      return 1;
    }
    json model;
    std::string text = "SAT:";
    for (const auto& [name, value] : result.model) {
      model[name] = value;
      text += " " + name + "=" + std::to_string(value);
    }
    p.emit(json{{"satisfiable", true}, {"model", model}}, text + "\n");
    return 0;
  }
  if (verb == "chain") {
    json doc = load_document(file);
    require_keys(doc, {"assumptions", "enumeration"}, "document");
    std::vector<logic::Formula> a, enumeration;
    for (const auto& s : string_list(doc.value("assumptions", json::array()),
                                     "'assumptions'")) {
      a.push_back(logic::parse(s));
    }
    for (const auto& s : string_list(doc.value("enumeration", json::array()),
                                     "'enumeration'")) {
      enumeration.push_back(logic::parse(s));
    }
    auto chain = logic::compactness_chain(a, enumeration, var_bound);
    json mstar = json::array();
    std::string text = "M*:\n";
    for (const auto& f : chain.m_star) {
      mstar.push_back(logic::print(f));
      text += "  " + logic::print(f) + "\n";
    }
    json model;
    text += "v*:";
    for (const auto& [name, value] : chain.v_star) {
      model[name] = value;
      text += " " + name + "=" + std::to_string(value);
    }
    p.emit(json{{"m_star", mstar}, {"v_star", model}}, text + "\n");
    return 0;
  }
  throw Error("unknown sat verb '" + verb + "'");
}

int cmd_setalg(const std::string& verb, const std::string& file,
               const std::vector<std::string>& args, const Printer& p) {
  if (verb == "cylinder") {
    if (args.size() < 2) throw Error("setalg cylinder needs a length and words");
    std::size_t k = std::stoul(args[0]);
    std::vector<std::string> words(args.begin() + 1, args.end());
    Rational value = setalg::cylinder_measure(k, words);
    p.emit(json{{"measure", fraction_string(value)}}, p.rational(value) + "\n");
    return 0;
  }
  setalg::SetFamily family = parse_family_doc(load_document(file));
  const auto& u = family.universe;
  if (verb == "atoms") {
    auto atoms = setalg::atom_partition(family);
    json arr = json::array();
    std::string text = std::to_string(atoms.size()) + " atoms\n";
    for (setalg::Mask a : atoms) {
      arr.push_back(u.labels_of(a));
      text += u.set_string(a) + "\n";
    }
    p.emit(json{{"count", atoms.size()}, {"atoms", arr}}, text);
    return 0;
  }
  if (verb == "algebra") {
    auto algebra = setalg::generate_algebra(family);
    json out = family_to_json(algebra);
    std::string text = std::to_string(algebra.members.size()) + " sets\n";
    for (setalg::Mask m : algebra.members) text += u.set_string(m) + "\n";
    p.emit(out, text);
    return 0;
  }
  if (verb == "pilambda") {
    auto lambda = setalg::lambda_closure(family);
    auto algebra = setalg::generate_algebra(family);
    bool equal = lambda.members == algebra.members;
    json out{{"lambda_closure", family_to_json(lambda)["family"]},
             {"generated_algebra", family_to_json(algebra)["family"]},
             {"equal", equal}};
    std::string text = "lambda closure: " + std::to_string(lambda.members.size()) +
                       " sets; generated algebra: " +
                       std::to_string(algebra.members.size()) + " sets; " +
                       (equal ? "equal" : "different") + "\n";
    p.emit(out, text);
    return 0;
  }
  throw Error("unknown setalg verb '" + verb + "'");
}

int cmd_measure(const std::string& verb, const std::string& file, const Printer& p) {
  json doc = load_document(file);
  if (verb == "length") {
    require_keys(doc, {"intervals"}, "document");
    auto set = parse_interval_list(doc.value("intervals", json::array()), "'intervals'");
    Rational len = intervals::length(set);
    p.emit(json{{"set", interval_set_to_json(set)}, {"length", fraction_string(len)}},
           interval_set_string(set) + "\nlength " + p.rational(len) + "\n");
    return 0;
  }
  if (verb == "outer") {
    require_keys(doc, {"target", "cover"}, "document");
    auto target = parse_interval_list(doc.value("target", json::array()), "'target'");
    std::vector<intervals::IntervalSet> cover;
    if (!doc.contains("cover") || !doc["cover"].is_array()) {
      throw Error("outer needs a 'cover' array of interval lists");
    }
    for (const auto& c : doc["cover"]) {
      cover.push_back(parse_interval_list(c, "cover element"));
    }
    Rational sum = intervals::outer_measure(target, cover);
    Rational len = intervals::length(target);
    p.emit(json{{"cover_sum", fraction_string(sum)},
                {"target_length", fraction_string(len)}},
           "cover sum " + p.rational(sum) + " >= target length " + p.rational(len) +
               "\n");
    return 0;
  }
  if (verb == "cara") {
    require_keys(doc, {"a", "x"}, "document");
    auto a = parse_interval_list(doc.value("a", json::array()), "'a'");
    auto x = parse_interval_list(doc.value("x", json::array()), "'x'");
    auto verdict = intervals::caratheodory_check(a, x);
    json out{{"additive", verdict.additive},
             {"inside", fraction_string(verdict.inside)},
             {"outside", fraction_string(verdict.outside)},
             {"total", fraction_string(verdict.total)}};
    std::string text = "l(x & a) = " + p.rational(verdict.inside) + ", l(x \\ a) = " +
                       p.rational(verdict.outside) + ", l(x) = " +
                       p.rational(verdict.total) +
                       (verdict.additive ? " (splits additively)\n" : " (FAILS)\n");
    p.emit(out, text);
    return verdict.additive ? 0 : 1;
  }
  throw Error("unknown measure verb '" + verb + "'");
}

int cmd_cantor(unsigned depth, const Printer& p) {
  json rows = json::array();
  std::string text = "n components length\n";
  for (unsigned n = 0; n <= depth; ++n) {
    auto c = intervals::cantor_set(n, std::max(depth, 20u));
    Rational len = c.total_length();
    rows.push_back({{"n", n},
                    {"components", c.components().size()},
                    {"length", fraction_string(len)}});
    text += std::to_string(n) + " " + std::to_string(c.components().size()) + " " +
            p.rational(len) + "\n";
  }
  p.emit(json{{"rows", rows}}, text);
  return 0;
}

int cmd_game(const std::string& verb, const std::string& file, const Printer& p,
             const Options& opt) {
  json doc = load_document(file);
  std::uint64_t bound = opt.bound ? opt.bound : 10'000'000;
  if (verb == "solve") {
    games::GameSpec g = parse_game_doc(doc);
    games::Solution sol = games::solve(g, bound);
    json table = json::array();
    std::string text = std::string("winner: ") + games::side_name(sol.winner) + "\n";
    for (const auto& [prefix, move] : sol.strategy.choice) {
      table.push_back({{"prefix", move_string(prefix)}, {"move", move}});
      text += "  <" + move_string(prefix) + "> -> " + std::to_string(move) + "\n";
    }
    p.emit(json{{"winner", games::side_name(sol.winner)}, {"strategy", table}}, text);
    return 0;
  }
  if (verb == "choice") {
    require_keys(doc, {"choice"}, "document");
    if (!doc.contains("choice")) throw Error("document needs a 'choice' object");
    const json& c = doc["choice"];
    require_keys(c, {"alphabet", "depth", "family"}, "'choice'");
    int m = c.value("alphabet", 0);
    int d = c.value("depth", 0);
    if (!c.contains("family") || !c["family"].is_array()) {
      throw Error("'choice' needs a 'family' array");
    }
    std::vector<std::set<games::Seq>> family;
    for (const auto& member : c["family"]) {
      if (!member.is_array()) throw Error("family members must be arrays of move lists");
      std::set<games::Seq> sets;
      for (const auto& s : member) sets.insert(parse_move_list(s, m, "family member"));
      family.push_back(std::move(sets));
    }
    auto chosen = games::choice_from_determinacy(family, m, d);
    json arr = json::array();
    std::string text;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      arr.push_back(move_string(chosen[i]));
      text += "f(X" + std::to_string(i) + ") = <" + move_string(chosen[i]) + ">\n";
    }
    p.emit(json{{"choices", arr}}, text);
    return 0;
  }
  throw Error("unknown game verb '" + verb + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite set-theory toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--bound", opt.bound, "enumeration bound override");
  app.add_flag("--decimal", opt.decimal, "append approximate decimals to fractions");

  std::string verb, file;
  std::vector<std::string> rest;
  std::vector<std::string> exprs;
  unsigned depth = 0;

  CLI::App* codec = app.add_subcommand("codec", "pairing and sequence codes");
  codec->add_option("verb", verb)->required();
  codec->add_option("args", rest);

  CLI::App* order_cmd = app.add_subcommand("order", "finite partial orders");
  order_cmd->add_option("verb", verb)->required();
  order_cmd->add_option("file", file)->required();

  CLI::App* boolalg_cmd = app.add_subcommand("boolalg", "lattices and Boolean algebras");
  boolalg_cmd->add_option("verb", verb)->required();
  boolalg_cmd->add_option("file", file)->required();

  CLI::App* sat_cmd = app.add_subcommand("sat", "propositional satisfiability");
  sat_cmd->add_option("verb", verb)->required();
  sat_cmd->add_option("file", file);
  sat_cmd->add_option("--expr", exprs, "formula given inline");

  CLI::App* setalg_cmd = app.add_subcommand("setalg", "set algebras over finite universes");
  setalg_cmd->add_option("verb", verb)->required();
  setalg_cmd->add_option("args", rest);

  CLI::App* measure_cmd = app.add_subcommand("measure", "exact interval measure");
  measure_cmd->add_option("verb", verb)->required();
  measure_cmd->add_option("file", file)->required();

  CLI::App* cantor_cmd = app.add_subcommand("cantor", "middle-thirds table");
  cantor_cmd->add_option("--depth", depth, "last stage to print")->required();

  CLI::App* game_cmd = app.add_subcommand("game", "finite determined games");
  game_cmd->add_option("verb", verb)->required();
  game_cmd->add_option("file", file)->required();

  try {
    std::vector<const char*> argv;
    argv.push_back("setkit");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Printer printer{out, opt};
  try {
    if (codec->parsed()) return cmd_codec(verb, rest, printer);
    if (order_cmd->parsed()) return cmd_order(verb, file, printer, opt);
    if (boolalg_cmd->parsed()) return cmd_boolalg(verb, file, printer);
    if (sat_cmd->parsed()) return cmd_sat(verb, file, exprs, printer, opt);
    if (setalg_cmd->parsed()) {
      std::string f = rest.empty() ? "" : rest[0];
      if (verb == "cylinder") return cmd_setalg(verb, "", rest, printer);
      if (rest.size() != 1) throw Error("setalg " + verb + " needs a document file");
      return cmd_setalg(verb, f, rest, printer);
    }
    if (measure_cmd->parsed()) return cmd_measure(verb, file, printer);
    if (cantor_cmd->parsed()) return cmd_cantor(depth, printer);
    if (game_cmd->parsed()) return cmd_game(verb, file, printer, opt);
    err << "no subcommand\n";
    return 2;
  } catch (const Error& e) {
    if (e.category == Error::Category::semantic) {
      out << e.what() << "\n";
      return 1;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace setkit::cli
