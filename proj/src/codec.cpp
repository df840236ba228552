#include "setkit/codec.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace setkit::codec {

namespace {

Natural triangular(const Natural& t) { return t * (t + 1) / 2; }

void require_nonnegative(const Natural& n, const char* what) {
  if (n < 0) throw Error(std::string(what) + " must be nonnegative");
}

}  // namespace

Natural pair(const Natural& x, const Natural& y) {
  require_nonnegative(x, "pair argument");
  require_nonnegative(y, "pair argument");
  return triangular(x + y) + x;
}

std::pair<Natural, Natural> unpair(const Natural& n) {
  require_nonnegative(n, "unpair argument");
  // Largest t with t(t+1)/2 <= n, found from the integer square root of
  // 8n+1 and corrected exactly.
  Natural t = (boost::multiprecision::sqrt(Natural(8 * n + 1)) - 1) / 2;
  while (triangular(t + 1) <= n) ++t;
  while (triangular(t) > n) --t;
  Natural x = n - triangular(t);
  Natural y = t - x;
  return {x, y};
}

std::pair<Natural, Natural> proj(const Natural& n) { return unpair(n); }

Natural tuple_encode(const FinSeq& xs) {
  if (xs.empty()) throw Error("tuple_encode: empty sequence");
  Natural acc = xs.front();
  require_nonnegative(acc, "tuple entry");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    require_nonnegative(xs[i], "tuple entry");
    acc = pair(acc, xs[i]);
  }
  return acc;
}

FinSeq tuple_decode(const Natural& k, const Natural& n) {
  if (k < 1) throw Error("tuple_decode: length must be at least 1");
  require_nonnegative(n, "tuple_decode argument");
  std::size_t len = k.convert_to<std::size_t>();
  FinSeq out(len);
  Natural rest = n;
  for (std::size_t i = len; i-- > 1;) {
    auto [a, b] = unpair(rest);
    out[i] = b;
    rest = a;
  }
  out[0] = rest;
  return out;
}

Natural seq_encode(const FinSeq& xs) {
  if (xs.empty()) throw Error("seq_encode: empty sequence");
  return pair(Natural(xs.size()), tuple_encode(xs));
}

FinSeq seq_decode(const Natural& n) {
  auto [k, code] = unpair(n);
  if (k == 0) {
    throw Error("not a sequence code: " + n.str() +
                    " has first component 0",
                Error::Category::semantic);
  }
  return tuple_decode(k, code);
}

FiniteMap::FiniteMap(std::vector<std::string> domain,
                     std::vector<std::string> codomain,
                     std::map<std::string, std::string> graph)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      graph_(std::move(graph)) {
  std::set<std::string> dom(domain_.begin(), domain_.end());
  std::set<std::string> cod(codomain_.begin(), codomain_.end());
  if (dom.size() != domain_.size()) throw Error("map domain has duplicates");
  if (cod.size() != codomain_.size()) throw Error("map codomain has duplicates");
  for (const auto& x : domain_) {
    auto it = graph_.find(x);
    if (it == graph_.end()) throw Error("map is not total: no value for '" + x + "'");
    if (!cod.count(it->second)) {
      throw Error("map image leaves codomain at '" + x + "' -> '" + it->second + "'");
    }
  }
  for (const auto& [x, y] : graph_) {
    if (!dom.count(x)) throw Error("map graph mentions '" + x + "' outside the domain");
  }
}

const std::string& FiniteMap::operator()(const std::string& x) const {
  auto it = graph_.find(x);
  if (it == graph_.end()) throw Error("map applied outside its domain: '" + x + "'");
  return it->second;
}

std::optional<std::pair<std::string, std::string>> FiniteMap::injectivity_violation()
    const {
  std::map<std::string, std::string> seen;
  for (const auto& x : domain_) {
    const std::string& y = graph_.at(x);
    auto [it, fresh] = seen.emplace(y, x);
    if (!fresh) return std::make_pair(it->second, x);
  }
  return std::nullopt;
}

std::vector<std::string> FiniteMap::image() const {
  std::set<std::string> img;
  for (const auto& x : domain_) img.insert(graph_.at(x));
  return {img.begin(), img.end()};
}

namespace {

bool same_label_set(const std::vector<std::string>& a,
                    const std::vector<std::string>& b) {
  return std::set<std::string>(a.begin(), a.end()) ==
         std::set<std::string>(b.begin(), b.end());
}

}  // namespace

FiniteMap schroeder_bernstein(const FiniteMap& f, const FiniteMap& g) {
  if (!same_label_set(f.codomain(), g.domain()) ||
      !same_label_set(g.codomain(), f.domain())) {
    throw Error("schroeder_bernstein: f and g do not connect the same two sets");
  }
  if (auto v = f.injectivity_violation()) {
    throw Error("schroeder_bernstein: f is not injective, f(" + v->first +
                ") = f(" + v->second + ")");
  }
  if (auto v = g.injectivity_violation()) {
    throw Error("schroeder_bernstein: g is not injective, g(" + v->first +
                ") = g(" + v->second + ")");
  }

  const auto& a_labels = f.domain();
  std::set<std::string> g_image;
  for (const auto& b : g.domain()) g_image.insert(g(b));

  std::map<std::string, std::string> g_inverse;
  for (const auto& b : g.domain()) g_inverse[g(b)] = b;

  // A0 = A \ g[B]; A_{n+1} = g[f[A_n]]; the union stabilizes on finite sets.
  std::set<std::string> chain_union;
  std::vector<std::string> frontier;
  for (const auto& a : a_labels) {
    if (!g_image.count(a)) {
      chain_union.insert(a);
      frontier.push_back(a);
    }
  }
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const auto& a : frontier) {
      const std::string& stepped = g(f(a));
      if (chain_union.insert(stepped).second) next.push_back(stepped);
    }
    frontier = std::move(next);
  }

  std::map<std::string, std::string> h;
  for (const auto& a : a_labels) {
    h[a] = chain_union.count(a) ? f(a) : g_inverse.at(a);
  }
  FiniteMap result(f.domain(), f.codomain(), h);
  if (auto v = result.injectivity_violation()) {
    throw Error("schroeder_bernstein: construction failed to be injective");
  }
  if (result.image().size() != f.codomain().size()) {
    throw Error("schroeder_bernstein: construction failed to be onto");
  }
  return result;
}

BanachDecomposition banach_decomposition(const FiniteMap& f, const FiniteMap& g) {
  if (!same_label_set(f.codomain(), g.domain()) ||
      !same_label_set(g.codomain(), f.domain())) {
    throw Error("banach_decomposition: f and g do not connect the same two sets");
  }
  const auto& xs = f.domain();
  const auto& ys = g.domain();

  auto h = [&](const std::set<std::string>& a) {
    std::set<std::string> fa;
    for (const auto& x : a) fa.insert(f(x));
    std::set<std::string> g_of_rest;
    for (const auto& y : ys) {
      if (!fa.count(y)) g_of_rest.insert(g(y));
    }
    std::set<std::string> out;
    for (const auto& x : xs) {
      if (!g_of_rest.count(x)) out.insert(x);
    }
    return out;
  };

  // Greatest fixpoint of the monotone map H, iterated from the full set.
  std::set<std::string> current(xs.begin(), xs.end());
  for (;;) {
    std::set<std::string> next = h(current);
    if (next == current) break;
    current = std::move(next);
  }

  BanachDecomposition out;
  std::set<std::string> y1;
  for (const auto& x : current) y1.insert(f(x));
  for (const auto& x : xs) {
    (current.count(x) ? out.x1 : out.x2).push_back(x);
  }
  for (const auto& y : ys) {
    (y1.count(y) ? out.y1 : out.y2).push_back(y);
  }
  return out;
}

}  // namespace setkit::codec
