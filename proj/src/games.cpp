#include "setkit/games.hpp"

#include <algorithm>

#include "setkit/codec.hpp"

namespace setkit::games {

const char* side_name(Side s) { return s == Side::angel ? "Angel" : "Demon"; }

GameSpec::GameSpec(int alphabet, int rounds) : alphabet_(alphabet), rounds_(rounds) {
  if (alphabet < 1) throw Error("alphabet size must be at least 1");
  if (rounds < 1) throw Error("round count must be at least 1");
}

GameSpec GameSpec::from_set(int alphabet, int rounds, std::set<Seq> winning) {
  GameSpec g(alphabet, rounds);
  for (const Seq& s : winning) {
    if (s.size() != g.play_length()) {
      throw Error("winning sequence of length " + std::to_string(s.size()) +
                  " in a game of play length " + std::to_string(g.play_length()));
    }
    for (Move m : s) {
      if (m < 0 || m >= alphabet) throw Error("winning sequence entry outside alphabet");
    }
  }
  g.winning_set_ = std::move(winning);
  return g;
}

GameSpec GameSpec::from_predicate(int alphabet, int rounds,
                                  std::function<bool(const Seq&)> angel_wins) {
  GameSpec g(alphabet, rounds);
  g.predicate_ = std::move(angel_wins);
  return g;
}

bool GameSpec::angel_wins(const Seq& play) const {
  if (play.size() != play_length()) throw Error("play has the wrong length");
  if (winning_set_) return winning_set_->count(play) > 0;
  return predicate_(play);
}

Move Strategy::at(const Seq& prefix) const {
  auto it = choice.find(prefix);
  if (it == choice.end()) {
    std::string shown = "<";
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (i) shown += ",";
      shown += std::to_string(prefix[i]);
    }
    shown += ">";
    throw Error("strategy has no move for prefix " + shown);
  }
  return it->second;
}

namespace {

void check_move(const GameSpec& g, Move m, const char* who) {
  if (m < 0 || m >= g.alphabet()) {
    throw Error(std::string(who) + " produced the move " + std::to_string(m) +
                " outside the alphabet");
  }
}

}  // namespace

Play play(const GameSpec& g, const Strategy& sigma, const Strategy& tau) {
  if (sigma.side != Side::angel || tau.side != Side::demon) {
    throw Error("play needs an Angel strategy and a Demon strategy, in that order");
  }
  Seq moves;
  moves.reserve(g.play_length());
  while (moves.size() < g.play_length()) {
    const Strategy& mover = (moves.size() % 2 == 0) ? sigma : tau;
    Move m = mover.at(moves);
    check_move(g, m, moves.size() % 2 == 0 ? "Angel" : "Demon");
    moves.push_back(m);
  }
  Side winner = g.angel_wins(moves) ? Side::angel : Side::demon;
  return {std::move(moves), winner};
}

Play play_vs_demon_moves(const GameSpec& g, const Strategy& sigma,
                         const Seq& demon_moves) {
  if (sigma.side != Side::angel) throw Error("sigma must be an Angel strategy");
  if (demon_moves.size() != static_cast<std::size_t>(g.rounds())) {
    throw Error("demon move list must have one move per round");
  }
  Seq moves;
  moves.reserve(g.play_length());
  for (int r = 0; r < g.rounds(); ++r) {
    Move a = sigma.at(moves);
    check_move(g, a, "Angel");
    moves.push_back(a);
    check_move(g, demon_moves[r], "Demon");
    moves.push_back(demon_moves[r]);
  }
  Side winner = g.angel_wins(moves) ? Side::angel : Side::demon;
  return {std::move(moves), winner};
}

Play play_vs_angel_moves(const GameSpec& g, const Seq& angel_moves, const Strategy& tau) {
  if (tau.side != Side::demon) throw Error("tau must be a Demon strategy");
  if (angel_moves.size() != static_cast<std::size_t>(g.rounds())) {
    throw Error("angel move list must have one move per round");
  }
  Seq moves;
  moves.reserve(g.play_length());
  for (int r = 0; r < g.rounds(); ++r) {
    check_move(g, angel_moves[r], "Angel");
    moves.push_back(angel_moves[r]);
    Move b = tau.at(moves);
    check_move(g, b, "Demon");
    moves.push_back(b);
  }
  Side winner = g.angel_wins(moves) ? Side::angel : Side::demon;
  return {std::move(moves), winner};
}

namespace {

std::uint64_t power(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

}  // namespace

WinningCheck is_winning(const GameSpec& g, const Strategy& s, std::uint64_t bound) {
  std::uint64_t lines = power(g.alphabet(), g.rounds(), bound);
  if (lines > bound) {
    throw Error("is_winning: " + std::to_string(g.alphabet()) + "^" +
                std::to_string(g.rounds()) + " opponent lines exceed the bound");
  }
  Seq opponent(g.rounds(), 0);
  for (;;) {
    Play p = (s.side == Side::angel) ? play_vs_demon_moves(g, s, opponent)
                                     : play_vs_angel_moves(g, opponent, s);
    if (p.winner != s.side) return {false, opponent};
    // Advance the opponent line lexicographically.
    int i = g.rounds() - 1;
    while (i >= 0 && opponent[i] == g.alphabet() - 1) {
      opponent[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++opponent[i];
  }
  return {true, std::nullopt};
}

namespace {

struct Solver {
  const GameSpec& game;
  std::map<Seq, Side> memo;  // node values, shared between solve and collect

  Side winner_of(Seq& prefix) {
    if (prefix.size() == game.play_length()) {
      return game.angel_wins(prefix) ? Side::angel : Side::demon;
    }
    if (auto it = memo.find(prefix); it != memo.end()) return it->second;
    Side mover = (prefix.size() % 2 == 0) ? Side::angel : Side::demon;
    Side value = (mover == Side::angel) ? Side::demon : Side::angel;
    for (Move m = 0; m < game.alphabet(); ++m) {
      prefix.push_back(m);
      Side sub = winner_of(prefix);
      prefix.pop_back();
      if (sub == mover) {  // least winning move wins the node
        value = mover;
        break;
      }
    }
    memo.emplace(prefix, value);
    return value;
  }

  // Collects the winner's least winning move on every node reachable while
  // the winner follows the strategy and the opponent plays anything.
  void collect(Seq& prefix, Side winner, Strategy& strategy) {
    if (prefix.size() == game.play_length()) return;
    Side mover = (prefix.size() % 2 == 0) ? Side::angel : Side::demon;
    if (mover == winner) {
      for (Move m = 0; m < game.alphabet(); ++m) {
        prefix.push_back(m);
        Side sub = winner_of(prefix);
        if (sub == winner) {
          strategy.choice[Seq(prefix.begin(), prefix.end() - 1)] = m;
          collect(prefix, winner, strategy);
          prefix.pop_back();
          return;
        }
        prefix.pop_back();
      }
      throw Error("solver lost track of a winning move");
    }
    for (Move m = 0; m < game.alphabet(); ++m) {
      prefix.push_back(m);
      collect(prefix, winner, strategy);
      prefix.pop_back();
    }
  }
};

}  // namespace

Solution solve(const GameSpec& g, std::uint64_t position_bound) {
  // Position count: sum of m^k for k = 0..2d, bounded by 2 m^(2d).
  std::uint64_t leaves = power(g.alphabet(), 2 * g.rounds(), position_bound);
  if (leaves > position_bound || 2 * leaves > position_bound) {
    throw Error("solve: game tree exceeds the position bound");
  }
  Solver solver{g};
  Seq prefix;
  Side winner = solver.winner_of(prefix);
  Strategy strategy;
  strategy.side = winner;
  solver.collect(prefix, winner, strategy);
  return {winner, strategy};
}

std::vector<Seq> choice_from_determinacy(const std::vector<std::set<Seq>>& family,
                                         int m, int d) {
  if (family.empty()) throw Error("choice_from_determinacy: empty family");
  if (static_cast<int>(family.size()) > m) {
    throw Error("family size exceeds the alphabet; the first move indexes it");
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].empty()) {
      throw Error("family member " + std::to_string(i) + " is empty");
    }
    for (const Seq& s : family[i]) {
      if (s.size() != static_cast<std::size_t>(d)) {
        throw Error("family member " + std::to_string(i) +
                    " contains a sequence of the wrong length");
      }
      for (Move x : s) {
        if (x < 0 || x >= m) throw Error("family sequence entry outside alphabet");
      }
    }
  }

  // Demon wins iff his move subsequence lies in X_{first Angel move};
  // unused indices are a win for Demon outright.
  auto angel_wins = [family](const Seq& play) {
    std::size_t index = static_cast<std::size_t>(play[0]);
    if (index >= family.size()) return false;
    Seq demon_moves;
    for (std::size_t i = 1; i < play.size(); i += 2) demon_moves.push_back(play[i]);
    return family[index].count(demon_moves) == 0;
  };
  GameSpec g = GameSpec::from_predicate(m, d, angel_wins);
  Solution sol = solve(g);
  if (sol.winner != Side::demon) {
    throw Error("Demon failed to win the choice game; nonempty members refute this");
  }
  std::vector<Seq> chosen;
  for (std::size_t n = 0; n < family.size(); ++n) {
    Seq angel_line(d, 0);
    angel_line[0] = static_cast<Move>(n);
    Play p = play_vs_angel_moves(g, angel_line, sol.strategy);
    Seq f;
    for (std::size_t i = 1; i < p.moves.size(); i += 2) f.push_back(p.moves[i]);
    if (family[n].count(f) == 0) {
      throw Error("choice value escaped its set; solver output is inconsistent");
    }
    chosen.push_back(std::move(f));
  }
  return chosen;
}

namespace {

// Eligible sequences of a Banach-Mazur instance and their codes.
std::vector<std::pair<Move, Seq>> eligible_codes(const BanachMazurSpec& bm,
                                                 std::uint64_t alphabet_bound) {
  if (bm.entry_bound < 1 || bm.length_bound < 1 || bm.rounds < 1) {
    throw Error("Banach-Mazur bounds must be positive");
  }
  std::vector<std::pair<Move, Seq>> out;
  std::vector<Seq> current{Seq{}};
  for (int len = 1; len <= bm.length_bound; ++len) {
    std::vector<Seq> next;
    for (const Seq& base : current) {
      for (int e = 0; e < bm.entry_bound; ++e) {
        Seq extended = base;
        extended.push_back(e);
        next.push_back(extended);
        codec::FinSeq nat(extended.begin(), extended.end());
        Natural code = codec::seq_encode(nat);
        if (code > alphabet_bound) {
          throw Error("Banach-Mazur alphabet exceeds the bound " +
                      std::to_string(alphabet_bound));
        }
        out.emplace_back(code.convert_to<Move>(), extended);
      }
    }
    current = std::move(next);
  }
  return out;
}

bool is_prefix(const Seq& a, const Seq& b) {
  if (a.size() > b.size()) return false;
  return std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace

std::optional<Seq> banach_mazur_decode_move(const BanachMazurSpec& bm, Move code) {
  for (const auto& [c, s] : eligible_codes(bm, std::uint64_t(1) << 62)) {
    if (c == code) return s;
  }
  return std::nullopt;
}

GameSpec banach_mazur_encode(const BanachMazurSpec& bm, std::uint64_t alphabet_bound) {
  auto codes = eligible_codes(bm, alphabet_bound);
  Move max_code = 0;
  for (const auto& [c, s] : codes) max_code = std::max(max_code, c);
  int alphabet = max_code + 1;

  std::vector<std::optional<Seq>> decode(alphabet);
  for (const auto& [c, s] : codes) decode[static_cast<std::size_t>(c)] = s;

  auto target = bm.target;
  auto angel_wins = [decode, target](const Seq& play) {
    Seq chain;  // current sequence named by the chain so far
    for (std::size_t i = 0; i < play.size(); ++i) {
      const auto& named = decode[static_cast<std::size_t>(play[i])];
      bool legal = named.has_value() && (i == 0 || is_prefix(chain, *named));
      if (!legal) {
        // Whoever broke the chain loses on the spot.
        return i % 2 == 1;
      }
      chain = *named;
    }
    return target(chain);
  };
  return GameSpec::from_predicate(alphabet, bm.rounds, angel_wins);
}

}  // namespace setkit::games
