#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "setkit/numbers.hpp"

namespace setkit::games {

using Move = int;
using Seq = std::vector<Move>;

enum class Side { angel, demon };

const char* side_name(Side s);

/// Two-player alternating game over moves 0..m-1 with d rounds (play
/// length 2d, Angel moving at even indices). Angel wins a play iff it
/// belongs to the winning set, given explicitly or as a predicate.
class GameSpec {
 public:
  static GameSpec from_set(int alphabet, int rounds, std::set<Seq> winning);
  static GameSpec from_predicate(int alphabet, int rounds,
                                 std::function<bool(const Seq&)> angel_wins);

  int alphabet() const { return alphabet_; }
  int rounds() const { return rounds_; }
  std::size_t play_length() const { return 2 * static_cast<std::size_t>(rounds_); }
  bool angel_wins(const Seq& play) const;
  const std::optional<std::set<Seq>>& winning_set() const { return winning_set_; }

 private:
  GameSpec(int alphabet, int rounds);
  int alphabet_;
  int rounds_;
  std::optional<std::set<Seq>> winning_set_;
  std::function<bool(const Seq&)> predicate_;
};

/// Map from prefixes of one parity to moves. Angel strategies answer
/// even-length prefixes, Demon strategies odd-length ones.
struct Strategy {
  Side side = Side::angel;
  std::map<Seq, Move> choice;

  Move at(const Seq& prefix) const;  // throws naming the missing prefix
};

struct Play {
  Seq moves;
  Side winner;
};

/// Runs sigma against tau for d rounds.
Play play(const GameSpec& g, const Strategy& sigma, const Strategy& tau);

/// sigma * b: Angel follows sigma, Demon plays the listed moves.
Play play_vs_demon_moves(const GameSpec& g, const Strategy& sigma, const Seq& demon_moves);

/// a * tau: Angel plays the listed moves, Demon follows tau.
Play play_vs_angel_moves(const GameSpec& g, const Seq& angel_moves, const Strategy& tau);

struct WinningCheck {
  bool winning;
  std::optional<Seq> counterexample;  // opponent move list that defeats it
};

/// Exhaustively plays the strategy against all m^d opponent move lists.
WinningCheck is_winning(const GameSpec& g, const Strategy& s,
                        std::uint64_t bound = 10'000'000);

struct Solution {
  Side winner;
  Strategy strategy;  // least winning move at every node the winner owns
};

/// Backward induction over the full game tree; finite games are determined
/// and the returned strategy is deterministic (least-move tie-break).
/// Rejects games with more positions than the bound.
Solution solve(const GameSpec& g, std::uint64_t position_bound = 10'000'000);

/// From determinacy to choice: for nonempty sets X_0..X_{k-1} of length-d
/// Demon-move lists (k <= m, entries < m), Demon must win the game "the
/// Demon moves of the play lie in X_{first Angel move}"; reading off the
/// plays <n, 0, 0, ...> * tau yields f(X_n) in X_n for every n.
std::vector<Seq> choice_from_determinacy(const std::vector<std::set<Seq>>& family,
                                         int m, int d);

/// Finite Banach-Mazur instance: players alternately name nonempty
/// sequences (entries < entry_bound, length <= length_bound) that extend
/// the previous one; after `rounds` rounds each the last sequence is
/// tested against the target.
struct BanachMazurSpec {
  int entry_bound;
  int length_bound;
  int rounds;
  std::function<bool(const Seq&)> target;
};

/// Encodes the instance as a GameSpec whose moves are sequence codes:
/// the alphabet is everything up to the largest eligible code, a move that
/// is no code of an eligible sequence or fails to extend the previous one
/// (repeats count as extensions) loses immediately, and a completed chain
/// wins for Angel iff the target holds on the final sequence.
GameSpec banach_mazur_encode(const BanachMazurSpec& bm,
                             std::uint64_t alphabet_bound = 1 << 16);

/// Decodes a move of the encoded game back to the sequence it names.
std::optional<Seq> banach_mazur_decode_move(const BanachMazurSpec& bm, Move code);

}  // namespace setkit::games
