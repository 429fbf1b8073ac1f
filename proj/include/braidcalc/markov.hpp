#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "braidcalc/braid_word.hpp"

namespace braidcalc {

/// Sign of the trivial loop added or removed. Stabilization appends
/// sigma_n^sign at the end of the word, taking n strands to n + 1.
BraidWord stabilize(const BraidWord& w, Sign sign);

/// Removes a trivial loop sigma_{n-1}^sign. Searches the cyclic rotations of
/// the freely reduced word, in offset order, for one whose only letter of
/// index n-1 is its last letter with the requested sign. Throws
/// NotDestabilizable when none exists.
BraidWord destabilize(const BraidWord& w, Sign sign);
bool can_destabilize(const BraidWord& w, Sign sign);

/// Exhibits w = P sigma_{n-1}^d Q sigma_{n-1}^-d with P and Q in indices
/// <= n-2; the lengths are counted in letters of the literal word.
struct ExchangeSplit {
  std::size_t p_length = 0;
  std::size_t q_length = 0;

  friend bool operator==(const ExchangeSplit&, const ExchangeSplit&) = default;
};

/// P sigma^d Q sigma^-d  ->  P sigma^-d Q sigma^d. Throws InvalidSplit.
BraidWord exchange_move(const BraidWord& w, const ExchangeSplit& split);
std::optional<ExchangeSplit> find_exchange_split(const BraidWord& w);

struct Stabilize {
  Sign sign;
  friend bool operator==(const Stabilize&, const Stabilize&) = default;
};
struct Destabilize {
  Sign sign;
  friend bool operator==(const Destabilize&, const Destabilize&) = default;
};
struct ConjugateBy {
  BraidWord conjugator;
  friend bool operator==(const ConjugateBy&, const ConjugateBy&) = default;
};
struct Exchange {
  ExchangeSplit split;
  friend bool operator==(const Exchange&, const Exchange&) = default;
};

using Move = std::variant<Stabilize, Destabilize, ConjugateBy, Exchange>;

BraidWord apply_move(const BraidWord& w, const Move& move);
std::string describe(const Move& move);

enum class TowerMode { Topological, Transversal };

/// states[k + 1] is the claimed result of moves[k] applied to states[k].
class MarkovTower {
 public:
  MarkovTower(TowerMode mode, std::vector<BraidWord> states, std::vector<Move> moves);

  /// Builds the states by applying each move in turn. Throws whatever the
  /// move throws (NotDestabilizable, InvalidSplit, StrandMismatch).
  static MarkovTower replay(TowerMode mode, BraidWord initial, std::vector<Move> moves);

  TowerMode mode() const noexcept { return mode_; }
  const std::vector<BraidWord>& states() const noexcept { return states_; }
  const std::vector<Move>& moves() const noexcept { return moves_; }

 private:
  TowerMode mode_;
  std::vector<BraidWord> states_;
  std::vector<Move> moves_;
};

/// Signed vertex/singularity tallies of the annulus swept by the tower's
/// stabilizations and destabilizations. Braid isotopy (conjugation,
/// exchange) leaves them alone.
struct FoliationCounts {
  int v_plus = 0;
  int v_minus = 0;
  int s_plus = 0;
  int s_minus = 0;

  /// (s+ - s-) - (v+ - v-)
  int bennequin_drop() const noexcept { return (s_plus - s_minus) - (v_plus - v_minus); }
  friend bool operator==(const FoliationCounts&, const FoliationCounts&) = default;
};

struct TowerFault {
  enum class Kind { StepMismatch, IllegalMoveForMode, BennequinDrift };
  Kind kind;
  std::size_t step;  // index into moves (or states for BennequinDrift)
  std::string detail;
};

struct TowerVerdict {
  bool valid = false;
  FoliationCounts counts;
  std::vector<int> betas;      // per state
  bool beta_constant = false;
  bool eq4_holds = false;      // beta(first) - beta(last) == counts.bennequin_drop()
  std::vector<TowerFault> faults;
};

TowerVerdict validate_tower(const MarkovTower& tower);

std::string to_string(TowerMode mode);
std::string to_string(TowerFault::Kind kind);

}  // namespace braidcalc
