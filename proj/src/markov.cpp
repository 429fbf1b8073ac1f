#include "braidcalc/markov.hpp"

#include <algorithm>

#include "braidcalc/errors.hpp"

namespace braidcalc {

BraidWord stabilize(const BraidWord& w, Sign sign) {
  const int n = w.strands();
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  letters.emplace_back(n, sign);
  return BraidWord(n + 1, std::move(letters));
}

namespace {

std::optional<BraidWord> try_destabilize(const BraidWord& w, Sign sign) {
  const int n = w.strands();
  if (n < 2) return std::nullopt;
  const BraidWord reduced = free_reduce(w);
  const int top = n - 1;
  const auto top_count = std::count_if(reduced.letters().begin(), reduced.letters().end(),
                                       [top](const Letter& l) { return l.index() == top; });
  if (top_count != 1) return std::nullopt;
  for (std::size_t k = 0; k < reduced.length(); ++k) {
    const BraidWord r = rotate(reduced, k);
    const Letter& last = r[r.length() - 1];
    if (last.index() == top && last.sign() == sign) {
      return BraidWord(n - 1, std::vector<Letter>(r.letters().begin(), r.letters().end() - 1));
    }
  }
  return std::nullopt;
}

}  // namespace

BraidWord destabilize(const BraidWord& w, Sign sign) {
  if (auto r = try_destabilize(w, sign)) return *r;
  throw NotDestabilizable("no cyclic rotation of '" + w.to_string() + "' ends in its only s" +
                          std::to_string(w.strands() - 1) + (sign == Sign::Positive ? "" : "^-1"));
}

bool can_destabilize(const BraidWord& w, Sign sign) { return try_destabilize(w, sign).has_value(); }

namespace {

void check_split(const BraidWord& w, const ExchangeSplit& split) {
  const int top = w.strands() - 1;
  if (top < 1) throw InvalidSplit("exchange needs at least 2 strands");
  if (split.p_length + split.q_length + 2 != w.length()) {
    throw InvalidSplit("split lengths " + std::to_string(split.p_length) + "+" +
                       std::to_string(split.q_length) + "+2 do not cover a word of length " +
                       std::to_string(w.length()));
  }
  const Letter& first = w[split.p_length];
  const Letter& second = w[w.length() - 1];
  if (first.index() != top || second.index() != top || first.sign() == second.sign()) {
    throw InvalidSplit("separating letters must be s" + std::to_string(top) + "^d and s" +
                       std::to_string(top) + "^-d");
  }
  for (std::size_t i = 0; i + 1 < w.length(); ++i) {
    if (i != split.p_length && w[i].index() >= top) {
      throw InvalidSplit("P or Q touches index " + std::to_string(top));
    }
  }
}

}  // namespace

BraidWord exchange_move(const BraidWord& w, const ExchangeSplit& split) {
  check_split(w, split);
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  letters[split.p_length] = letters[split.p_length].inverse();
  letters.back() = letters.back().inverse();
  return BraidWord(w.strands(), std::move(letters));
}

std::optional<ExchangeSplit> find_exchange_split(const BraidWord& w) {
  if (w.length() < 2) return std::nullopt;
  const int top = w.strands() - 1;
  std::size_t p = w.length();
  for (std::size_t i = 0; i + 1 < w.length(); ++i) {
    if (w[i].index() == top) {
      if (p != w.length()) return std::nullopt;
      p = i;
    }
  }
  if (p == w.length()) return std::nullopt;
  ExchangeSplit split{p, w.length() - p - 2};
  try {
    check_split(w, split);
  } catch (const InvalidSplit&) {
    return std::nullopt;
  }
  return split;
}

BraidWord apply_move(const BraidWord& w, const Move& move) {
  return std::visit(
      [&w](const auto& m) -> BraidWord {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Stabilize>) {
          return stabilize(w, m.sign);
        } else if constexpr (std::is_same_v<M, Destabilize>) {
          return destabilize(w, m.sign);
        } else if constexpr (std::is_same_v<M, ConjugateBy>) {
          return conjugate(w, m.conjugator);
        } else {
          return exchange_move(w, m.split);
        }
      },
      move);
}

std::string describe(const Move& move) {
  return std::visit(
      [](const auto& m) -> std::string {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Stabilize>) {
          return "stabilize(" + std::to_string(to_int(m.sign)) + ")";
        } else if constexpr (std::is_same_v<M, Destabilize>) {
          return "destabilize(" + std::to_string(to_int(m.sign)) + ")";
        } else if constexpr (std::is_same_v<M, ConjugateBy>) {
          return "conjugate(" + m.conjugator.to_string() + ")";
        } else {
          return "exchange(" + std::to_string(m.split.p_length) + "," + std::to_string(m.split.q_length) + ")";
        }
      },
      move);
}

MarkovTower::MarkovTower(TowerMode mode, std::vector<BraidWord> states, std::vector<Move> moves)
    : mode_(mode), states_(std::move(states)), moves_(std::move(moves)) {
  if (states_.empty() || states_.size() != moves_.size() + 1) {
    throw BraidError("a tower needs exactly one more state than moves");
  }
}

MarkovTower MarkovTower::replay(TowerMode mode, BraidWord initial, std::vector<Move> moves) {
  std::vector<BraidWord> states;
  states.reserve(moves.size() + 1);
  states.push_back(std::move(initial));
  for (const auto& m : moves) states.push_back(apply_move(states.back(), m));
  return MarkovTower(mode, std::move(states), std::move(moves));
}

namespace {

std::optional<Sign> loop_sign(const Move& move) {
  if (const auto* s = std::get_if<Stabilize>(&move)) return s->sign;
  if (const auto* d = std::get_if<Destabilize>(&move)) return d->sign;
  return std::nullopt;
}

}  // namespace

TowerVerdict validate_tower(const MarkovTower& tower) {
  TowerVerdict v;
  const auto& states = tower.states();
  const auto& moves = tower.moves();

  for (std::size_t k = 0; k < moves.size(); ++k) {
    const auto sign = loop_sign(moves[k]);
    if (sign) {
      // Each trivial loop crossed by the annulus adds one vertex and one
      // singularity of the loop's sign.
      if (*sign == Sign::Positive) {
        ++v.counts.v_plus;
        ++v.counts.s_plus;
      } else {
        ++v.counts.v_minus;
        ++v.counts.s_minus;
        if (tower.mode() == TowerMode::Transversal) {
          v.faults.push_back({TowerFault::Kind::IllegalMoveForMode, k, describe(moves[k])});
        }
      }
    }
    try {
      const BraidWord next = apply_move(states[k], moves[k]);
      if (free_reduce(next) != free_reduce(states[k + 1])) {
        v.faults.push_back({TowerFault::Kind::StepMismatch, k,
                            describe(moves[k]) + " gives '" + next.to_string() + "' (n=" +
                                std::to_string(next.strands()) + ")"});
      }
    } catch (const BraidError& e) {
      v.faults.push_back({TowerFault::Kind::StepMismatch, k, e.what()});
    }
  }

  v.betas.reserve(states.size());
  for (const auto& s : states) v.betas.push_back(bennequin(s));
  v.beta_constant = std::all_of(v.betas.begin(), v.betas.end(), [&](int b) { return b == v.betas.front(); });
  v.eq4_holds = v.betas.front() - v.betas.back() == v.counts.bennequin_drop();

  if (tower.mode() == TowerMode::Transversal) {
    for (std::size_t k = 0; k < v.betas.size(); ++k) {
      if (v.betas[k] != v.betas.front()) {
        v.faults.push_back({TowerFault::Kind::BennequinDrift, k,
                            "beta " + std::to_string(v.betas[k]) + " != " + std::to_string(v.betas.front())});
        break;
      }
    }
    if (!v.eq4_holds) {
      v.faults.push_back({TowerFault::Kind::BennequinDrift, v.betas.size() - 1,
                          "beta(first) - beta(last) disagrees with the foliation counts"});
    }
  }
  v.valid = v.faults.empty();
  return v;
}

std::string to_string(TowerMode mode) {
  return mode == TowerMode::Transversal ? "transversal" : "topological";
}

std::string to_string(TowerFault::Kind kind) {
  switch (kind) {
    case TowerFault::Kind::StepMismatch:
      return "StepMismatch";
    case TowerFault::Kind::IllegalMoveForMode:
      return "IllegalMoveForMode";
    case TowerFault::Kind::BennequinDrift:
      return "BennequinDrift";
  }
  return "?";
}

}  // namespace braidcalc
