#pragma once

// Hand-rolled random generators shared by the property tests and the
// acceptance binary. Everything is seeded explicitly so failures reproduce.

#include <cstdint>
#include <random>
#include <vector>

#include "braidcalc/braid_word.hpp"

namespace testgen {

using braidcalc::BraidWord;
using braidcalc::Letter;
using braidcalc::Sign;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin() { return uniform(0, 1) == 1; }
  Sign sign() { return coin() ? Sign::Positive : Sign::Negative; }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

inline Letter random_letter(Rng& rng, int strands) { return Letter(rng.uniform(1, strands - 1), rng.sign()); }

/// Uniform letters on `strands` strands, length in [0, max_length]. Not reduced.
inline BraidWord random_word(Rng& rng, int strands, int max_length) {
  std::vector<Letter> letters;
  const int len = strands < 2 ? 0 : rng.uniform(0, max_length);
  for (int i = 0; i < len; ++i) letters.push_back(random_letter(rng, strands));
  return BraidWord(strands, std::move(letters));
}

/// Freely reduced word of exactly `length` letters.
inline BraidWord random_reduced_word(Rng& rng, int strands, int length) {
  std::vector<Letter> letters;
  while (static_cast<int>(letters.size()) < length) {
    Letter l = random_letter(rng, strands);
    if (!letters.empty() && letters.back().cancels(l)) continue;
    letters.push_back(l);
  }
  return BraidWord(strands, std::move(letters));
}

/// Every freely reduced 3-braid word of length <= max_length, shortest first.
inline std::vector<BraidWord> reduced_b3_corpus(int max_length) {
  const Letter alphabet[] = {Letter(1, Sign::Positive), Letter(1, Sign::Negative), Letter(2, Sign::Positive),
                             Letter(2, Sign::Negative)};
  std::vector<std::vector<Letter>> layer{{}};
  std::vector<BraidWord> out{BraidWord(3)};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer) {
      for (const Letter& l : alphabet) {
        if (!w.empty() && w.back().cancels(l)) continue;
        auto v = w;
        v.push_back(l);
        out.emplace_back(3, v);
        next.push_back(std::move(v));
      }
    }
    layer = std::move(next);
  }
  return out;
}

/// Word on `width` strands whose letters are all s_1..s_{width-1}; width 1
/// gives the empty word.
inline BraidWord random_block_word(Rng& rng, int width, int max_length) { return random_word(rng, width, max_length); }

}  // namespace testgen
