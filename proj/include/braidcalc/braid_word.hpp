#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace braidcalc {

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign flip(Sign s) noexcept { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
Sign sign_from_int(int value);  // throws on anything but +-1

/// One Artin generator sigma_i^{+-1}. The index is 1-based and always >= 1.
class Letter {
 public:
  Letter(int index, Sign sign);

  int index() const noexcept { return index_; }
  Sign sign() const noexcept { return sign_; }
  Letter inverse() const noexcept { return Letter(index_, flip(sign_), unchecked{}); }
  bool cancels(const Letter& other) const noexcept {
    return index_ == other.index_ && sign_ != other.sign_;
  }

  friend bool operator==(const Letter&, const Letter&) = default;

 private:
  struct unchecked {};
  Letter(int index, Sign sign, unchecked) noexcept : index_(index), sign_(sign) {}

  int index_;
  Sign sign_;
};

inline Letter sigma(int index, int sign = 1) { return Letter(index, sign_from_int(sign)); }

/// A word in the Artin generators of B_n. Values are immutable; every
/// operation returns a fresh word.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<Letter> letters = {});

  /// Parses `s<i>^<k>` factors separated by whitespace, with an optional
  /// leading `n=<int>`. Without `n=` (and without `strands_override`) the
  /// strand count is max index + 1, or 1 for the empty word.
  static BraidWord parse(std::string_view text, std::optional<int> strands_override = std::nullopt);

  /// Convenience: sigma_index^power on `strands` strands (power may be 0).
  static BraidWord power(int strands, int index, int power);

  int strands() const noexcept { return strands_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  /// Text notation, runs of equal letters grouped: `s1^3 s2^4 s1^-5 s2^-1`.
  /// Exponent +1 is written without `^1`. The empty word prints as "".
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// Position permutation of a braid: bottom position i ends at top position
/// image(i). Positions are 1-based in the public interface.
class StrandPermutation {
 public:
  static StrandPermutation identity(int n);
  explicit StrandPermutation(std::vector<int> images);  // 1-based images

  int size() const noexcept { return static_cast<int>(images_.size()); }
  int image(int position) const { return images_.at(static_cast<std::size_t>(position - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  /// This permutation followed by `next`.
  StrandPermutation then(const StrandPermutation& next) const;
  StrandPermutation inverse() const;

  /// Cycles, each starting at its smallest member, sorted by that member.
  std::vector<std::vector<int>> cycles() const;

  friend bool operator==(const StrandPermutation&, const StrandPermutation&) = default;

 private:
  std::vector<int> images_;
};

BraidWord free_reduce(const BraidWord& w);
BraidWord concat(const BraidWord& lhs, const BraidWord& rhs);
BraidWord inverse(const BraidWord& w);
/// g * w * g^-1, not reduced.
BraidWord conjugate(const BraidWord& w, const BraidWord& g);
/// The word read from letter `offset` cyclically.
BraidWord rotate(const BraidWord& w, std::size_t offset);
std::vector<BraidWord> cyclic_rotations(const BraidWord& w);

int exponent_sum(const BraidWord& w) noexcept;
/// Self-linking number of the closed braid viewed as a transverse link: e - b.
int bennequin(const BraidWord& w) noexcept;
StrandPermutation underlying_permutation(const BraidWord& w);

}  // namespace braidcalc
