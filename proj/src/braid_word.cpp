#include "braidcalc/braid_word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "braidcalc/errors.hpp"

namespace braidcalc {

Sign sign_from_int(int value) {
  if (value == 1) return Sign::Positive;
  if (value == -1) return Sign::Negative;
  throw BraidError("sign must be +1 or -1, got " + std::to_string(value));
}

Letter::Letter(int index, Sign sign) : index_(index), sign_(sign) {
  if (index < 1) throw BraidError("generator index must be >= 1, got " + std::to_string(index));
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw BraidError("strand count must be >= 1, got " + std::to_string(strands_));
  for (const auto& l : letters_) {
    if (l.index() > strands_ - 1) {
      throw BraidError("generator s" + std::to_string(l.index()) + " out of range for " +
                       std::to_string(strands_) + " strands");
    }
  }
}

BraidWord BraidWord::power(int strands, int index, int power) {
  std::vector<Letter> letters;
  const Sign s = power >= 0 ? Sign::Positive : Sign::Negative;
  for (int k = 0; k < std::abs(power); ++k) letters.emplace_back(index, s);
  return BraidWord(strands, std::move(letters));
}

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("malformed integer '" + std::string(token) + "' in braid word '" +
                     std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

BraidWord BraidWord::parse(std::string_view text, std::optional<int> strands_override) {
  auto tokens = split_ws(text);
  std::optional<int> strands = strands_override;
  std::size_t first = 0;
  if (!tokens.empty() && tokens[0].starts_with("n=")) {
    const int n = parse_int(tokens[0].substr(2), text);
    if (!strands) strands = n;
    first = 1;
  }

  std::vector<Letter> letters;
  int max_index = 0;
  for (std::size_t t = first; t < tokens.size(); ++t) {
    std::string_view tok = tokens[t];
    if (tok.size() < 2 || tok[0] != 's') {
      throw ParseError("expected s<i>^<k>, got '" + std::string(tok) + "'");
    }
    const auto caret = tok.find('^');
    const int index = parse_int(tok.substr(1, caret == std::string_view::npos ? tok.npos : caret - 1), text);
    const int power = caret == std::string_view::npos ? 1 : parse_int(tok.substr(caret + 1), text);
    if (index < 1) throw ParseError("generator index must be >= 1 in '" + std::string(tok) + "'");
    if (power == 0) throw ParseError("zero exponent in '" + std::string(tok) + "'");
    max_index = std::max(max_index, index);
    const Sign s = power > 0 ? Sign::Positive : Sign::Negative;
    for (int k = 0; k < std::abs(power); ++k) letters.emplace_back(index, s);
  }

  const int n = strands.value_or(max_index + 1);
  if (n < 1) throw ParseError("strand count must be >= 1");
  if (max_index >= n) {
    throw ParseError("generator s" + std::to_string(max_index) + " needs more than " +
                     std::to_string(n) + " strands");
  }
  return BraidWord(n, std::move(letters));
}

std::string BraidWord::to_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const int power = static_cast<int>(j - i) * to_int(letters_[i].sign());
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(letters_[i].index());
    if (power != 1) out += '^' + std::to_string(power);
    i = j;
  }
  return out;
}

StrandPermutation StrandPermutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return StrandPermutation(std::move(images));
}

StrandPermutation::StrandPermutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v - 1)]) {
      throw BraidError("not a permutation");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

StrandPermutation StrandPermutation::then(const StrandPermutation& next) const {
  if (next.size() != size()) throw StrandMismatch(size(), next.size());
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = next.image(images_[i]);
  return StrandPermutation(std::move(out));
}

StrandPermutation StrandPermutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return StrandPermutation(std::move(out));
}

std::vector<std::vector<int>> StrandPermutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    std::vector<int> cycle;
    for (int p = start; !seen[static_cast<std::size_t>(p - 1)]; p = image(p)) {
      seen[static_cast<std::size_t>(p - 1)] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  // A single stack pass reaches the fixed point: a letter that survives
  // its push can only be cancelled by a later arrival.
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord concat(const BraidWord& lhs, const BraidWord& rhs) {
  if (lhs.strands() != rhs.strands()) throw StrandMismatch(lhs.strands(), rhs.strands());
  std::vector<Letter> letters(lhs.letters().begin(), lhs.letters().end());
  letters.insert(letters.end(), rhs.letters().begin(), rhs.letters().end());
  return BraidWord(lhs.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(it->inverse());
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  return concat(concat(g, w), inverse(g));
}

BraidWord rotate(const BraidWord& w, std::size_t offset) {
  if (w.empty()) return w;
  offset %= w.length();
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  std::rotate(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(offset), letters.end());
  return BraidWord(w.strands(), std::move(letters));
}

std::vector<BraidWord> cyclic_rotations(const BraidWord& w) {
  std::vector<BraidWord> out;
  out.reserve(w.length());
  for (std::size_t k = 0; k < w.length(); ++k) out.push_back(rotate(w, k));
  return out;
}

int exponent_sum(const BraidWord& w) noexcept {
  int e = 0;
  for (const auto& l : w.letters()) e += to_int(l.sign());
  return e;
}

int bennequin(const BraidWord& w) noexcept { return exponent_sum(w) - w.strands(); }

StrandPermutation underlying_permutation(const BraidWord& w) {
  // occupant[pos] = bottom position of the strand currently at pos
  std::vector<int> occupant(static_cast<std::size_t>(w.strands()));
  std::iota(occupant.begin(), occupant.end(), 1);
  for (const auto& l : w.letters()) {
    std::swap(occupant[static_cast<std::size_t>(l.index() - 1)],
              occupant[static_cast<std::size_t>(l.index())]);
  }
  std::vector<int> images(occupant.size());
  for (std::size_t pos = 0; pos < occupant.size(); ++pos) {
    images[static_cast<std::size_t>(occupant[pos] - 1)] = static_cast<int>(pos) + 1;
  }
  return StrandPermutation(std::move(images));
}

}  // namespace braidcalc
