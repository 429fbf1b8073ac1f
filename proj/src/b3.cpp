#include "braidcalc/b3.hpp"

#include <algorithm>
#include <deque>

#include "braidcalc/errors.hpp"

namespace braidcalc::b3 {

namespace {

bool is_x(FpLetter l) { return l == FpLetter::X; }

int y_power(FpLetter l) { return l == FpLetter::Y ? 1 : l == FpLetter::Y2 ? 2 : 0; }

// Product of two letters of the Z/3 factor; nullopt for the identity.
std::optional<FpLetter> y_product(FpLetter a, FpLetter b) {
  switch ((y_power(a) + y_power(b)) % 3) {
    case 1:
      return FpLetter::Y;
    case 2:
      return FpLetter::Y2;
    default:
      return std::nullopt;
  }
}

bool same_factor(FpLetter a, FpLetter b) { return is_x(a) == is_x(b); }

std::optional<FpLetter> letter_product(FpLetter a, FpLetter b) {
  if (is_x(a)) return std::nullopt;  // X * X
  return y_product(a, b);
}

void require_three_strands(const BraidWord& w) {
  if (w.strands() != 3) throw WrongStrandCount(3, w.strands());
}

}  // namespace

std::string to_string(FpLetter l) {
  switch (l) {
    case FpLetter::X:
      return "X";
    case FpLetter::Y:
      return "Y";
    case FpLetter::Y2:
      return "Y2";
  }
  return "?";
}

FreeProductWord::FreeProductWord(const std::vector<FpLetter>& letters) {
  for (FpLetter l : letters) append(l);
}

void FreeProductWord::append(FpLetter l) {
  if (letters_.empty() || !same_factor(letters_.back(), l)) {
    letters_.push_back(l);
    return;
  }
  // The letter before back() is in the other factor, so one merge settles it.
  if (auto merged = letter_product(letters_.back(), l)) {
    letters_.back() = *merged;
  } else {
    letters_.pop_back();
  }
}

FreeProductWord& FreeProductWord::operator*=(const FreeProductWord& rhs) {
  for (FpLetter l : rhs.letters_) append(l);
  return *this;
}

bool FreeProductWord::is_cyclically_reduced() const noexcept {
  return letters_.size() <= 1 || !same_factor(letters_.front(), letters_.back());
}

FreeProductWord FreeProductWord::cyclically_reduced() const {
  std::deque<FpLetter> d(letters_.begin(), letters_.end());
  while (d.size() >= 2 && same_factor(d.front(), d.back())) {
    // Conjugating by the last letter folds it onto the front.
    const auto merged = letter_product(d.back(), d.front());
    d.pop_back();
    d.pop_front();
    if (merged) d.push_front(*merged);
  }
  FreeProductWord out;
  out.letters_.assign(d.begin(), d.end());
  return out;
}

std::string FreeProductWord::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += b3::to_string(letters_[i]);
  }
  return out + "]";
}

std::string NormalForm::to_string() const {
  return "e=" + std::to_string(exponent_sum) + "; " + FreeProductWord(cyclic_word).to_string();
}

FreeProductWord quotient_image(const BraidWord& w) {
  require_three_strands(w);
  using enum FpLetter;
  FreeProductWord out;
  for (const auto& l : w.letters()) {
    const bool pos = l.sign() == Sign::Positive;
    if (l.index() == 1) {
      // s1 = Y^-1 X,  s1^-1 = X Y
      if (pos) {
        out.append(Y2);
        out.append(X);
      } else {
        out.append(X);
        out.append(Y);
      }
    } else {
      // s2 = s1^-1 (s1 s2) = X Y Y = X Y2,  s2^-1 = Y X
      if (pos) {
        out.append(X);
        out.append(Y2);
      } else {
        out.append(Y);
        out.append(X);
      }
    }
  }
  return out;
}

NormalForm normal_form(const BraidWord& w) {
  NormalForm nf;
  nf.exponent_sum = exponent_sum(w);
  const auto reduced = quotient_image(w).cyclically_reduced().letters();
  nf.cyclic_word = reduced;
  for (std::size_t k = 1; k < reduced.size(); ++k) {
    std::vector<FpLetter> rot(reduced);
    std::rotate(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(k), rot.end());
    if (rot < nf.cyclic_word) nf.cyclic_word = std::move(rot);
  }
  return nf;
}

bool conjugate_in_b3(const BraidWord& lhs, const BraidWord& rhs) {
  require_three_strands(lhs);
  require_three_strands(rhs);
  return normal_form(lhs) == normal_form(rhs);
}

std::vector<NormalForm> normal_forms_serial(const std::vector<BraidWord>& words) {
  std::vector<NormalForm> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(normal_form(w));
  return out;
}

std::vector<NormalForm> normal_forms(const std::vector<BraidWord>& words) {
  for (const auto& w : words) require_three_strands(w);
  std::vector<NormalForm> out(words.size());
  const auto count = static_cast<std::int64_t>(words.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = normal_form(words[static_cast<std::size_t>(i)]);
  }
  return out;
}

namespace {

BraidWord s1s2(int a, int b) {
  std::vector<Letter> letters;
  for (int k = 0; k < std::abs(a); ++k) letters.emplace_back(1, a > 0 ? Sign::Positive : Sign::Negative);
  for (int k = 0; k < std::abs(b); ++k) letters.emplace_back(2, b > 0 ? Sign::Positive : Sign::Negative);
  return BraidWord(3, std::move(letters));
}

}  // namespace

ClosureClass classify_closure(const BraidWord& w) {
  require_three_strands(w);
  const NormalForm nf = normal_form(w);
  const int e = nf.exponent_sum;

  if (e == 2 || e == -2 || e == 0) {
    constexpr int candidates[3][2] = {{1, 1}, {-1, -1}, {1, -1}};
    for (const auto& c : candidates) {
      if (c[0] + c[1] == e && normal_form(s1s2(c[0], c[1])) == nf) return UnknotClass{c[0], c[1]};
    }
  }
  for (int mu : {1, -1}) {
    const int k = e - mu;
    if (std::abs(k) < 2) continue;
    if (normal_form(s1s2(k, mu)) == nf) return TorusKnot2k{k, mu};
  }
  return GenericUnique{};
}

std::string to_string(const ClosureClass& c) {
  if (const auto* u = std::get_if<UnknotClass>(&c)) {
    return "UnknotClass(" + std::to_string(u->mu) + "," + std::to_string(u->tau) + ")";
  }
  if (const auto* t = std::get_if<TorusKnot2k>(&c)) {
    return "TorusKnot2k(" + std::to_string(t->k) + "," + std::to_string(t->mu) + ")";
  }
  return "GenericUnique";
}

bool kolee_both_signs(int u, int v, int w, int eps) {
  if (eps != 1 && eps != -1) throw BraidError("flype sign must be +1 or -1");
  return u == -eps || w == -eps || v == -2 * eps;
}

}  // namespace braidcalc::b3
