#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "braidcalc/braid_word.hpp"

// Conjugacy in B_3 through the central extension
//   1 -> <Delta^2> -> B_3 -> Z/2 * Z/3 -> 1,
// with X the image of Delta = s1 s2 s1 (order 2) and Y the image of s1 s2
// (order 3).
namespace braidcalc::b3 {

enum class FpLetter : std::uint8_t { X = 0, Y = 1, Y2 = 2 };  // order used for canonical rotations

std::string to_string(FpLetter l);

/// A reduced word in Z/2 * Z/3: letters alternate between the X factor and
/// the {Y, Y2} factor. Reduction happens on every append.
class FreeProductWord {
 public:
  FreeProductWord() = default;
  explicit FreeProductWord(const std::vector<FpLetter>& letters);

  void append(FpLetter l);
  FreeProductWord& operator*=(const FreeProductWord& rhs);
  friend FreeProductWord operator*(FreeProductWord lhs, const FreeProductWord& rhs) { return lhs *= rhs; }

  const std::vector<FpLetter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// Conjugate word whose first and last letters lie in different factors
  /// (or of length <= 1).
  FreeProductWord cyclically_reduced() const;
  bool is_cyclically_reduced() const noexcept;

  std::string to_string() const;  // "[Y,X,Y2,X]"

  friend bool operator==(const FreeProductWord&, const FreeProductWord&) = default;

 private:
  std::vector<FpLetter> letters_;
};

/// Conjugacy-class invariant: exponent sum pins the central Delta^2 power,
/// cyclic_word is the lexicographically least rotation of the cyclically
/// reduced quotient image. A cyclic_word of length <= 1 is a torsion class.
struct NormalForm {
  int exponent_sum = 0;
  std::vector<FpLetter> cyclic_word;

  bool is_torsion() const noexcept { return cyclic_word.size() <= 1; }
  std::string to_string() const;  // "e=15; [X,Y,X,Y2]"

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

FreeProductWord quotient_image(const BraidWord& w);
NormalForm normal_form(const BraidWord& w);
bool conjugate_in_b3(const BraidWord& lhs, const BraidWord& rhs);

/// Batch normal forms. `normal_forms` runs the words across OpenMP threads;
/// `normal_forms_serial` is the single-threaded reference.
std::vector<NormalForm> normal_forms(const std::vector<BraidWord>& words);
std::vector<NormalForm> normal_forms_serial(const std::vector<BraidWord>& words);

struct UnknotClass {
  int mu;
  int tau;  // representative s1^mu s2^tau
  friend bool operator==(const UnknotClass&, const UnknotClass&) = default;
};
struct TorusKnot2k {
  int k;
  int mu;  // representative s1^k s2^mu
  friend bool operator==(const TorusKnot2k&, const TorusKnot2k&) = default;
};
struct GenericUnique {
  friend bool operator==(const GenericUnique&, const GenericUnique&) = default;
};

using ClosureClass = std::variant<UnknotClass, TorusKnot2k, GenericUnique>;

/// Recognizes the closed 3-braid classes with more than one conjugacy class
/// of 3-braid representatives that can be found from the exponent sum alone:
/// the three unknot classes and the (2,k) torus classes.
ClosureClass classify_closure(const BraidWord& w);
std::string to_string(const ClosureClass& c);

/// True iff s1^u s2^v s1^w s2^eps admits flypes of both signs.
bool kolee_both_signs(int u, int v, int w, int eps);

// Bounded search oracle, independent of the quotient machinery: words are
// compared through the (faithful on B_3) reduced Burau representation.

struct Conjugate {
  BraidWord conjugator;  // g with g * lhs * g^-1 == rhs
};
struct NotConjugate {
  std::string witness;
};
struct Unresolved {};

using OracleResult = std::variant<Conjugate, NotConjugate, Unresolved>;

enum class Battery : unsigned {
  ExponentSum = 1u << 0,
  BurauCharPoly = 1u << 1,   // trace of reduced Burau at several rational t
  ModularImage = 1u << 2,    // conjugacy class of the image in SL(2, Z/m)
  IntegralImage = 1u << 3,   // conjugacy class of the image in SL(2, Z)
  All = (1u << 4) - 1,
};

constexpr Battery operator|(Battery a, Battery b) {
  return static_cast<Battery>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has(Battery set, Battery b) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(b)) != 0;
}

OracleResult brute_force_conjugacy_oracle(const BraidWord& lhs, const BraidWord& rhs,
                                          int conjugator_bound, Battery batteries = Battery::All);

}  // namespace braidcalc::b3
