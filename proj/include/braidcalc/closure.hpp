#pragma once

#include <vector>

#include "braidcalc/braid_word.hpp"
#include "braidcalc/laurent.hpp"

namespace braidcalc {

/// One component of the closed braid.
struct ClosureComponent {
  std::vector<int> members;  // bottom positions on this cycle, ascending
  int strands = 0;           // b_i
  int self_writhe = 0;       // e_i, crossings with both strands on this component
  int beta = 0;              // e_i - b_i

  friend bool operator==(const ClosureComponent&, const ClosureComponent&) = default;
};

/// Components are ordered by their smallest member position. `mixed(i, j)`
/// is the signed count of crossings between components i and j.
struct LinkComponents {
  std::vector<ClosureComponent> parts;
  std::vector<std::vector<int>> mixed;

  std::size_t size() const noexcept { return parts.size(); }
  /// Index into `parts` of the component containing a bottom position.
  std::size_t component_of(int position) const;

  friend bool operator==(const LinkComponents&, const LinkComponents&) = default;
};

/// Symmetric, zero diagonal; entry (i, j) = mixed(i, j) / 2.
struct LinkingMatrix {
  std::vector<std::vector<int>> lk;

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;
};

LinkComponents components(const BraidWord& w);
LinkingMatrix linking_matrix(const BraidWord& w);
LinkingMatrix linking_matrix(const LinkComponents& c);

/// Component label of the strand at each axis position, captured after
/// every letter. Row 0 is the bottom of the word, row k is after letter k.
std::vector<std::vector<int>> position_labels(const BraidWord& w, const LinkComponents& c);

/// Reduced Burau matrix, (n-1) x (n-1).
LaurentMatrix reduced_burau(const Letter& l, int strands);
LaurentMatrix reduced_burau(const BraidWord& w);

/// One-variable Alexander polynomial of the closure from the reduced Burau
/// determinant, normalized (lowest degree 0, positive top coefficient).
LaurentPoly alexander_polynomial(const BraidWord& w);

}  // namespace braidcalc
