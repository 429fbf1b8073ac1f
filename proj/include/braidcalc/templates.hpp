#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "braidcalc/braid_word.hpp"
#include "braidcalc/closure.hpp"

namespace braidcalc {

/// A fixed crossing of the diagram.
struct CrossingItem {
  int index;
  Sign sign;
};

/// An opaque block occupying axis positions [start, start + width). A block
/// carried `rotated` has been turned over by the template isotopy: its
/// ports read right to left and its braid is mirrored s_i -> s_{width-i}
/// (the crossing signs are unchanged by a half-turn).
struct BlockSlot {
  std::string id;
  int start;
  int width;
  bool rotated = false;
};

using SkeletonItem = std::variant<CrossingItem, BlockSlot>;

/// A block-strand diagram linearized into a word with holes.
class BlockSkeleton {
 public:
  BlockSkeleton(int strands, std::vector<SkeletonItem> items);

  int strands() const noexcept { return strands_; }
  const std::vector<SkeletonItem>& items() const noexcept { return items_; }
  std::vector<const BlockSlot*> blocks() const;

 private:
  int strands_;
  std::vector<SkeletonItem> items_;
};

using BraidingAssignment = std::map<std::string, BraidWord>;

/// Where each block landed in an instantiated word.
struct PlacedBlock {
  BlockSlot slot;
  std::size_t begin;  // letter offset of the block's first letter
  std::size_t end;    // one past its last letter
};

struct Instantiation {
  BraidWord word;
  std::vector<PlacedBlock> blocks;
};

Instantiation instantiate_placed(const BlockSkeleton& sk, const BraidingAssignment& a);
BraidWord instantiate(const BlockSkeleton& sk, const BraidingAssignment& a);

/// Braid of a block after a half-turn: s_i -> s_{width - i}.
BraidWord rotate_block_word(const BraidWord& w);

/// A pair of diagrams over the same blocks; block ids are the port
/// correspondence.
struct Template {
  std::string name;
  BlockSkeleton plus;
  BlockSkeleton minus;
};

struct DestabilizeKind {
  Sign sign;
  int weight = 1;
};
struct ExchangeKind {
  int weight = 1;
};
struct FlypeKind {
  Sign sign;
  int w = 1;
  int w_prime = 1;
  int k = 1;
  int k_prime = 1;
};

using TemplateKind = std::variant<DestabilizeKind, ExchangeKind, FlypeKind>;

/// Built-in templates:
///  destabilize(sign, w): P on w + 1 strands, then s_{w+1}^sign  |  P
///  exchange(w):          P s_{w+1} Q s_{w+1}^-1  |  P s_{w+1}^-1 Q s_{w+1}
///  flype(eps):           P R Q s2^eps  |  P s2^eps Q R(rotated)
/// Throws WeightConstraintViolation for bad weights. Flypes are built with
/// unit weights only; the half-twists hidden by heavier cables have no
/// settled convention.
Template builtin_template(const TemplateKind& kind);
std::vector<std::string> block_ids(const Template& t);

/// Closure components of both sides with the bijection induced by block
/// ports. minus_of[i] is the minus component matched to plus component i;
/// order[] lists plus components in first-port order (block order, in-ports
/// then out-ports, left to right), so order[0] is the component through the
/// first block's left in-port.
struct ComponentCorrespondence {
  Instantiation plus;
  Instantiation minus;
  LinkComponents plus_components;
  LinkComponents minus_components;
  std::vector<std::size_t> minus_of;
  std::vector<std::size_t> order;
};

ComponentCorrespondence component_correspondence(const Template& t, const BraidingAssignment& a);

struct ComponentBetaDelta {
  std::string label;  // L1, L2, ... in first-port order
  std::vector<int> plus_members;
  std::vector<int> minus_members;
  int beta_plus;
  int beta_minus;
  bool changed() const noexcept { return beta_plus != beta_minus; }
};

std::vector<ComponentBetaDelta> per_component_beta_delta(const Template& t, const BraidingAssignment& a);

}  // namespace braidcalc
