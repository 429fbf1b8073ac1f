#include "braidcalc/templates.hpp"

#include <algorithm>
#include <set>

#include "braidcalc/errors.hpp"

namespace braidcalc {

BlockSkeleton::BlockSkeleton(int strands, std::vector<SkeletonItem> items)
    : strands_(strands), items_(std::move(items)) {
  if (strands_ < 1) throw BraidError("skeleton needs at least one strand");
  std::set<std::string> seen;
  for (const auto& item : items_) {
    if (const auto* c = std::get_if<CrossingItem>(&item)) {
      if (c->index < 1 || c->index > strands_ - 1) {
        throw BraidError("skeleton crossing s" + std::to_string(c->index) + " out of range");
      }
    } else {
      const auto& b = std::get<BlockSlot>(item);
      if (b.width < 2) throw BraidError("block " + b.id + " must meet at least 2 strands");
      if (b.start < 1 || b.start + b.width - 1 > strands_) {
        throw BraidError("block " + b.id + " does not fit in " + std::to_string(strands_) + " strands");
      }
      if (!seen.insert(b.id).second) throw BraidError("block " + b.id + " appears twice");
    }
  }
}

std::vector<const BlockSlot*> BlockSkeleton::blocks() const {
  std::vector<const BlockSlot*> out;
  for (const auto& item : items_) {
    if (const auto* b = std::get_if<BlockSlot>(&item)) out.push_back(b);
  }
  return out;
}

BraidWord rotate_block_word(const BraidWord& w) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (const auto& l : w.letters()) letters.emplace_back(w.strands() - l.index(), l.sign());
  return BraidWord(w.strands(), std::move(letters));
}

Instantiation instantiate_placed(const BlockSkeleton& sk, const BraidingAssignment& a) {
  std::vector<Letter> letters;
  std::vector<PlacedBlock> placed;
  for (const auto& item : sk.items()) {
    if (const auto* c = std::get_if<CrossingItem>(&item)) {
      letters.emplace_back(c->index, c->sign);
      continue;
    }
    const auto& slot = std::get<BlockSlot>(item);
    const auto it = a.find(slot.id);
    if (it == a.end()) throw MissingAssignment(slot.id);
    if (it->second.strands() != slot.width) throw WidthMismatch(slot.id, slot.width, it->second.strands());
    const BraidWord body = slot.rotated ? rotate_block_word(it->second) : it->second;
    const std::size_t begin = letters.size();
    for (const auto& l : body.letters()) letters.emplace_back(l.index() + slot.start - 1, l.sign());
    placed.push_back({slot, begin, letters.size()});
  }
  return {BraidWord(sk.strands(), std::move(letters)), std::move(placed)};
}

BraidWord instantiate(const BlockSkeleton& sk, const BraidingAssignment& a) {
  return instantiate_placed(sk, a).word;
}

namespace {

Template destabilize_template(const DestabilizeKind& k) {
  if (k.weight < 1) throw WeightConstraintViolation("destabilization weight must be >= 1");
  const int width = k.weight + 1;
  BlockSkeleton plus(width + 1, {BlockSlot{"P", 1, width}, CrossingItem{width, k.sign}});
  BlockSkeleton minus(width, {BlockSlot{"P", 1, width}});
  const std::string name = k.sign == Sign::Positive ? "positive destabilization" : "negative destabilization";
  return {name, std::move(plus), std::move(minus)};
}

Template exchange_template(const ExchangeKind& k) {
  if (k.weight < 1) throw WeightConstraintViolation("exchange weight must be >= 1");
  const int width = k.weight + 1;
  const int n = k.weight + 2;
  const int top = n - 1;
  BlockSkeleton plus(n, {BlockSlot{"P", 1, width}, CrossingItem{top, Sign::Positive}, BlockSlot{"Q", 1, width},
                         CrossingItem{top, Sign::Negative}});
  BlockSkeleton minus(n, {BlockSlot{"P", 1, width}, CrossingItem{top, Sign::Negative}, BlockSlot{"Q", 1, width},
                          CrossingItem{top, Sign::Positive}});
  return {"exchange", std::move(plus), std::move(minus)};
}

Template flype_template(const FlypeKind& k) {
  for (int weight : {k.w, k.w_prime, k.k, k.k_prime}) {
    if (weight < 1) throw WeightConstraintViolation("flype weights must be >= 1");
  }
  if (k.k_prime - k.w < 0) throw WeightConstraintViolation("flype weights must satisfy k' - w >= 0");
  if (k.w != 1 || k.w_prime != 1 || k.k != 1 || k.k_prime != 1) {
    throw WeightConstraintViolation("flype templates are only built with unit weights");
  }
  // R is turned over as it passes to the other side of the fixed crossing.
  BlockSkeleton plus(3, {BlockSlot{"P", 1, 2}, BlockSlot{"R", 2, 2}, BlockSlot{"Q", 1, 2}, CrossingItem{2, k.sign}});
  BlockSkeleton minus(3, {BlockSlot{"P", 1, 2}, CrossingItem{2, k.sign}, BlockSlot{"Q", 1, 2},
                          BlockSlot{"R", 2, 2, /*rotated=*/true}});
  const std::string name = k.sign == Sign::Positive ? "positive flype" : "negative flype";
  return {name, std::move(plus), std::move(minus)};
}

}  // namespace

Template builtin_template(const TemplateKind& kind) {
  return std::visit(
      [](const auto& k) -> Template {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, DestabilizeKind>) {
          return destabilize_template(k);
        } else if constexpr (std::is_same_v<K, ExchangeKind>) {
          return exchange_template(k);
        } else {
          return flype_template(k);
        }
      },
      kind);
}

std::vector<std::string> block_ids(const Template& t) {
  std::vector<std::string> out;
  for (const auto* b : t.plus.blocks()) out.push_back(b->id);
  return out;
}

namespace {

// Axis position of port j (1-based) of a placed block.
int port_position(const BlockSlot& slot, int j) {
  return slot.rotated ? slot.start + slot.width - j : slot.start + j - 1;
}

const PlacedBlock& find_block(const Instantiation& inst, const std::string& id) {
  for (const auto& b : inst.blocks) {
    if (b.slot.id == id) return b;
  }
  throw InconsistentCorrespondence("block " + id + " missing on one side of the template");
}

}  // namespace

ComponentCorrespondence component_correspondence(const Template& t, const BraidingAssignment& a) {
  ComponentCorrespondence out{instantiate_placed(t.plus, a), instantiate_placed(t.minus, a), {}, {}, {}, {}};
  out.plus_components = components(out.plus.word);
  out.minus_components = components(out.minus.word);
  const auto plus_rows = position_labels(out.plus.word, out.plus_components);
  const auto minus_rows = position_labels(out.minus.word, out.minus_components);

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> minus_of(out.plus_components.size(), unset);
  std::vector<std::size_t> plus_of(out.minus_components.size(), unset);

  auto pair_up = [&](std::size_t pc, std::size_t mc, const std::string& port) {
    if (minus_of[pc] == unset && plus_of[mc] == unset) {
      minus_of[pc] = mc;
      plus_of[mc] = pc;
      out.order.push_back(pc);
      return;
    }
    if (minus_of[pc] != mc || plus_of[mc] != pc) {
      throw InconsistentCorrespondence("port " + port + " pairs components inconsistently");
    }
  };

  for (const auto& pb : out.plus.blocks) {
    const PlacedBlock& mb = find_block(out.minus, pb.slot.id);
    if (mb.slot.width != pb.slot.width) {
      throw InconsistentCorrespondence("block " + pb.slot.id + " changes width across the template");
    }
    for (int side = 0; side < 2; ++side) {
      const std::size_t prow = side == 0 ? pb.begin : pb.end;
      const std::size_t mrow = side == 0 ? mb.begin : mb.end;
      for (int j = 1; j <= pb.slot.width; ++j) {
        const auto pc = static_cast<std::size_t>(plus_rows[prow][static_cast<std::size_t>(port_position(pb.slot, j) - 1)]);
        const auto mc = static_cast<std::size_t>(minus_rows[mrow][static_cast<std::size_t>(port_position(mb.slot, j) - 1)]);
        pair_up(pc, mc, pb.slot.id + (side == 0 ? ".in" : ".out") + std::to_string(j));
      }
    }
  }

  if (out.plus_components.size() != out.minus_components.size() ||
      std::find(minus_of.begin(), minus_of.end(), unset) != minus_of.end() ||
      std::find(plus_of.begin(), plus_of.end(), unset) != plus_of.end()) {
    throw InconsistentCorrespondence("block ports do not reach every component on both sides");
  }
  out.minus_of = std::move(minus_of);
  return out;
}

std::vector<ComponentBetaDelta> per_component_beta_delta(const Template& t, const BraidingAssignment& a) {
  const auto corr = component_correspondence(t, a);
  std::vector<ComponentBetaDelta> out;
  for (std::size_t rank = 0; rank < corr.order.size(); ++rank) {
    const std::size_t pc = corr.order[rank];
    const auto& plus = corr.plus_components.parts[pc];
    const auto& minus = corr.minus_components.parts[corr.minus_of[pc]];
    out.push_back({"L" + std::to_string(rank + 1), plus.members, minus.members, plus.beta, minus.beta});
  }
  return out;
}

}  // namespace braidcalc
