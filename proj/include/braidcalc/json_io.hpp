#pragma once

#include <json.hpp>

#include "braidcalc/certifier.hpp"
#include "braidcalc/closure.hpp"
#include "braidcalc/markov.hpp"
#include "braidcalc/templates.hpp"

namespace braidcalc {

// Reports use insertion-ordered objects so that parse + dump reproduces the
// emitted bytes.
using Json = nlohmann::ordered_json;

Json component_json(const ClosureComponent& c);
Json closure_json(const BraidWord& w);
Json beta_delta_json(const std::vector<ComponentBetaDelta>& rows);
Json report_json(const CertificationReport& rep);
Json sweep_json(const std::vector<CertificationReport>& reports);
Json verdict_json(const TowerVerdict& v);

/// Tower file: {mode, initial_word, moves:[{kind, sign?, conjugator?, split?}], states?}.
/// kind is one of stabilize, destabilize, conjugate, exchange; split is
/// [p_length, q_length]. Conjugators without `n=` take the strand count of
/// the state they act on. When `states` is absent the tower is replayed, and
/// a move that cannot be applied is reported as a StepMismatch at its step.
TowerVerdict validate_tower_json(const Json& doc);
Move parse_move(const Json& move, int strands);
Json move_json(const Move& move);

/// Template description: {kind, params, assignment:{block_id: word}}. Block
/// words are read on the block's width.
struct TemplateDescription {
  Template tmpl;
  BraidingAssignment assignment;
};

TemplateDescription parse_template_description(const Json& doc);

}  // namespace braidcalc
