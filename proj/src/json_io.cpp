#include "braidcalc/json_io.hpp"

#include "braidcalc/errors.hpp"

namespace braidcalc {

Json component_json(const ClosureComponent& c) {
  return Json{{"members", c.members}, {"strands", c.strands}, {"self_writhe", c.self_writhe}, {"beta", c.beta}};
}

Json closure_json(const BraidWord& w) {
  const auto comps = components(w);
  Json parts = Json::array();
  for (const auto& c : comps.parts) parts.push_back(component_json(c));
  return Json{{"word", w.to_string()},
              {"strands", w.strands()},
              {"exponent_sum", exponent_sum(w)},
              {"beta", bennequin(w)},
              {"components", std::move(parts)},
              {"linking_matrix", linking_matrix(comps).lk},
              {"alexander", alexander_polynomial(w).to_string()}};
}

Json beta_delta_json(const std::vector<ComponentBetaDelta>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"component", r.label},
                       {"members_plus", r.plus_members},
                       {"members_minus", r.minus_members},
                       {"beta_plus", r.beta_plus},
                       {"beta_minus", r.beta_minus}});
  }
  return out;
}

Json report_json(const CertificationReport& rep) {
  Json assignment = Json::object();
  for (const char* id : {"P", "R", "Q"}) assignment[id] = rep.obstruction.assignment.at(id).to_string();
  Json obstruction{{"assignment", std::move(assignment)},
                   {"plus_word", rep.obstruction.plus_word.to_string()},
                   {"minus_word", rep.obstruction.minus_word.to_string()},
                   {"component_table", beta_delta_json(rep.obstruction.component_table)},
                   {"swap_detected", rep.obstruction.swap_detected}};
  Json checks{{"conditions_ok", rep.conditions_ok},
              {"condition_violations", rep.condition_violations},
              {"template_agrees", rep.template_agrees},
              {"beta_plus", rep.beta_plus},
              {"beta_minus", rep.beta_minus},
              {"beta_expected", rep.beta_expected},
              {"beta_formula_ok", rep.beta_formula_ok},
              {"alexander_plus", rep.alexander_plus},
              {"alexander_minus", rep.alexander_minus},
              {"alexander_equal", rep.alexander_equal},
              {"normal_form_plus", rep.normal_form_plus.to_string()},
              {"normal_form_minus", rep.normal_form_minus.to_string()},
              {"conjugacy_distinct", rep.conjugacy_distinct},
              {"class_plus", rep.class_plus},
              {"class_minus", rep.class_minus},
              {"not_unknot", rep.not_unknot},
              {"not_torus", rep.not_torus},
              {"kolee_single_sign", rep.kolee_single_sign},
              {"obstruction", std::move(obstruction)}};
  return Json{{"params", Json{{"p", rep.params.p}, {"q", rep.params.q}, {"r", rep.params.r}}},
              {"words", Json{{"tx_plus", rep.tx_plus.to_string()}, {"tx_minus", rep.tx_minus.to_string()}}},
              {"checks", std::move(checks)},
              {"verdict", rep.verdict()}};
}

Json sweep_json(const std::vector<CertificationReport>& reports) {
  Json list = Json::array();
  std::size_t certified = 0;
  for (const auto& r : reports) {
    list.push_back(report_json(r));
    certified += r.certified ? 1 : 0;
  }
  return Json{{"count", reports.size()}, {"certified", certified}, {"reports", std::move(list)}};
}

Json verdict_json(const TowerVerdict& v) {
  Json faults = Json::array();
  for (const auto& f : v.faults) {
    faults.push_back(Json{{"kind", to_string(f.kind)}, {"step", f.step}, {"detail", f.detail}});
  }
  return Json{{"valid", v.valid},
              {"counts", Json{{"v_plus", v.counts.v_plus},
                              {"v_minus", v.counts.v_minus},
                              {"s_plus", v.counts.s_plus},
                              {"s_minus", v.counts.s_minus}}},
              {"betas", v.betas},
              {"beta_constant", v.beta_constant},
              {"eq4_holds", v.eq4_holds},
              {"faults", std::move(faults)}};
}

namespace {

const Json& require(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

Sign read_sign(const Json& obj) {
  const Json& s = require(obj, "sign");
  if (!s.is_number_integer()) throw ParseError("sign must be an integer");
  try {
    return sign_from_int(s.get<int>());
  } catch (const BraidError& e) {
    throw ParseError(e.what());
  }
}

std::string read_string(const Json& obj, const char* key) {
  const Json& v = require(obj, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

TowerMode read_mode(const Json& doc) {
  const std::string m = read_string(doc, "mode");
  if (m == "transversal") return TowerMode::Transversal;
  if (m == "topological") return TowerMode::Topological;
  throw ParseError("unknown tower mode '" + m + "'");
}

}  // namespace

Move parse_move(const Json& move, int strands) {
  const std::string kind = read_string(move, "kind");
  if (kind == "stabilize") return Stabilize{read_sign(move)};
  if (kind == "destabilize") return Destabilize{read_sign(move)};
  if (kind == "conjugate") {
    const std::string text = read_string(move, "conjugator");
    const bool explicit_n = text.find("n=") != std::string::npos;
    return ConjugateBy{BraidWord::parse(text, explicit_n ? std::nullopt : std::optional<int>(strands))};
  }
  if (kind == "exchange") {
    const Json& split = require(move, "split");
    if (!split.is_array() || split.size() != 2 || !split[0].is_number_unsigned() || !split[1].is_number_unsigned()) {
      throw ParseError("split must be [p_length, q_length]");
    }
    return Exchange{{split[0].get<std::size_t>(), split[1].get<std::size_t>()}};
  }
  throw ParseError("unknown move kind '" + kind + "'");
}

Json move_json(const Move& move) {
  return std::visit(
      [](const auto& m) -> Json {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Stabilize>) {
          return Json{{"kind", "stabilize"}, {"sign", to_int(m.sign)}};
        } else if constexpr (std::is_same_v<M, Destabilize>) {
          return Json{{"kind", "destabilize"}, {"sign", to_int(m.sign)}};
        } else if constexpr (std::is_same_v<M, ConjugateBy>) {
          return Json{{"kind", "conjugate"},
                      {"conjugator", "n=" + std::to_string(m.conjugator.strands()) + " " + m.conjugator.to_string()}};
        } else {
          return Json{{"kind", "exchange"}, {"split", {m.split.p_length, m.split.q_length}}};
        }
      },
      move);
}

TowerVerdict validate_tower_json(const Json& doc) {
  const TowerMode mode = read_mode(doc);
  const BraidWord initial = BraidWord::parse(read_string(doc, "initial_word"));
  const Json& moves_doc = require(doc, "moves");
  if (!moves_doc.is_array()) throw ParseError("moves must be an array");

  if (doc.contains("states")) {
    const Json& states_doc = doc.at("states");
    if (!states_doc.is_array() || states_doc.size() != moves_doc.size() + 1) {
      throw ParseError("states must list one more word than moves");
    }
    std::vector<BraidWord> states;
    for (const auto& s : states_doc) {
      if (!s.is_string()) throw ParseError("states must be strings");
      states.push_back(BraidWord::parse(s.get<std::string>()));
    }
    if (states.front() != initial) throw ParseError("states[0] differs from initial_word");
    std::vector<Move> moves;
    for (std::size_t k = 0; k < moves_doc.size(); ++k) moves.push_back(parse_move(moves_doc[k], states[k].strands()));
    return validate_tower(MarkovTower(mode, std::move(states), std::move(moves)));
  }

  std::vector<Move> moves;
  std::vector<BraidWord> states{initial};
  for (std::size_t k = 0; k < moves_doc.size(); ++k) {
    Move m = parse_move(moves_doc[k], states.back().strands());
    try {
      states.push_back(apply_move(states.back(), m));
      moves.push_back(std::move(m));
    } catch (const BraidError& e) {
      // Validate what replays, then record the step that does not.
      TowerVerdict v = validate_tower(MarkovTower(mode, states, moves));
      if (const auto* d = std::get_if<Destabilize>(&m); d && mode == TowerMode::Transversal && d->sign == Sign::Negative) {
        v.faults.push_back({TowerFault::Kind::IllegalMoveForMode, k, describe(m)});
      }
      v.faults.push_back({TowerFault::Kind::StepMismatch, k, e.what()});
      v.valid = false;
      return v;
    }
  }
  return validate_tower(MarkovTower(mode, std::move(states), std::move(moves)));
}

TemplateDescription parse_template_description(const Json& doc) {
  const std::string kind = read_string(doc, "kind");
  const Json params = doc.contains("params") ? doc.at("params") : Json::object();
  auto int_param = [&params](const char* key, int fallback) {
    if (!params.contains(key)) return fallback;
    if (!params.at(key).is_number_integer()) throw ParseError(std::string("param '") + key + "' must be an integer");
    return params.at(key).get<int>();
  };
  auto sign_param = [&]() {
    try {
      return sign_from_int(int_param("sign", 0));
    } catch (const BraidError& e) {
      throw ParseError(std::string("params.sign: ") + e.what());
    }
  };

  TemplateKind tk;
  if (kind == "destabilize") {
    tk = DestabilizeKind{sign_param(), int_param("weight", 1)};
  } else if (kind == "exchange") {
    tk = ExchangeKind{int_param("weight", 1)};
  } else if (kind == "flype") {
    tk = FlypeKind{sign_param(), int_param("w", 1), int_param("w_prime", 1), int_param("k", 1), int_param("k_prime", 1)};
  } else {
    throw ParseError("unknown template kind '" + kind + "'");
  }

  TemplateDescription out{builtin_template(tk), {}};
  const Json& assignment = require(doc, "assignment");
  if (!assignment.is_object()) throw ParseError("assignment must be an object");
  for (const auto* slot : out.tmpl.plus.blocks()) {
    if (!assignment.contains(slot->id)) throw MissingAssignment(slot->id);
    const Json& word = assignment.at(slot->id);
    if (!word.is_string()) throw ParseError("assignment for " + slot->id + " must be a string");
    out.assignment.emplace(slot->id, BraidWord::parse(word.get<std::string>(), slot->width));
  }
  for (const auto& [id, _] : assignment.items()) {
    if (!out.assignment.contains(id)) throw ParseError("template has no block '" + id + "'");
  }
  return out;
}

}  // namespace braidcalc
