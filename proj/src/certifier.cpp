#include "braidcalc/certifier.hpp"

#include <cstdint>

#include "braidcalc/closure.hpp"

namespace braidcalc {

std::vector<std::string> FamilyParams::violations() const {
  std::vector<std::string> out;
  if (p <= 1) out.push_back("p <= 1");
  if (q <= 1) out.push_back("q <= 1");
  if (r <= 1) out.push_back("r <= 1");
  if (p + 1 == q) out.push_back("p + 1 = q");
  if (q == r) out.push_back("q = r");
  return out;
}

namespace {

BraidWord word_of(std::initializer_list<std::pair<int, int>> runs) {
  BraidWord out(3);
  for (auto [index, power] : runs) out = concat(out, BraidWord::power(3, index, power));
  return out;
}

const Template& negative_flype() {
  static const Template t = builtin_template(FlypeKind{Sign::Negative});
  return t;
}

}  // namespace

std::pair<BraidWord, BraidWord> family_words(const FamilyParams& params) {
  const int a = 2 * params.p + 1;
  const int b = 2 * params.r;
  const int c = 2 * params.q;
  return {word_of({{1, a}, {2, b}, {1, c}, {2, -1}}), word_of({{1, a}, {2, -1}, {1, c}, {2, b}})};
}

BraidingAssignment family_assignment(const FamilyParams& params) {
  return {{"P", BraidWord::power(2, 1, 2 * params.p + 1)},
          {"R", BraidWord::power(2, 1, 2 * params.r)},
          {"Q", BraidWord::power(2, 1, 2 * params.q)}};
}

BraidingAssignment obstruction_assignment() {
  return {{"P", BraidWord::power(2, 1, 3)}, {"R", BraidWord::power(2, 1, 4)}, {"Q", BraidWord::power(2, 1, -5)}};
}

std::string CertificationReport::verdict() const {
  if (certified) return "CERTIFIED_NOT_TRANSVERSALLY_SIMPLE";
  std::string reasons;
  for (const auto& f : failures) reasons += (reasons.empty() ? "" : "; ") + f;
  return "FAILED(" + reasons + ")";
}

CertificationReport certify(const FamilyParams& params) {
  CertificationReport rep;
  rep.params = params;
  auto fail = [&rep](std::string why) { rep.failures.push_back(std::move(why)); };

  // (1) admissibility
  rep.condition_violations = params.violations();
  rep.conditions_ok = rep.condition_violations.empty();
  if (!rep.conditions_ok) {
    std::string list;
    for (const auto& v : rep.condition_violations) list += (list.empty() ? "" : ", ") + v;
    fail("conditions: " + list);
  }

  std::tie(rep.tx_plus, rep.tx_minus) = family_words(params);
  const auto fa = family_assignment(params);
  rep.template_agrees = instantiate(negative_flype().plus, fa) == rep.tx_plus &&
                        instantiate(negative_flype().minus, fa) == rep.tx_minus;
  if (!rep.template_agrees) fail("template instantiation disagrees with the family words");

  // (2) Bennequin invariants
  rep.beta_plus = bennequin(rep.tx_plus);
  rep.beta_minus = bennequin(rep.tx_minus);
  rep.beta_expected = 2 * params.p + 2 * params.q + 2 * params.r - 3;
  rep.beta_formula_ok = rep.beta_plus == rep.beta_minus && rep.beta_plus == rep.beta_expected;
  if (!rep.beta_formula_ok) fail("beta mismatch");

  // (3) topological type, necessary condition
  rep.alexander_plus = alexander_polynomial(rep.tx_plus).to_string();
  rep.alexander_minus = alexander_polynomial(rep.tx_minus).to_string();
  rep.alexander_equal = rep.alexander_plus == rep.alexander_minus;
  if (!rep.alexander_equal) fail("Alexander polynomials differ");

  // (4) distinct conjugacy classes in B_3
  rep.normal_form_plus = b3::normal_form(rep.tx_plus);
  rep.normal_form_minus = b3::normal_form(rep.tx_minus);
  rep.conjugacy_distinct = rep.normal_form_plus != rep.normal_form_minus;
  if (!rep.conjugacy_distinct) fail("TX+ and TX- are conjugate in B3");

  // (5) neither word is an exceptional 3-braid class
  const auto cp = b3::classify_closure(rep.tx_plus);
  const auto cm = b3::classify_closure(rep.tx_minus);
  rep.class_plus = b3::to_string(cp);
  rep.class_minus = b3::to_string(cm);
  rep.not_unknot = !std::holds_alternative<b3::UnknotClass>(cp) && !std::holds_alternative<b3::UnknotClass>(cm);
  rep.not_torus = !std::holds_alternative<b3::TorusKnot2k>(cp) && !std::holds_alternative<b3::TorusKnot2k>(cm);
  if (!rep.not_unknot) fail("unknot class");
  if (!rep.not_torus) fail("(2,k) torus class");

  // (6) carried by the negative flype only
  rep.kolee_single_sign = !b3::kolee_both_signs(2 * params.p + 1, 2 * params.r, 2 * params.q, -1);
  if (!rep.kolee_single_sign) fail("admits flypes of both signs");

  // (7) per-component Bennequin obstruction on a fixed link assignment
  rep.obstruction.assignment = obstruction_assignment();
  rep.obstruction.plus_word = instantiate(negative_flype().plus, rep.obstruction.assignment);
  rep.obstruction.minus_word = instantiate(negative_flype().minus, rep.obstruction.assignment);
  rep.obstruction.component_table = per_component_beta_delta(negative_flype(), rep.obstruction.assignment);
  for (const auto& row : rep.obstruction.component_table) {
    if (row.changed()) rep.obstruction.swap_detected = true;
  }
  if (!rep.obstruction.swap_detected) fail("no component changes its beta under the flype");

  rep.certified = rep.failures.empty();
  return rep;
}

std::vector<FamilyParams> admissible_triples(int p_max, int q_max, int r_max) {
  std::vector<FamilyParams> out;
  for (int p = 2; p <= p_max; ++p)
    for (int q = 2; q <= q_max; ++q)
      for (int r = 2; r <= r_max; ++r) {
        const FamilyParams fp{p, q, r};
        if (fp.admissible()) out.push_back(fp);
      }
  return out;
}

std::vector<CertificationReport> sweep_serial(int p_max, int q_max, int r_max) {
  std::vector<CertificationReport> out;
  for (const auto& fp : admissible_triples(p_max, q_max, r_max)) out.push_back(certify(fp));
  return out;
}

std::vector<CertificationReport> sweep(int p_max, int q_max, int r_max) {
  const auto triples = admissible_triples(p_max, q_max, r_max);
  std::vector<CertificationReport> out(triples.size());
  const auto count = static_cast<std::int64_t>(triples.size());
  // Reports land in their triple's slot, so the schedule cannot reorder them.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = certify(triples[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace braidcalc
